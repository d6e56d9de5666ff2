//! Discrete Shannon entropy and Kullback–Leibler divergence of the
//! Christoffel-normalized distribution
//!
//! ```text
//! Ψ_n(x) = (λ_n(x) p_0(x)², …, λ_n(x) p_{n−1}(x)²),   λ_n(x) = 1 / Σ_{j<n} p_j(x)²
//! ```
//!
//! for orthonormal polynomials of a generalized Jacobi weight
//! (1−x)^α (1+x)^β h(x) on [−1, 1], together with the exact Chebyshev zero
//! entropies and the large-n limits of the divergence.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`specfun`] | digamma, odd zeta values, ℛ (closed form and series), ℱ |
//! | [`orthopoly`] | weights, recurrences, Gauss–Jacobi rules, Christoffel functions |
//! | [`entropy`] | Ψ_n(x), entropy, divergence, closed-form zero entropies |
//! | [`asymptotics`] | phase function, limiting divergence, zero subsequences, identity checks |
//! | [`exec`] | sequential / rayon execution of sweeps |
//!
//! ```
//! use christoffel_entropy::{entropy, orthopoly};
//!
//! let rec = orthopoly::jacobi_recurrence(-0.5, -0.5, 3).unwrap();
//! let dist = entropy::psi_distribution(&rec, 0.0, 3).unwrap();
//! let s = entropy::shannon_entropy(&dist);
//! assert!((s - (3f64.ln() - 2.0 / 3.0 * 2f64.ln())).abs() < 1e-14);
//! ```

// NaN-rejecting checks are written as !(a < b) on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod entropy;
pub mod error;
pub mod exec;
pub mod orthopoly;
pub mod specfun;

pub use error::{Error, Result};
