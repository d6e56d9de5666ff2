//! Generalized Jacobi weights and their orthonormal polynomials.

mod chebyshev;
mod quadrature;
mod recurrence;
mod weight;

pub use chebyshev::{chebyshev_orthonormal, chebyshev_zero, chebyshev_zero_angle, ChebKind};
pub use quadrature::{
    gauss_jacobi, gauss_jacobi_newton, golub_welsch, QuadratureRule, NEWTON_THRESHOLD,
};
pub use recurrence::{
    christoffel, eval_orthonormal, jacobi_recurrence, recurrence_for, stieltjes_on_rule,
    stieltjes_recurrence, stieltjes_recurrence_with, OrthonormalIter, OrthonormalValues,
    RecurrenceCoefficients, StieltjesOptions,
};
pub use weight::{chebyshev_t_series, WeightSpec};
