//! The distribution Ψ_n(x), its Shannon entropy and Kullback–Leibler
//! divergence from the uniform distribution, and the closed-form entropies at
//! the zeros of the Chebyshev polynomials.

use std::f64::consts::LN_2;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::orthopoly::{
    chebyshev_orthonormal, chebyshev_zero_angle, christoffel, ChebKind, RecurrenceCoefficients,
};
use crate::specfun::r_function;

/// Tolerance on Σ probs when validating a distribution.
pub const SUM_TOLERANCE: f64 = 1e-12;

/// A probability vector (ν_1, …, ν_n).
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Config(
                "distribution must have at least one cell".into(),
            ));
        }
        if let Some(p) = probs.iter().find(|p| !(**p >= 0.0 && p.is_finite())) {
            return Err(Error::Config(format!(
                "probability {p} is negative or not finite"
            )));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::Config(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Self { probs })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn shannon(&self) -> f64 {
        shannon_entropy(self)
    }

    pub fn divergence(&self) -> f64 {
        kl_divergence(self)
    }
}

#[inline]
fn neg_plogp(p: f64) -> f64 {
    if p > 0.0 {
        -p * p.ln()
    } else {
        0.0
    }
}

/// −Σ ν_i log ν_i, with 0·log 0 = 0.
pub fn shannon_entropy(dist: &DiscreteDistribution) -> f64 {
    dist.probs.iter().map(|&p| neg_plogp(p)).sum()
}

/// Divergence from the uniform distribution, log n − 𝒮(ν).
pub fn kl_divergence(dist: &DiscreteDistribution) -> f64 {
    (dist.len() as f64).ln() - shannon_entropy(dist)
}

/// Ψ_n(x) with cells λ_n(x) p_{j−1}(x)², j = 1..n.
pub fn psi_distribution(
    rec: &RecurrenceCoefficients,
    x: f64,
    n: usize,
) -> Result<DiscreteDistribution> {
    let lambda = christoffel(rec, x, n)?;
    let probs = rec
        .orthonormal_iter(x)
        .take(n)
        .map(|p| lambda * p * p)
        .collect();
    Ok(DiscreteDistribution { probs })
}

/// 𝒮(Ψ_n(x)) without materializing the distribution (two recurrence passes).
pub fn shannon_at(rec: &RecurrenceCoefficients, x: f64, n: usize) -> Result<f64> {
    let lambda = christoffel(rec, x, n)?;
    Ok(rec
        .orthonormal_iter(x)
        .take(n)
        .map(|p| neg_plogp(lambda * p * p))
        .sum())
}

/// 𝒟(Ψ_n(x)) = log n − 𝒮(Ψ_n(x)).
pub fn divergence_at(rec: &RecurrenceCoefficients, x: f64, n: usize) -> Result<f64> {
    Ok((n as f64).ln() - shannon_at(rec, x, n)?)
}

/// The same entropy through the kernel split
/// −log λ_n(x) − λ_n(x) Σ p_i(x)² log p_i(x)².
pub fn entropy_via_kernel_split(rec: &RecurrenceCoefficients, x: f64, n: usize) -> Result<f64> {
    let lambda = christoffel(rec, x, n)?;
    let weighted: f64 = rec
        .orthonormal_iter(x)
        .take(n)
        .map(|p| {
            let q = p * p;
            if q > 0.0 {
                q * q.ln()
            } else {
                0.0
            }
        })
        .sum();
    Ok(-lambda.ln() - lambda * weighted)
}

/// Binary GCD.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// Closed-form entropy at the j-th zero of the orthonormal Chebyshev T_n:
/// log n + log 2 − 1 + (log 2)/n − ℛ(d/(2n)), d = gcd(2j−1, n).
pub fn zero_entropy_first_kind(n: usize, j: usize) -> Result<f64> {
    chebyshev_zero_angle(ChebKind::First, n, j)?;
    let d = gcd((2 * j - 1) as u64, n as u64);
    let nf = n as f64;
    Ok(nf.ln() + LN_2 - 1.0 + LN_2 / nf - r_function(d as f64 / (2.0 * nf))?)
}

/// Closed-form entropy at the j-th zero of the orthonormal Chebyshev U_n:
/// log(n+1) + log 2 − 1 − ℛ(d/(n+1)), d = gcd(j, n+1).
pub fn zero_entropy_second_kind(n: usize, j: usize) -> Result<f64> {
    chebyshev_zero_angle(ChebKind::Second, n, j)?;
    let d = gcd(j as u64, (n + 1) as u64);
    let m = (n + 1) as f64;
    Ok(m.ln() + LN_2 - 1.0 - r_function(d as f64 / m)?)
}

pub fn zero_entropy(kind: ChebKind, n: usize, j: usize) -> Result<f64> {
    match kind {
        ChebKind::First => zero_entropy_first_kind(n, j),
        ChebKind::Second => zero_entropy_second_kind(n, j),
    }
}

/// 𝒮(Ψ_n(cos θ)) for a Chebyshev weight, from the explicit trigonometric
/// polynomials rather than the recurrence.
pub fn chebyshev_entropy_at_angle(kind: ChebKind, n: usize, theta: f64) -> f64 {
    let k: f64 = (0..n)
        .map(|i| chebyshev_orthonormal(kind, i, theta).powi(2))
        .sum();
    (0..n)
        .map(|i| neg_plogp(chebyshev_orthonormal(kind, i, theta).powi(2) / k))
        .sum()
}

/// Direct entropy at ζ_j^(n).
pub fn chebyshev_zero_entropy_direct(kind: ChebKind, n: usize, j: usize) -> Result<f64> {
    let theta = chebyshev_zero_angle(kind, n, j)?;
    Ok(chebyshev_entropy_at_angle(kind, n, theta))
}

/// Largest |closed form − direct| over all zeros of p_n, n = 1..=n_max.
pub fn zero_closed_form_max_error(kind: ChebKind, n_max: usize, exec: Execution) -> Result<f64> {
    let ns: Vec<usize> = (1..=n_max).collect();
    let per_n = exec.try_map(&ns, |&n| -> Result<f64> {
        let mut worst: f64 = 0.0;
        for j in 1..=n {
            let diff = zero_entropy(kind, n, j)? - chebyshev_zero_entropy_direct(kind, n, j)?;
            worst = worst.max(diff.abs());
        }
        Ok(worst)
    })?;
    Ok(per_n.into_iter().fold(0.0, f64::max))
}

/// One output row: entropy and divergence of Ψ_n(x), with the limiting
/// divergence and the gap 𝒟 − 𝒟_∞ when an angle was declared.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub n: usize,
    pub x: f64,
    pub shannon: f64,
    pub divergence: f64,
    pub d_infinity: Option<f64>,
    pub gap: Option<f64>,
}

impl EntropyReport {
    pub const CSV_HEADER: [&'static str; 6] =
        ["n", "x", "shannon", "divergence", "d_infinity", "gap"];

    pub fn new(n: usize, x: f64, shannon: f64, d_infinity: Option<f64>) -> Self {
        let divergence = (n as f64).ln() - shannon;
        Self {
            n,
            x,
            shannon,
            divergence,
            d_infinity,
            gap: d_infinity.map(|d| divergence - d),
        }
    }

    /// Computes the row for a recurrence at (x, n).
    pub fn compute(
        rec: &RecurrenceCoefficients,
        x: f64,
        n: usize,
        d_infinity: Option<f64>,
    ) -> Result<Self> {
        Ok(Self::new(n, x, shannon_at(rec, x, n)?, d_infinity))
    }

    /// CSV fields in header order; absent values are empty strings.
    pub fn csv_fields(&self) -> [String; 6] {
        let opt = |v: Option<f64>| v.map(format_float).unwrap_or_default();
        [
            self.n.to_string(),
            format_float(self.x),
            format_float(self.shannon),
            format_float(self.divergence),
            opt(self.d_infinity),
            opt(self.gap),
        ]
    }
}

/// 17 significant digits, scientific notation.
pub fn format_float(v: f64) -> String {
    // adding +0.0 maps −0.0 to 0.0
    format!("{:.16e}", v + 0.0)
}
