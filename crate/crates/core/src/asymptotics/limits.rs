use std::f64::consts::{FRAC_PI_4, LN_2, PI};

use crate::asymptotics::angle::{AngleClass, RationalAngle};
use crate::asymptotics::phase::phase;
use crate::entropy::divergence_at;
use crate::error::{domain, Result};
use crate::orthopoly::{christoffel, recurrence_for, RecurrenceCoefficients, WeightSpec};
use crate::specfun::{entropy_integrand, r_closed};

/// 𝒟_∞ when θ/π is irrational: 1 − log 2.
pub const IRRATIONAL_D_INFINITY: f64 = 1.0 - LN_2;

/// ∫_0^1 ℱ(cos πy) dy = ½ − log 2, the irrational limit of Ŝ_n.
pub const IRRATIONAL_S_HAT: f64 = 0.5 - LN_2;

fn oscillation(weight: &WeightSpec, theta: f64) -> Result<impl Fn(usize) -> f64> {
    let shift = phase(weight, theta)? - FRAC_PI_4;
    Ok(move |i: usize| entropy_integrand(((i as f64 + 0.5) * theta + shift).cos()))
}

/// Ŝ_{k,s} = (1/k) Σ_{i=0}^{k−1} ℱ(cos((i+½)πs/k + φ(cos πs/k) − π/4)).
pub fn s_hat_ks(weight: &WeightSpec, angle: RationalAngle) -> Result<f64> {
    let g = oscillation(weight, angle.theta())?;
    let k = angle.k() as usize;
    Ok((0..k).map(g).sum::<f64>() / k as f64)
}

/// Ŝ_n(cos θ) = (1/n) Σ_{i=0}^{n−1} ℱ(cos((i+½)θ + φ(cos θ) − π/4)).
pub fn s_hat_n_empirical(weight: &WeightSpec, theta: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(domain("s_hat_n_empirical", "n must be at least 1"));
    }
    let g = oscillation(weight, theta)?;
    Ok((0..n).map(g).sum::<f64>() / n as f64)
}

/// Average of a k-periodic sequence over its first n terms, split against the
/// one-period mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodicAverage {
    /// (1/n) Σ_{i<n} g(i)
    pub average: f64,
    /// (1/k) Σ_{i<k} g(i)
    pub period_mean: f64,
    /// average − period_mean
    pub remainder: f64,
    /// (1/n)(−(q+1)/k Σ_{i<k} g(i) + Σ_{i≤q} g(i)) with n − 1 = pk + q
    pub correction: f64,
}

pub fn periodic_average<G: Fn(usize) -> f64>(
    g: G,
    period: usize,
    n: usize,
) -> Result<PeriodicAverage> {
    if period == 0 || n == 0 {
        return Err(domain("periodic_average", "period and n must be positive"));
    }
    let one_period: Vec<f64> = (0..period).map(&g).collect();
    let period_sum: f64 = one_period.iter().sum();
    let average = (0..n).map(|i| one_period[i % period]).sum::<f64>() / n as f64;
    let period_mean = period_sum / period as f64;
    let q = (n - 1) % period;
    let head: f64 = one_period[..=q].iter().sum();
    let correction = (-(q as f64 + 1.0) / period as f64 * period_sum + head) / n as f64;
    Ok(PeriodicAverage {
        average,
        period_mean,
        remainder: average - period_mean,
        correction,
    })
}

/// Limiting divergence 𝒟_∞(cos θ).
pub fn d_infinity(weight: &WeightSpec, angle: &AngleClass) -> Result<f64> {
    match angle {
        AngleClass::Irrational(_) => Ok(IRRATIONAL_D_INFINITY),
        AngleClass::Rational(r) => Ok(LN_2 + 2.0 * s_hat_ks(weight, *r)?),
    }
}

/// Chebyshev-T value of 𝒟_∞ at θ/π = s/k through ℛ:
/// 1 − log 2 + ℛ(1/k) for even k, 1 − log 2 + 2[ℛ(1/(2k)) − ½ℛ(1/k)] for odd k.
pub fn chebyshev_t_limit(k: u64) -> Result<f64> {
    if k < 2 {
        return Err(domain(
            "chebyshev_t_limit",
            format!("k = {k} must be at least 2"),
        ));
    }
    let kf = k as f64;
    let r1 = r_closed(1.0 / kf)?;
    Ok(if k.is_multiple_of(2) {
        IRRATIONAL_D_INFINITY + r1
    } else {
        IRRATIONAL_D_INFINITY + 2.0 * (r_closed(0.5 / kf)? - 0.5 * r1)
    })
}

/// 2ℛ(1/(2k)) − ℛ(1/k): upper bound for the limsup of the zero-entropy gap
/// (first kind, k odd). Negative for every k ≥ 2.
pub fn odd_gap_bound(k: u64) -> Result<f64> {
    if k < 2 {
        return Err(domain(
            "odd_gap_bound",
            format!("k = {k} must be at least 2"),
        ));
    }
    let kf = k as f64;
    Ok(2.0 * r_closed(0.5 / kf)? - r_closed(1.0 / kf)?)
}

/// (n λ_n(x) / (π w(x) √(1−x²)), λ_n(x) p_n(x)²) using a prebuilt recurrence.
pub fn lambda_two_limits_with(
    weight: &WeightSpec,
    rec: &RecurrenceCoefficients,
    x: f64,
    n: usize,
) -> Result<(f64, f64)> {
    if !(x > -1.0 && x < 1.0) {
        return Err(domain(
            "lambda_two_limits_check",
            format!("x = {x} must lie in (-1, 1)"),
        ));
    }
    rec.check_count("lambda_two_limits_check", n + 1)?;
    let lambda = christoffel(rec, x, n)?;
    let pn = rec.orthonormal_iter(x).nth(n).expect("length checked");
    let ratio = n as f64 * lambda / (PI * weight.eval(x) * (1.0 - x * x).sqrt());
    Ok((ratio, lambda * pn * pn))
}

/// Same as [`lambda_two_limits_with`], building the recurrence up to degree n.
pub fn lambda_two_limits_check(weight: &WeightSpec, x: f64, n: usize) -> Result<(f64, f64)> {
    let rec = recurrence_for(weight, n.max(1))?;
    lambda_two_limits_with(weight, &rec, x, n)
}

/// |𝒟(Ψ_n(cos θ)) − 𝒟_∞(cos θ)|.
pub fn divergence_error(
    weight: &WeightSpec,
    rec: &RecurrenceCoefficients,
    angle: &AngleClass,
    n: usize,
) -> Result<f64> {
    Ok((divergence_at(rec, angle.x(), n)? - d_infinity(weight, angle)?).abs())
}
