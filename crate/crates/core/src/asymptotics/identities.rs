//! Finite trigonometric-sum identities relating Ŝ_{k,1} to ℛ, each evaluated
//! with both sides computed independently.

use std::f64::consts::{LN_2, PI};

use crate::asymptotics::angle::{AngleClass, RationalAngle};
use crate::asymptotics::limits::{chebyshev_t_limit, d_infinity, s_hat_ks};
use crate::entropy::gcd;
use crate::error::Result;
use crate::exec::Execution;
use crate::orthopoly::WeightSpec;
use crate::specfun::{entropy_integrand, r_closed, r_series, SeriesTolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// `value` is a max absolute discrepancy; passes when below the tolerance.
    Discrepancy,
    /// `value` is a maximum that must be strictly negative.
    StrictlyNegative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub value: f64,
    pub kind: CheckKind,
}

impl IdentityCheck {
    pub fn passes(&self, tol: f64) -> bool {
        match self.kind {
            CheckKind::Discrepancy => self.value.is_finite() && self.value < tol,
            CheckKind::StrictlyNegative => self.value < 0.0,
        }
    }
}

/// (1/k) Σ_{i=1}^{k−1} ℱ(cos(πi/k)), the Chebyshev-T Ŝ_{k,1} as a plain sum.
pub fn cosine_average(k: u64) -> f64 {
    let kf = k as f64;
    (1..k)
        .map(|i| entropy_integrand((PI * i as f64 / kf).cos()))
        .sum::<f64>()
        / kf
}

/// (1/k) Σ_{i=1}^{k−1} ℱ(sin(πi/k)), the Chebyshev-U Ŝ_{k,1} as a plain sum.
pub fn sine_average(k: u64) -> f64 {
    let kf = k as f64;
    (1..k)
        .map(|i| entropy_integrand((PI * i as f64 / kf).sin()))
        .sum::<f64>()
        / kf
}

fn max_abs<F>(exec: Execution, ks: &[u64], f: F) -> Result<f64>
where
    F: Fn(u64) -> Result<f64> + Sync + Send,
{
    let vals = exec.try_map(ks, |&k| f(k).map(f64::abs))?;
    Ok(vals.into_iter().fold(0.0, f64::max))
}

fn even_ks() -> Vec<u64> {
    (2..=200).step_by(2).collect()
}

fn odd_ks() -> Vec<u64> {
    (3..=199).step_by(2).collect()
}

fn coprime_pairs(k_max: u64) -> Vec<(u64, u64)> {
    (2..=k_max)
        .flat_map(|k| (1..k).filter(move |&s| gcd(s, k) == 1).map(move |s| (s, k)))
        .collect()
}

/// 2Ŝ_{k,1} = 1 − 2log2 + ℛ(1/k), k even ≤ 200.
pub fn even_cosine_sum(exec: Execution) -> Result<f64> {
    max_abs(exec, &even_ks(), |k| {
        Ok(2.0 * cosine_average(k) - (1.0 - 2.0 * LN_2 + r_closed(1.0 / k as f64)?))
    })
}

/// Ŝ_{k,1} = ½ − log2 + ℛ(1/(2k)) − ½ℛ(1/k), k odd ≤ 199.
pub fn odd_cosine_sum(exec: Execution) -> Result<f64> {
    max_abs(exec, &odd_ks(), |k| {
        let kf = k as f64;
        let rhs = 0.5 - LN_2 + r_closed(0.5 / kf)? - 0.5 * r_closed(1.0 / kf)?;
        Ok(cosine_average(k) - rhs)
    })
}

/// Ŝ_{k,1} = (2/k) Σ_{i=1}^{k−1} ℱ(cos(πi/(2k))) − (1/k) Σ_{i=1}^{k−1} ℱ(sin(πi/k)),
/// k odd ≤ 199.
pub fn odd_cosine_split(exec: Execution) -> Result<f64> {
    max_abs(exec, &odd_ks(), |k| {
        let kf = k as f64;
        let half: f64 = (1..k)
            .map(|i| entropy_integrand((PI * i as f64 / (2.0 * kf)).cos()))
            .sum();
        Ok(cosine_average(k) - (2.0 / kf * half - sine_average(k)))
    })
}

/// (1/k) Σ_{i=1}^{k−1} ℱ(sin(πi/k)) = ½(1 − 2log2 + ℛ(1/k)), k odd ≤ 199.
pub fn sine_odd(exec: Execution) -> Result<f64> {
    max_abs(exec, &odd_ks(), |k| {
        Ok(sine_average(k) - 0.5 * (1.0 - 2.0 * LN_2 + r_closed(1.0 / k as f64)?))
    })
}

/// Second-kind even case: 2(1/k) Σ ℱ(sin(πi/k)) = 1 − 2log2 + ℛ(1/k), k even ≤ 200.
pub fn sine_even(exec: Execution) -> Result<f64> {
    max_abs(exec, &even_ks(), |k| {
        Ok(2.0 * sine_average(k) - (1.0 - 2.0 * LN_2 + r_closed(1.0 / k as f64)?))
    })
}

/// Ŝ_{k,s} = Ŝ_{k,1} for every coprime s/k with k ≤ `k_max`, computed through
/// the phase of `weight`.
pub fn numerator_independence(weight: &WeightSpec, k_max: u64, exec: Execution) -> Result<f64> {
    let pairs = coprime_pairs(k_max);
    let vals = exec.try_map(&pairs, |&(s, k)| -> Result<f64> {
        let a = s_hat_ks(weight, RationalAngle::new(s, k)?)?;
        let b = s_hat_ks(weight, RationalAngle::new(1, k)?)?;
        Ok((a - b).abs())
    })?;
    Ok(vals.into_iter().fold(0.0, f64::max))
}

/// Chebyshev-T Ŝ_{k,1} through the phase agrees with the plain cosine sum.
pub fn phase_reduction(exec: Execution) -> Result<f64> {
    let w = WeightSpec::chebyshev_first();
    let ks: Vec<u64> = (2..=200).collect();
    max_abs(exec, &ks, |k| {
        Ok(s_hat_ks(&w, RationalAngle::new(1, k)?)? - cosine_average(k))
    })
}

/// max over a grid of (0,1) of ℛ(x/2) − ½ℛ(x); negative when the identity holds.
pub fn convexity_max(points: usize) -> Result<f64> {
    let mut worst = f64::NEG_INFINITY;
    for i in 1..=points {
        let x = i as f64 / (points + 1) as f64;
        worst = worst.max(r_closed(0.5 * x)? - 0.5 * r_closed(x)?);
    }
    Ok(worst)
}

/// max |ℛ_closed − ℛ_series| over x ∈ {0.01, …, 0.99}.
pub fn r_dual_route() -> Result<f64> {
    let tol = SeriesTolerance::new(1e-14, 10_000)?;
    let mut worst: f64 = 0.0;
    for i in 1..=99 {
        let x = i as f64 / 100.0;
        worst = worst.max((r_closed(x)? - r_series(x, tol)?).abs());
    }
    Ok(worst)
}

/// max |𝒟_∞(ChebT, s/k) − chebyshev_t_limit(k)| over coprime s/k with k ≤ `k_max`.
pub fn chebyshev_t_limit_cross_route(k_max: u64, exec: Execution) -> Result<f64> {
    let w = WeightSpec::chebyshev_first();
    let pairs = coprime_pairs(k_max);
    let vals = exec.try_map(&pairs, |&(s, k)| -> Result<f64> {
        Ok((d_infinity(&w, &AngleClass::rational(s, k)?)? - chebyshev_t_limit(k)?).abs())
    })?;
    Ok(vals.into_iter().fold(0.0, f64::max))
}

/// Every identity check with its default range.
pub fn identity_suite(exec: Execution) -> Result<Vec<IdentityCheck>> {
    use CheckKind::*;
    let d = |name, value| IdentityCheck {
        name,
        value,
        kind: Discrepancy,
    };
    Ok(vec![
        d("cosine_sum_even_k", even_cosine_sum(exec)?),
        d("cosine_sum_odd_k", odd_cosine_sum(exec)?),
        d("cosine_split_odd_k", odd_cosine_split(exec)?),
        d("sine_sum_odd_k", sine_odd(exec)?),
        d("sine_sum_even_k", sine_even(exec)?),
        d("phase_reduction_first_kind", phase_reduction(exec)?),
        d(
            "numerator_independence_first_kind",
            numerator_independence(&WeightSpec::chebyshev_first(), 50, exec)?,
        ),
        d(
            "numerator_independence_second_kind",
            numerator_independence(&WeightSpec::chebyshev_second(), 50, exec)?,
        ),
        d("r_dual_route", r_dual_route()?),
        d(
            "d_infinity_cross_route",
            chebyshev_t_limit_cross_route(50, exec)?,
        ),
        IdentityCheck {
            name: "convexity_gap",
            value: convexity_max(1000)?,
            kind: StrictlyNegative,
        },
    ])
}
