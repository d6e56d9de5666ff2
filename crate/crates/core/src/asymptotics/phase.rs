//! Phase function of the bulk cosine asymptotics and its principal-value term.
//!
//! For log h = Σ c_m T_m the finite Hilbert transform is exact:
//! PV ∫ T_m(t) / (√(1−t²) (t−x)) dt = π U_{m−1}(x), so the principal-value
//! contribution to the phase at x = cos θ is ½ Σ_{m≥1} c_m sin(mθ).
//! [`pv_integral_oracle`] evaluates the same integral by brute force and is
//! only meant for cross-checking.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::orthopoly::{gauss_jacobi, QuadratureRule, WeightSpec};

fn check_theta(func: &'static str, theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta < PI) {
        return Err(domain(func, format!("theta = {theta} must lie in (0, pi)")));
    }
    Ok(())
}

/// ½ Σ_{m≥1} c_m sin(mθ).
pub fn hilbert_phase_term(weight: &WeightSpec, theta: f64) -> f64 {
    0.5 * weight
        .logh_cheb()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(m, c)| c * (m as f64 * theta).sin())
        .sum::<f64>()
}

/// φ(cos θ) = ½((α+β)θ − απ) + ½ Σ c_m sin(mθ).
pub fn phase(weight: &WeightSpec, theta: f64) -> Result<f64> {
    check_theta("phase", theta)?;
    Ok(jacobi_phase(weight, theta) + hilbert_phase_term(weight, theta))
}

fn jacobi_phase(weight: &WeightSpec, theta: f64) -> f64 {
    0.5 * ((weight.alpha() + weight.beta()) * theta - weight.alpha() * PI)
}

/// Default ε schedule for [`pv_integral_oracle`].
pub fn default_epsilon_schedule() -> Vec<f64> {
    (0..7).map(|i| 0.02 / f64::from(1u32 << i)).collect()
}

/// Brute-force PV ∫_{−1}^{1} log h(t) / (√(1−t²) (t−x)) dt by symmetric
/// excision of (x−ε, x+ε) and polynomial extrapolation ε → 0.
pub fn pv_integral_oracle(weight: &WeightSpec, x: f64, epsilon_schedule: &[f64]) -> Result<f64> {
    if !(x > -1.0 && x < 1.0) {
        return Err(domain(
            "pv_integral_oracle",
            format!("x = {x} must lie in (-1, 1)"),
        ));
    }
    if epsilon_schedule.len() < 2 {
        return Err(domain(
            "pv_integral_oracle",
            "need at least two excision radii",
        ));
    }
    let largest = epsilon_schedule.iter().cloned().fold(0.0, f64::max);
    if !(largest < 0.5 * (1.0 - x.abs())) || epsilon_schedule.iter().any(|e| !(*e > 0.0)) {
        return Err(domain(
            "pv_integral_oracle",
            format!(
                "excision radii must be positive and below {}",
                0.5 * (1.0 - x.abs())
            ),
        ));
    }
    if weight.logh_cheb().iter().all(|&c| c == 0.0) {
        return Ok(0.0);
    }
    let rule = gauss_jacobi(0.0, 0.0, 24)?;
    let samples: Vec<f64> = epsilon_schedule
        .iter()
        .map(|&eps| excised_integral(weight, x, eps, &rule))
        .collect();
    neville_at_zero(epsilon_schedule, &samples)
}

// ∫ over [−1, x−ε] ∪ [x+ε, 1] after t = cos τ, which turns the integrand
// into log h(cos τ) / (cos τ − x) on [0, π].
fn excised_integral(weight: &WeightSpec, x: f64, eps: f64, rule: &QuadratureRule) -> f64 {
    let tau0 = x.acos();
    let upper_cut = (x + eps).acos(); // < tau0
    let lower_cut = (x - eps).acos(); // > tau0
    let g = |tau: f64| weight.log_h(tau.cos()) / (tau.cos() - x);
    graded(&g, 0.0, upper_cut, tau0, rule) + graded(&g, lower_cut, PI, tau0, rule)
}

// Composite Gauss–Legendre on [a, b] with panels doubling in width away
// from the end nearest `singular` (which lies outside [a, b]).
fn graded<G: Fn(f64) -> f64>(g: &G, a: f64, b: f64, singular: f64, rule: &QuadratureRule) -> f64 {
    let toward_b = singular >= b;
    let (near, far) = if toward_b { (b, a) } else { (a, b) };
    let mut dist = (singular - near).abs();
    let span = (far - near).abs();
    let mut covered = 0.0;
    let mut total = 0.0;
    while covered < span {
        let width = dist.min(span - covered);
        let (lo, hi) = if toward_b {
            (near - covered - width, near - covered)
        } else {
            (near + covered, near + covered + width)
        };
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        total += half * rule.integrate(|u| g(mid + half * u));
        covered += width;
        dist += width;
    }
    total
}

fn neville_at_zero(xs: &[f64], ys: &[f64]) -> Result<f64> {
    let n = xs.len();
    let mut table = ys.to_vec();
    let mut last_diag = table[0];
    let mut change = f64::INFINITY;
    for level in 1..n {
        for i in 0..n - level {
            let (xi, xj) = (xs[i], xs[i + level]);
            table[i] = (xi * table[i + 1] - xj * table[i]) / (xi - xj);
        }
        change = (table[0] - last_diag).abs();
        last_diag = table[0];
    }
    let value = table[0];
    if !value.is_finite() || change > 1e-7 * value.abs().max(1.0) {
        return Err(Error::Convergence {
            func: "pv_integral_oracle",
            detail: format!("extrapolation still moving by {change:e}"),
        });
    }
    Ok(value)
}

/// Leading bulk term
/// √(2/π) w(x)^{−½} (1−x²)^{−¼} cos((n+½)θ + φ(x) − π/4), x = cos θ.
pub fn asymptotic_pn(weight: &WeightSpec, n: usize, x: f64) -> Result<f64> {
    if !(x > -1.0 && x < 1.0) {
        return Err(domain(
            "asymptotic_pn",
            format!("x = {x} must lie in (-1, 1)"),
        ));
    }
    let theta = x.acos();
    check_theta("asymptotic_pn", theta)?;
    let amp = (2.0 / PI).sqrt() / (weight.eval(x).sqrt() * ((1.0 - x) * (1.0 + x)).powf(0.25));
    // (n+½)θ + φ − π/4 = (n + ½ + (α+β)/2)θ + hilbert − (α/2 + ¼)π, with the
    // constant offset applied through cos(a − c) to avoid rounding at |a|.
    let (alpha, beta) = (weight.alpha(), weight.beta());
    let a = (n as f64 + 0.5 + 0.5 * (alpha + beta)) * theta + hilbert_phase_term(weight, theta);
    let c = (0.5 * alpha + 0.25) * PI;
    Ok(amp * (a.cos() * c.cos() + a.sin() * c.sin()))
}
