//! Quadrature oracles for integration tests, built independently of the
//! crate's Golub–Welsch and Stieltjes code.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights by Newton iteration on the three-term
/// Legendre recurrence.
pub fn gauss_legendre(size: usize) -> Vec<(f64, f64)> {
    let nf = size as f64;
    (1..=size)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(size, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(size, x);
            dp = if d != 0.0 { d } else { dp };
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// exp(Σ c_m cos(mτ)) at x = cos τ, i.e. h(x) for log h = Σ c_m T_m.
pub fn h_at_angle(coeffs: &[f64], tau: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| c * (m as f64 * tau).cos())
        .sum::<f64>()
        .exp()
}

/// ∫_{-1}^{1} f(x) (1−x)^α (1+x)^β h(x) dx.
///
/// For α, β ∈ {−½, ½} the substitution x = cos τ leaves a smooth even
/// 2π-periodic integrand and the midpoint rule converges geometrically.
/// Otherwise a Newton-built Gauss–Legendre rule is applied directly, which
/// is exact up to h for α = β = 0.
pub fn weighted_integral<F: Fn(f64) -> f64>(alpha: f64, beta: f64, logh: &[f64], f: F) -> f64 {
    let half_integer = |v: f64| (v.abs() - 0.5).abs() < 1e-15;
    if half_integer(alpha) && half_integer(beta) {
        let m = 2000;
        let step = PI / m as f64;
        let scale = 2f64.powf(alpha + beta + 1.0);
        (0..m)
            .map(|i| {
                let tau = (i as f64 + 0.5) * step;
                let (s, c) = (0.5 * tau).sin_cos();
                f(tau.cos())
                    * h_at_angle(logh, tau)
                    * scale
                    * s.powf(2.0 * alpha + 1.0)
                    * c.powf(2.0 * beta + 1.0)
            })
            .sum::<f64>()
            * step
    } else {
        assert!(
            alpha == 0.0 && beta == 0.0,
            "oracle covers α, β ∈ {{±½}} or α = β = 0"
        );
        gauss_legendre(200)
            .into_iter()
            .map(|(x, w)| w * f(x) * h_at_angle(logh, x.acos()))
            .sum()
    }
}
