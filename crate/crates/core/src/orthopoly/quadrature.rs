//! Gauss–Jacobi rules.
//!
//! The default route is Golub–Welsch: nodes are the eigenvalues of the
//! symmetric Jacobi matrix, weights come from the first components of its
//! eigenvectors. Only that first row is tracked through the implicit QL
//! sweeps, which keeps the solve at O(n²). Rules larger than
//! [`NEWTON_THRESHOLD`] switch to Newton iteration on the recurrence with
//! asymptotic starting guesses and Christoffel-function weights.

use crate::error::{domain, Error, Result};
use crate::orthopoly::recurrence::{jacobi_recurrence, RecurrenceCoefficients};

/// Sizes above this use [`gauss_jacobi_newton`].
pub const NEWTON_THRESHOLD: usize = 10_000;

/// Nodes (strictly increasing) and positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Σ w_i f(x_i)
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    fn from_pairs(mut pairs: Vec<(f64, f64)>) -> Result<Self> {
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (nodes, weights): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        if nodes.windows(2).any(|w| !(w[0] < w[1])) || weights.iter().any(|w| !(*w > 0.0)) {
            return Err(Error::Convergence {
                func: "gauss_jacobi",
                detail: "nodes not distinct or weights not positive".into(),
            });
        }
        Ok(Self { nodes, weights })
    }
}

fn check_args(alpha: f64, beta: f64, size: usize) -> Result<()> {
    if size == 0 {
        return Err(domain("gauss_jacobi", "size must be at least 1"));
    }
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(domain(
            "gauss_jacobi",
            format!("exponents ({alpha}, {beta}) must both exceed -1"),
        ));
    }
    Ok(())
}

/// `size`-point Gauss rule for (1−x)^α (1+x)^β.
pub fn gauss_jacobi(alpha: f64, beta: f64, size: usize) -> Result<QuadratureRule> {
    check_args(alpha, beta, size)?;
    if size > NEWTON_THRESHOLD {
        return gauss_jacobi_newton(alpha, beta, size);
    }
    let rec = jacobi_recurrence(alpha, beta, size)?;
    golub_welsch(&rec, size)
}

/// Gauss rule for the measure encoded by `rec`, from its first `size` coefficients.
pub fn golub_welsch(rec: &RecurrenceCoefficients, size: usize) -> Result<QuadratureRule> {
    if size == 0 || size > rec.len() {
        return Err(domain(
            "golub_welsch",
            format!("size {size} must be in 1..={}", rec.len()),
        ));
    }
    let mut diag = rec.a()[..size].to_vec();
    let mut off: Vec<f64> = (1..=size)
        .map(|k| if k < size { rec.b()[k].sqrt() } else { 0.0 })
        .collect();
    let mut first = vec![0.0; size];
    first[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut off, &mut first)?;
    let mass = rec.mass();
    QuadratureRule::from_pairs(
        diag.into_iter()
            .zip(first)
            .map(|(x, z)| (x, mass * z * z))
            .collect(),
    )
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
// `off[i]` couples rows i and i+1; `first` is the first row of the
// accumulated eigenvector matrix.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], first: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Convergence {
                    func: "gauss_jacobi",
                    detail: format!("QL sweep stalled at row {l}"),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let z = first[i + 1];
                first[i + 1] = s * first[i] + c * z;
                first[i] = c * first[i] - s * z;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Newton route: zeros of p_size from asymptotic starting points, weights
/// w_j = λ_size(x_j) = 1 / Σ_{k<size} p_k(x_j)².
pub fn gauss_jacobi_newton(alpha: f64, beta: f64, size: usize) -> Result<QuadratureRule> {
    check_args(alpha, beta, size)?;
    let rec = jacobi_recurrence(alpha, beta, size)?;
    let nf = size as f64;
    let rho = nf + 0.5 * (alpha + beta + 1.0);
    let mut pairs = Vec::with_capacity(size);
    for j in 1..=size {
        // zero number j counted from x = 1
        let theta = (j as f64 + 0.5 * alpha - 0.25) * std::f64::consts::PI / rho;
        let mut x = theta.cos().clamp(-1.0 + 1e-300, 1.0 - 1e-16);
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp, _) = eval_with_derivative(&rec, x, size);
            let step = p / dp;
            let next = (x - step).clamp(-1.0, 1.0);
            let done = (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1e-3);
            x = next;
            if done {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Convergence {
                func: "gauss_jacobi_newton",
                detail: format!("zero {j} of {size}"),
            });
        }
        let (_, _, ksum) = eval_with_derivative(&rec, x, size);
        pairs.push((x, 1.0 / ksum));
    }
    let rule = QuadratureRule::from_pairs(pairs)?;
    if rule.len() != size {
        return Err(Error::Convergence {
            func: "gauss_jacobi_newton",
            detail: "lost zeros".into(),
        });
    }
    Ok(rule)
}

// p_n(x), p_n'(x) and Σ_{k<n} p_k(x)².
fn eval_with_derivative(rec: &RecurrenceCoefficients, x: f64, n: usize) -> (f64, f64, f64) {
    let (a, b) = (rec.a(), rec.b());
    let mut p_prev = 0.0;
    let mut d_prev = 0.0;
    let mut p = 1.0 / b[0].sqrt();
    let mut d = 0.0;
    let mut ksum = 0.0;
    for k in 0..n {
        ksum += p * p;
        let sb = if k == 0 { 0.0 } else { b[k].sqrt() };
        let inv = 1.0 / b[k + 1].sqrt();
        let p_next = ((x - a[k]) * p - sb * p_prev) * inv;
        let d_next = (p + (x - a[k]) * d - sb * d_prev) * inv;
        p_prev = p;
        d_prev = d;
        p = p_next;
        d = d_next;
    }
    (p, d, ksum)
}
