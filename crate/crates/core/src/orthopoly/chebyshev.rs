use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{index, Error, Result};

/// Chebyshev family: first kind (T, weight (1−x²)^−½) or second kind (U, weight (1−x²)^½).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChebKind {
    First,
    Second,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChebKind::First => "T",
            ChebKind::Second => "U",
        })
    }
}

impl FromStr for ChebKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" | "first" => Ok(ChebKind::First),
            "U" | "u" | "second" => Ok(ChebKind::Second),
            other => Err(Error::Config(format!(
                "unknown Chebyshev kind '{other}' (use T or U)"
            ))),
        }
    }
}

/// Angle θ_j with ζ_j = cos θ_j, for the j-th zero (descending order) of p_n.
pub fn chebyshev_zero_angle(kind: ChebKind, n: usize, j: usize) -> Result<f64> {
    if n == 0 || j == 0 || j > n {
        return Err(index(
            "chebyshev_zero",
            format!("need 1 <= j <= n, got n = {n}, j = {j}"),
        ));
    }
    Ok(match kind {
        ChebKind::First => (2 * j - 1) as f64 * PI / (2 * n) as f64,
        ChebKind::Second => j as f64 * PI / (n + 1) as f64,
    })
}

/// ζ_j^(n), strictly decreasing in j.
pub fn chebyshev_zero(kind: ChebKind, n: usize, j: usize) -> Result<f64> {
    chebyshev_zero_angle(kind, n, j).map(f64::cos)
}

/// Orthonormal p_k(cos θ) from the explicit trigonometric forms.
pub fn chebyshev_orthonormal(kind: ChebKind, k: usize, theta: f64) -> f64 {
    let scale = (2.0 / PI).sqrt();
    match kind {
        ChebKind::First if k == 0 => FRAC_1_SQRT_2 * scale,
        ChebKind::First => scale * (k as f64 * theta).cos(),
        ChebKind::Second => scale * ((k + 1) as f64 * theta).sin() / theta.sin(),
    }
}
