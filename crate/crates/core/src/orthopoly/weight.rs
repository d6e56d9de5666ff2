use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generalized Jacobi weight w(x) = (1−x)^α (1+x)^β h(x) on [−1, 1].
///
/// The analytic factor is stored through its logarithm in the Chebyshev basis,
/// log h(cos τ) = Σ c_m cos(mτ), which keeps h positive by construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawWeight", into = "RawWeight")]
pub struct WeightSpec {
    alpha: f64,
    beta: f64,
    logh_cheb: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    alpha: f64,
    beta: f64,
    #[serde(default)]
    logh_cheb: Vec<f64>,
}

impl TryFrom<RawWeight> for WeightSpec {
    type Error = Error;

    fn try_from(raw: RawWeight) -> Result<Self> {
        WeightSpec::new(raw.alpha, raw.beta, raw.logh_cheb)
    }
}

impl From<WeightSpec> for RawWeight {
    fn from(w: WeightSpec) -> Self {
        RawWeight {
            alpha: w.alpha,
            beta: w.beta,
            logh_cheb: w.logh_cheb,
        }
    }
}

impl WeightSpec {
    pub fn new(alpha: f64, beta: f64, logh_cheb: Vec<f64>) -> Result<Self> {
        if !(alpha.is_finite() && alpha > -1.0) {
            return Err(Error::Config(format!(
                "alpha = {alpha} must be finite and > -1"
            )));
        }
        if !(beta.is_finite() && beta > -1.0) {
            return Err(Error::Config(format!(
                "beta = {beta} must be finite and > -1"
            )));
        }
        if let Some(c) = logh_cheb.iter().find(|c| !c.is_finite()) {
            return Err(Error::Config(format!(
                "log h coefficient {c} is not finite"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            logh_cheb,
        })
    }

    /// Pure Jacobi weight, h ≡ 1.
    pub fn jacobi(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(alpha, beta, Vec::new())
    }

    /// (1−x²)^(−1/2)
    pub fn chebyshev_first() -> Self {
        Self::jacobi(-0.5, -0.5).expect("valid exponents")
    }

    /// (1−x²)^(1/2)
    pub fn chebyshev_second() -> Self {
        Self::jacobi(0.5, 0.5).expect("valid exponents")
    }

    pub fn legendre() -> Self {
        Self::jacobi(0.0, 0.0).expect("valid exponents")
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn logh_cheb(&self) -> &[f64] {
        &self.logh_cheb
    }

    /// True when log h has no non-constant Chebyshev term.
    pub fn has_constant_h(&self) -> bool {
        self.logh_cheb.iter().skip(1).all(|&c| c == 0.0)
    }

    /// log h(x).
    pub fn log_h(&self, x: f64) -> f64 {
        chebyshev_t_series(&self.logh_cheb, x)
    }

    pub fn h(&self, x: f64) -> f64 {
        self.log_h(x).exp()
    }

    /// w(x) including h.
    pub fn eval(&self, x: f64) -> f64 {
        (1.0 - x).powf(self.alpha) * (1.0 + x).powf(self.beta) * self.h(x)
    }
}

/// Σ c_m T_m(x) by Clenshaw's recurrence.
pub fn chebyshev_t_series(coeffs: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = b0;
    }
    match coeffs.first() {
        Some(&c0) => c0 + x * b1 - b2,
        None => 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_exponents() {
        assert!(WeightSpec::jacobi(-1.0, 0.0).is_err());
        assert!(WeightSpec::jacobi(0.0, -1.5).is_err());
        assert!(WeightSpec::new(0.0, 0.0, vec![f64::NAN]).is_err());
    }

    #[test]
    fn clenshaw_matches_trig_form() {
        let c = [0.3, -1.0, 0.5, 0.25, 0.125];
        for i in 0..=20 {
            let t: f64 = 0.15 * i as f64;
            let x = t.cos();
            let direct: f64 = c
                .iter()
                .enumerate()
                .map(|(m, cm)| cm * (m as f64 * t).cos())
                .sum();
            assert!((chebyshev_t_series(&c, x) - direct).abs() < 1e-14);
        }
        assert_eq!(chebyshev_t_series(&[], 0.3), 0.0);
    }

    #[test]
    fn json_schema_round_trip() {
        let w: WeightSpec =
            serde_json::from_str(r#"{"alpha": 0.5, "beta": -0.5, "logh_cheb": [0, 1]}"#).unwrap();
        assert_eq!(w.alpha(), 0.5);
        assert_eq!(w.logh_cheb(), &[0.0, 1.0]);
        assert!((w.h(0.25) - 0.25f64.exp()).abs() < 1e-15);
        let back: WeightSpec = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(back, w);
        let bad =
            serde_json::from_str::<WeightSpec>(r#"{"alpha": -1, "beta": 0, "logh_cheb": []}"#);
        assert!(bad.is_err());
    }
}
