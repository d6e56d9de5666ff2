use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::entropy::gcd;
use crate::error::{domain, Error, Result};

/// θ/π = s/k in lowest terms with 0 < s < k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    s: u64,
    k: u64,
}

impl RationalAngle {
    /// Reduces s/k; requires 0 < s < k.
    pub fn new(s: u64, k: u64) -> Result<Self> {
        if s == 0 || s >= k {
            return Err(domain(
                "RationalAngle",
                format!("need 0 < s < k, got {s}/{k}"),
            ));
        }
        let g = gcd(s, k);
        Ok(Self { s: s / g, k: k / g })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn theta(&self) -> f64 {
        PI * self.s as f64 / self.k as f64
    }

    pub fn x(&self) -> f64 {
        self.theta().cos()
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.s, self.k)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (s, k) = text
            .split_once('/')
            .ok_or_else(|| Error::Config(format!("angle '{text}' is not of the form s/k")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|e| Error::Config(format!("angle '{text}': {e}")))
        };
        Self::new(parse(s)?, parse(k)?)
    }
}

/// Declared arithmetic nature of θ/π. Never inferred from a float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AngleClass {
    Rational(RationalAngle),
    /// θ in (0, π) that the caller asserts has θ/π irrational.
    Irrational(f64),
}

impl AngleClass {
    pub fn irrational(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < PI) {
            return Err(domain(
                "AngleClass",
                format!("theta = {theta} must lie in (0, pi)"),
            ));
        }
        Ok(AngleClass::Irrational(theta))
    }

    pub fn rational(s: u64, k: u64) -> Result<Self> {
        RationalAngle::new(s, k).map(AngleClass::Rational)
    }

    pub fn theta(&self) -> f64 {
        match self {
            AngleClass::Rational(r) => r.theta(),
            AngleClass::Irrational(t) => *t,
        }
    }

    pub fn x(&self) -> f64 {
        self.theta().cos()
    }
}

/// Fixed irrational test angles (radians).
pub mod test_angles {
    /// 1 rad.
    pub const ONE: f64 = 1.0;
    /// √2 rad.
    pub const SQRT_2: f64 = std::f64::consts::SQRT_2;
    /// π²/6 rad, already inside (0, π).
    pub const BASEL: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
}

/// Advisory only: best rational approximation s/k of θ/π with k ≤ `max_den`
/// and |θ/π − s/k| ≤ `tol`, from the continued-fraction convergents. A hit
/// says nothing about whether θ/π is actually rational.
pub fn continued_fraction_guess(theta: f64, max_den: u64, tol: f64) -> Option<RationalAngle> {
    let target = theta / PI;
    if !(target > 0.0 && target < 1.0) {
        return None;
    }
    let (mut h0, mut h1) = (0u64, 1u64);
    let (mut k0, mut k1) = (1u64, 0u64);
    let mut rest = target;
    for _ in 0..64 {
        let a = rest.floor();
        let ai = a as u64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            return None;
        }
        if k2 > 0 && h2 > 0 && ((h2 as f64 / k2 as f64) - target).abs() <= tol {
            return RationalAngle::new(h2, k2).ok();
        }
        let frac = rest - a;
        if frac == 0.0 {
            return None;
        }
        rest = 1.0 / frac;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    None
}
