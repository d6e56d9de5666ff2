//! Special functions used by the entropy formulas.
//!
//! | Function | Value |
//! |----------|-------|
//! | [`digamma`] | ψ(x) = Γ'(x)/Γ(x) for x > 0 |
//! | [`ln_gamma`] | log Γ(x) for x > 0 |
//! | [`zeta_odd`] | ζ(m) for odd m ≥ 3 |
//! | [`r_closed`] | ℛ(x) = −x(ψ(1−x) + 2γ + ψ(1+x)) |
//! | [`r_series`] | ℛ(x) = 2 Σ ζ(2k+1) x^(2k+1) |
//! | [`entropy_integrand`] | ℱ(x) = x² log x², ℱ(0) = 0 |
//!
//! Everything here is pure. The only shared state is a table of odd zeta
//! values built once behind a [`OnceLock`].

use std::sync::OnceLock;

use crate::error::{domain, Error, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Returns γ.
#[inline]
pub const fn euler_gamma() -> f64 {
    EULER_GAMMA
}

/// Digamma ψ(x) for x > 0.
///
/// Shifts the argument above 8 with ψ(x) = ψ(x+1) − 1/x and then applies the
/// asymptotic Bernoulli expansion through the x^-14 term.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(domain(
            "digamma",
            format!("x = {x} must be positive and finite"),
        ));
    }
    Ok(digamma_unchecked(x))
}

fn digamma_unchecked(mut x: f64) -> f64 {
    let mut shift = 0.0;
    while x < 8.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let z = 1.0 / (x * x);
    // B_2k / (2k), k = 1..7
    let series = z
        * (1.0 / 12.0
            - z * (1.0 / 120.0
                - z * (1.0 / 252.0
                    - z * (1.0 / 240.0 - z * (1.0 / 132.0 - z * (691.0 / 32760.0 - z / 12.0))))));
    shift + x.ln() - 0.5 / x - series
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// log Γ(x) for x > 0 (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(domain(
            "ln_gamma",
            format!("x = {x} must be positive and finite"),
        ));
    }
    if x < 0.5 {
        // ln Γ(x) = ln Γ(x+1) − ln x keeps the Lanczos sum in its good range
        return Ok(ln_gamma(x + 1.0)? - x.ln());
    }
    let x = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln())
}

/// Number of odd zeta values ζ(2k+1), k = 1..=ZETA_CACHE_LEN, kept in the table.
pub const ZETA_CACHE_LEN: usize = 64;

// Σ_{j≥N} j^-m via Euler–Maclaurin.
const EM_CUTOFF: u32 = 20;
const EM_BERNOULLI: [f64; 5] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
];

fn zeta_minus_one_direct(m: u32) -> f64 {
    let mf = m as f64;
    let n = EM_CUTOFF as f64;
    let mut head = 0.0;
    for j in (2..EM_CUTOFF).rev() {
        head += (j as f64).powf(-mf);
    }
    let n_pow = n.powf(-mf);
    let mut tail = n * n_pow / (mf - 1.0) + 0.5 * n_pow;
    // m (m+1) ... (m+2i-2) N^{-m-2i+1}
    let mut rising = mf;
    let mut pow = n_pow / n;
    for (i, b) in EM_BERNOULLI.iter().enumerate() {
        tail += b * rising * pow;
        let next = mf + 2.0 * i as f64;
        rising *= (next + 1.0) * (next + 2.0);
        pow /= n * n;
    }
    head + tail
}

fn zeta_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (1..=ZETA_CACHE_LEN as u32)
            .map(|k| zeta_minus_one_direct(2 * k + 1))
            .collect()
    })
}

fn check_odd(m: u32) -> Result<()> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(domain(
            "zeta_odd",
            format!("m = {m} must be odd and at least 3"),
        ));
    }
    Ok(())
}

/// ζ(m) − 1 for odd m ≥ 3, without the cancellation of computing ζ(m) first.
pub fn zeta_odd_minus_one(m: u32) -> Result<f64> {
    check_odd(m)?;
    let k = ((m - 1) / 2) as usize;
    Ok(if k <= ZETA_CACHE_LEN {
        zeta_table()[k - 1]
    } else {
        zeta_minus_one_direct(m)
    })
}

/// Riemann zeta at an odd integer m ≥ 3.
pub fn zeta_odd(m: u32) -> Result<f64> {
    Ok(1.0 + zeta_odd_minus_one(m)?)
}

/// ℛ(x) = −x (ψ(1−x) + 2γ + ψ(1+x)) on the open interval (0, 1).
pub fn r_closed(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain("r_closed", format!("x = {x} must lie in (0, 1)")));
    }
    // ψ(1−x) = ψ(2−x) − 1/(1−x)
    let inner = digamma_unchecked(2.0 - x) + 2.0 * EULER_GAMMA + digamma_unchecked(1.0 + x);
    Ok(x / (1.0 - x) - x * inner)
}

/// ℛ on [0, 1) with ℛ(0) = 0; convenience for the zero-entropy formulas.
pub fn r_function(x: f64) -> Result<f64> {
    if x == 0.0 {
        Ok(0.0)
    } else {
        r_closed(x)
    }
}

/// Truncation control for [`r_series`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTolerance {
    tol: f64,
    max_terms: usize,
}

impl SeriesTolerance {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::Config(format!(
                "series tolerance {tol} must be positive"
            )));
        }
        if max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1".into()));
        }
        Ok(Self { tol, max_terms })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesTolerance {
    fn default() -> Self {
        Self {
            tol: 1e-17,
            max_terms: 10_000,
        }
    }
}

/// Partial sum of ℛ's power series together with a bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: usize,
    pub tail_bound: f64,
}

/// ℛ(x) = 2 Σ_{k≥1} ζ(2k+1) x^(2k+1) on [0, 1).
///
/// Each ζ(2k+1) is split as 1 + (ζ(2k+1) − 1). The ones sum to the geometric
/// series 2x³/(1−x²); the remaining coefficients decay like 2^-(2k+1), so the
/// truncated part converges quickly even next to x = 1.
pub fn r_series(x: f64, tol: SeriesTolerance) -> Result<f64> {
    r_series_detailed(x, tol).map(|s| s.value)
}

/// Same as [`r_series`], also reporting the term count and tail bound.
pub fn r_series_detailed(x: f64, tol: SeriesTolerance) -> Result<SeriesValue> {
    if !(0.0..1.0).contains(&x) {
        return Err(domain("r_series", format!("x = {x} must lie in [0, 1)")));
    }
    if x == 0.0 {
        return Ok(SeriesValue {
            value: 0.0,
            terms: 0,
            tail_bound: 0.0,
        });
    }
    let x2 = x * x;
    let geometric = 2.0 * x * x2 / (1.0 - x2);

    // Neumaier compensated sum
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut power = x * x2;
    let mut terms = 0;
    let mut k = 1u32;
    loop {
        let term = 2.0 * zeta_odd_minus_one(2 * k + 1)? * power;
        if term < tol.tol {
            let tail_bound = term / (1.0 - x2);
            return Ok(SeriesValue {
                value: geometric + (sum + comp),
                terms,
                tail_bound,
            });
        }
        if terms == tol.max_terms {
            return Err(Error::ToleranceNotReached {
                tol: tol.tol,
                terms,
                last: term,
            });
        }
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        terms += 1;
        power *= x2;
        k += 1;
    }
}

/// ℱ(x) = x² log(x²), with ℱ(0) = 0, extended evenly to negative x.
#[inline]
pub fn entropy_integrand(x: f64) -> f64 {
    let y = x * x;
    if y == 0.0 {
        0.0
    } else {
        y * y.ln()
    }
}
