use crate::error::{domain, index, Error, Result};
use crate::orthopoly::quadrature::{gauss_jacobi, QuadratureRule};
use crate::orthopoly::weight::WeightSpec;
use crate::specfun::ln_gamma;

/// Monic three-term recurrence
/// π_{k+1}(x) = (x − a_k) π_k(x) − b_k π_{k−1}(x), with b_0 = ∫ w.
///
/// `len()` coefficient pairs give the orthonormal polynomials p_0, …, p_{len−1}.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCoefficients {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl RecurrenceCoefficients {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::Config(format!(
                "recurrence lists must be non-empty and of equal length ({} vs {})",
                a.len(),
                b.len()
            )));
        }
        if let Some((k, &value)) = b
            .iter()
            .enumerate()
            .find(|(_, &v)| !(v > 0.0 && v.is_finite()))
        {
            return Err(Error::NonPositiveRecurrence { k, value });
        }
        if a.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("recurrence diagonal must be finite".into()));
        }
        Ok(Self { a, b })
    }

    /// Number of orthonormal polynomials available.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Highest degree n for which p_n can be evaluated.
    pub fn n_max(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// Total mass ∫ w.
    pub fn mass(&self) -> f64 {
        self.b[0]
    }

    /// Copy with b[0] multiplied by `c`, i.e. the measure rescaled by `c`.
    pub fn rescaled(&self, c: f64) -> Result<Self> {
        let mut b = self.b.clone();
        b[0] *= c;
        Self::new(self.a.clone(), b)
    }

    /// Orthonormal values p_0(x), p_1(x), … as an iterator of length `len()`.
    pub fn orthonormal_iter(&self, x: f64) -> OrthonormalIter<'_> {
        OrthonormalIter {
            rec: self,
            x,
            k: 0,
            prev: 0.0,
            cur: 1.0 / self.b[0].sqrt(),
        }
    }

    pub(crate) fn check_count(&self, func: &'static str, n: usize) -> Result<()> {
        if n == 0 || n > self.len() {
            return Err(index(
                func,
                format!("n = {n} must be in 1..={} for this recurrence", self.len()),
            ));
        }
        Ok(())
    }
}

pub struct OrthonormalIter<'a> {
    rec: &'a RecurrenceCoefficients,
    x: f64,
    k: usize,
    prev: f64,
    cur: f64,
}

impl Iterator for OrthonormalIter<'_> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let k = self.k;
        if k >= self.rec.len() {
            return None;
        }
        let out = self.cur;
        if k + 1 < self.rec.len() {
            let (a, b) = (&self.rec.a, &self.rec.b);
            let prev_term = if k == 0 { 0.0 } else { b[k].sqrt() * self.prev };
            let next = ((self.x - a[k]) * self.cur - prev_term) / b[k + 1].sqrt();
            self.prev = self.cur;
            self.cur = next;
        }
        self.k += 1;
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.rec.len() - self.k;
        (left, Some(left))
    }
}

impl ExactSizeIterator for OrthonormalIter<'_> {}

/// Values p_0(x), …, p_{n−1}(x) at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalValues {
    pub x: f64,
    pub values: Vec<f64>,
}

/// Closed-form monic recurrence for (1−x)^α (1+x)^β, degrees 0..=n_max.
pub fn jacobi_recurrence(alpha: f64, beta: f64, n_max: usize) -> Result<RecurrenceCoefficients> {
    if !(alpha > -1.0 && beta > -1.0 && alpha.is_finite() && beta.is_finite()) {
        return Err(domain(
            "jacobi_recurrence",
            format!("exponents ({alpha}, {beta}) must both exceed -1"),
        ));
    }
    if n_max == 0 {
        return Err(domain("jacobi_recurrence", "n_max must be at least 1"));
    }
    let len = n_max + 1;
    let ab = alpha + beta;
    let mut a = Vec::with_capacity(len);
    let mut b = Vec::with_capacity(len);

    let log_mass =
        (ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0)? + ln_gamma(beta + 1.0)?
            - ln_gamma(ab + 2.0)?;
    a.push((beta - alpha) / (ab + 2.0));
    b.push(log_mass.exp());
    for k in 1..len {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        let diff = beta * beta - alpha * alpha;
        a.push(if diff == 0.0 {
            0.0
        } else {
            diff / (s * (s + 2.0))
        });
        let bk = if k == 1 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + alpha) * (kf + beta) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        b.push(bk);
    }
    RecurrenceCoefficients::new(a, b)
}

/// Options for [`stieltjes_recurrence_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesOptions {
    /// Nodes added to the minimum rule size 2·(n_max+1) + ⌈M/2⌉ + 8.
    pub extra_nodes: usize,
}

impl Default for StieltjesOptions {
    fn default() -> Self {
        Self { extra_nodes: 24 }
    }
}

/// Recurrence for the full weight (1−x)^α (1+x)^β h(x) by the discretized
/// Stieltjes procedure on a Gauss–Jacobi rule of the base weight.
pub fn stieltjes_recurrence(weight: &WeightSpec, n_max: usize) -> Result<RecurrenceCoefficients> {
    stieltjes_recurrence_with(weight, n_max, StieltjesOptions::default())
}

pub fn stieltjes_recurrence_with(
    weight: &WeightSpec,
    n_max: usize,
    opts: StieltjesOptions,
) -> Result<RecurrenceCoefficients> {
    if n_max == 0 {
        return Err(domain("stieltjes_recurrence", "n_max must be at least 1"));
    }
    let degree = weight.logh_cheb().len().saturating_sub(1);
    let size = 2 * (n_max + 1) + degree.div_ceil(2) + 8 + opts.extra_nodes;
    let rule = gauss_jacobi(weight.alpha(), weight.beta(), size)?;
    stieltjes_on_rule(&rule, |x| weight.h(x), n_max)
}

/// Discrete Stieltjes on an arbitrary rule with an extra integrand factor.
pub fn stieltjes_on_rule<H>(
    rule: &QuadratureRule,
    factor: H,
    n_max: usize,
) -> Result<RecurrenceCoefficients>
where
    H: Fn(f64) -> f64,
{
    let len = n_max + 1;
    if len > rule.len() {
        return Err(domain(
            "stieltjes_recurrence",
            format!(
                "rule of size {} cannot resolve {len} polynomials",
                rule.len()
            ),
        ));
    }
    let nodes = rule.nodes();
    let w: Vec<f64> = rule
        .weights()
        .iter()
        .zip(nodes)
        .map(|(wi, &x)| wi * factor(x))
        .collect();

    let mass: f64 = w.iter().sum();
    if !(mass > 0.0) {
        return Err(Error::NonPositiveRecurrence { k: 0, value: mass });
    }
    let mut a = Vec::with_capacity(len);
    let mut b = Vec::with_capacity(len);
    b.push(mass);

    // orthonormal polynomial values at the nodes
    let mut prev = vec![0.0; nodes.len()];
    let mut cur = vec![1.0 / mass.sqrt(); nodes.len()];
    let mut next = vec![0.0; nodes.len()];
    for k in 0..len {
        let ak: f64 = w
            .iter()
            .zip(nodes)
            .zip(&cur)
            .map(|((wi, x), p)| wi * x * p * p)
            .sum();
        a.push(ak);
        if k + 1 == len {
            break;
        }
        let sb = if k == 0 { 0.0 } else { b[k].sqrt() };
        for i in 0..nodes.len() {
            next[i] = (nodes[i] - ak) * cur[i] - sb * prev[i];
        }
        let bk: f64 = w.iter().zip(&next).map(|(wi, r)| wi * r * r).sum();
        if !(bk > 0.0) {
            return Err(Error::NonPositiveRecurrence {
                k: k + 1,
                value: bk,
            });
        }
        let inv = 1.0 / bk.sqrt();
        next.iter_mut().for_each(|r| *r *= inv);
        b.push(bk);
        std::mem::swap(&mut prev, &mut cur);
        std::mem::swap(&mut cur, &mut next);
    }
    RecurrenceCoefficients::new(a, b)
}

/// Recurrence for a weight: closed form when h is constant, Stieltjes otherwise.
pub fn recurrence_for(weight: &WeightSpec, n_max: usize) -> Result<RecurrenceCoefficients> {
    let rec = jacobi_recurrence(weight.alpha(), weight.beta(), n_max)?;
    if weight.has_constant_h() {
        let c0 = weight.logh_cheb().first().copied().unwrap_or(0.0);
        rec.rescaled(c0.exp())
    } else {
        stieltjes_recurrence(weight, n_max)
    }
}

fn check_point(func: &'static str, x: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(domain(func, format!("x = {x} must lie in [-1, 1]")));
    }
    Ok(())
}

/// p_0(x), …, p_{n−1}(x) from the forward recurrence.
pub fn eval_orthonormal(
    rec: &RecurrenceCoefficients,
    x: f64,
    n: usize,
) -> Result<OrthonormalValues> {
    check_point("eval_orthonormal", x)?;
    rec.check_count("eval_orthonormal", n)?;
    Ok(OrthonormalValues {
        x,
        values: rec.orthonormal_iter(x).take(n).collect(),
    })
}

/// Christoffel function λ_n(x) = 1 / Σ_{j<n} p_j(x)².
pub fn christoffel(rec: &RecurrenceCoefficients, x: f64, n: usize) -> Result<f64> {
    check_point("christoffel", x)?;
    rec.check_count("christoffel", n)?;
    let k: f64 = rec.orthonormal_iter(x).take(n).map(|p| p * p).sum();
    Ok(1.0 / k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn chebyshev_first_kind_recurrence() {
        let r = jacobi_recurrence(-0.5, -0.5, 40).unwrap();
        assert_abs_diff_eq!(r.b()[0], PI, epsilon = 1e-14);
        assert_abs_diff_eq!(r.b()[1], 0.5, epsilon = 1e-15);
        for k in 0..=40 {
            assert_abs_diff_eq!(r.a()[k], 0.0, epsilon = 1e-16);
            if k >= 2 {
                assert_abs_diff_eq!(r.b()[k], 0.25, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn chebyshev_second_kind_recurrence() {
        let r = jacobi_recurrence(0.5, 0.5, 40).unwrap();
        assert_abs_diff_eq!(r.b()[0], PI / 2.0, epsilon = 1e-14);
        for k in 1..=40 {
            assert_abs_diff_eq!(r.a()[k], 0.0, epsilon = 1e-16);
            assert_abs_diff_eq!(r.b()[k], 0.25, epsilon = 1e-15);
        }
    }

    #[test]
    fn legendre_recurrence() {
        let r = jacobi_recurrence(0.0, 0.0, 40).unwrap();
        assert_abs_diff_eq!(r.b()[0], 2.0, epsilon = 1e-14);
        for k in 1..=40usize {
            let kf = k as f64;
            assert_abs_diff_eq!(r.b()[k], kf * kf / (4.0 * kf * kf - 1.0), epsilon = 1e-15);
        }
    }

    #[test]
    fn jacobi_rejects_bad_input() {
        assert!(jacobi_recurrence(-1.0, 0.0, 3).is_err());
        assert!(jacobi_recurrence(0.0, 0.0, 0).is_err());
    }

    #[test]
    fn explicit_chebyshev_values() {
        let t = jacobi_recurrence(-0.5, -0.5, 30).unwrap();
        let u = jacobi_recurrence(0.5, 0.5, 30).unwrap();
        let theta: f64 = 1.1;
        let x = theta.cos();
        let pt = eval_orthonormal(&t, x, 31).unwrap().values;
        let pu = eval_orthonormal(&u, x, 31).unwrap().values;
        assert_abs_diff_eq!(pt[0], 1.0 / PI.sqrt(), epsilon = 1e-15);
        for (k, v) in pt.iter().enumerate().skip(1) {
            let want = (2.0 / PI).sqrt() * (k as f64 * theta).cos();
            assert_abs_diff_eq!(*v, want, epsilon = 1e-12);
        }
        for (k, v) in pu.iter().enumerate() {
            let want = (2.0 / PI).sqrt() * ((k + 1) as f64 * theta).sin() / theta.sin();
            assert_abs_diff_eq!(*v, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn single_value_and_christoffel_n1() {
        let r = jacobi_recurrence(0.3, -0.2, 5).unwrap();
        let v = eval_orthonormal(&r, 0.1, 1).unwrap();
        assert_eq!(v.values, vec![1.0 / r.b()[0].sqrt()]);
        assert_abs_diff_eq!(christoffel(&r, 0.1, 1).unwrap(), r.b()[0], epsilon = 1e-14);
        assert!(eval_orthonormal(&r, 1.5, 2).is_err());
        assert!(christoffel(&r, 0.0, 7).is_err());
        assert!(christoffel(&r, 0.0, 0).is_err());
    }

    #[test]
    fn christoffel_nonincreasing_in_n() {
        let r = jacobi_recurrence(0.0, 0.0, 200).unwrap();
        for &x in &[-0.7, 0.0, 0.33, 0.9] {
            let mut prev = f64::INFINITY;
            for n in 1..=200 {
                let l = christoffel(&r, x, n).unwrap();
                assert!(l <= prev && l > 0.0);
                prev = l;
            }
        }
    }

    #[test]
    fn stieltjes_reproduces_jacobi() {
        for &(al, be) in &[(-0.5, -0.5), (0.5, 0.5), (0.0, 0.0), (0.7, -0.3)] {
            let w = WeightSpec::new(al, be, vec![0.0]).unwrap();
            let s = stieltjes_recurrence(&w, 50).unwrap();
            let j = jacobi_recurrence(al, be, 50).unwrap();
            for k in 0..=50 {
                assert_abs_diff_eq!(s.a()[k], j.a()[k], epsilon = 1e-12);
                assert_abs_diff_eq!(s.b()[k], j.b()[k], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn constant_h_only_rescales_mass() {
        let w = WeightSpec::new(-0.5, -0.5, vec![0.3]).unwrap();
        let s = stieltjes_recurrence(&w, 30).unwrap();
        let j = jacobi_recurrence(-0.5, -0.5, 30).unwrap();
        assert_abs_diff_eq!(s.b()[0], PI * 0.3f64.exp(), epsilon = 1e-12);
        for k in 1..=30 {
            assert_abs_diff_eq!(s.b()[k], j.b()[k], epsilon = 1e-12);
            assert_abs_diff_eq!(s.a()[k], 0.0, epsilon = 1e-12);
        }
        let viaf = recurrence_for(&w, 30).unwrap();
        assert_abs_diff_eq!(viaf.b()[0], s.b()[0], epsilon = 1e-12);
    }

    #[test]
    fn stieltjes_too_small_rule_is_an_error() {
        let rule = gauss_jacobi(0.0, 0.0, 5).unwrap();
        assert!(stieltjes_on_rule(&rule, |_| 1.0, 5).is_err());
        // the 6th polynomial vanishes on a 5-point rule
        let r = stieltjes_on_rule(&rule, |_| 1.0, 5 - 1);
        assert!(r.is_ok());
    }
}
