//! Index subsequences (n, j) along which Chebyshev zeros approach a fixed
//! x = cos θ, and the entropy gap 𝔖_{n,j} − 𝒮(Ψ_n(x)) along them.

use crate::asymptotics::angle::AngleClass;
use crate::entropy::{chebyshev_entropy_at_angle, zero_entropy};
use crate::error::{domain, Error, Result};
use crate::exec::Execution;
use crate::orthopoly::ChebKind;

/// A degree n and a zero index 1 ≤ j ≤ n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsequenceItem {
    pub n: usize,
    pub j: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsequenceKind {
    /// (p, ⌊θp/π⌋) over primes p; irrational θ.
    Lambda1,
    /// (k(2m+1)/2, (s(2m+1)+1)/2), m ≥ 1; rational with k even.
    Lambda2,
    /// (p−1, ⌊θ(p−1)/π⌋) over primes p; irrational θ.
    Lambda3,
    /// (mk−1, sm), m ≥ 1; rational.
    Lambda4,
}

impl TryFrom<u8> for SubsequenceKind {
    type Error = Error;

    fn try_from(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::Lambda1),
            2 => Ok(Self::Lambda2),
            3 => Ok(Self::Lambda3),
            4 => Ok(Self::Lambda4),
            _ => Err(Error::Config(format!(
                "subsequence id {id} must be 1, 2, 3 or 4"
            ))),
        }
    }
}

/// Primes in increasing order (incremental sieve that doubles its range).
pub fn primes() -> impl Iterator<Item = usize> {
    let mut limit = 64usize;
    let mut found: Vec<usize> = Vec::new();
    let mut next = 0usize;
    std::iter::from_fn(move || {
        while next >= found.len() {
            limit *= 2;
            found = sieve(limit);
        }
        next += 1;
        Some(found[next - 1])
    })
}

fn sieve(limit: usize) -> Vec<usize> {
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i);
            let mut m = i * i;
            while m <= limit {
                composite[m] = true;
                m += i;
            }
        }
    }
    out
}

/// First `count` items of the chosen subsequence, in increasing n.
/// Items of Λ₁/Λ₃ with j = 0 are skipped.
pub fn subsequence(
    kind: SubsequenceKind,
    angle: &AngleClass,
    count: usize,
) -> Result<Vec<SubsequenceItem>> {
    match (kind, angle) {
        (SubsequenceKind::Lambda1 | SubsequenceKind::Lambda3, AngleClass::Irrational(theta)) => {
            let ratio = theta / std::f64::consts::PI;
            let offset = usize::from(kind == SubsequenceKind::Lambda3);
            Ok(primes()
                .map(|p| {
                    let n = p - offset;
                    SubsequenceItem {
                        n,
                        j: (ratio * n as f64).floor() as usize,
                    }
                })
                .filter(|it| it.j >= 1)
                .take(count)
                .collect())
        }
        (SubsequenceKind::Lambda2, AngleClass::Rational(r)) => {
            if r.k() % 2 != 0 {
                return Err(domain(
                    "subsequence",
                    format!("Λ2 needs an even denominator, got {r}"),
                ));
            }
            let (s, k) = (r.s() as usize, r.k() as usize);
            Ok((1..=count)
                .map(|m| SubsequenceItem {
                    n: k * (2 * m + 1) / 2,
                    j: (s * (2 * m + 1)).div_ceil(2),
                })
                .collect())
        }
        (SubsequenceKind::Lambda4, AngleClass::Rational(r)) => {
            let (s, k) = (r.s() as usize, r.k() as usize);
            Ok((1..=count)
                .map(|m| SubsequenceItem {
                    n: m * k - 1,
                    j: s * m,
                })
                .collect())
        }
        (kind, angle) => Err(domain(
            "subsequence",
            format!("{kind:?} is not defined for {angle:?}"),
        )),
    }
}

/// 𝔖_{n,j} − 𝒮(Ψ_n(cos θ)) for each item, Chebyshev polynomials of `kind`.
pub fn zero_entropy_gap(
    kind: ChebKind,
    angle: &AngleClass,
    items: &[SubsequenceItem],
    exec: Execution,
) -> Result<Vec<f64>> {
    let theta = angle.theta();
    exec.try_map(items, |it| {
        Ok(zero_entropy(kind, it.n, it.j)? - chebyshev_entropy_at_angle(kind, it.n, theta))
    })
}

/// Largest gap over every zero index j, for each n in `ns`.
pub fn max_gap_over_zeros(
    kind: ChebKind,
    angle: &AngleClass,
    ns: &[usize],
    exec: Execution,
) -> Result<f64> {
    let theta = angle.theta();
    let per_n = exec.try_map(ns, |&n| -> Result<f64> {
        let s = chebyshev_entropy_at_angle(kind, n, theta);
        let mut worst = f64::NEG_INFINITY;
        for j in 1..=n {
            worst = worst.max(zero_entropy(kind, n, j)? - s);
        }
        Ok(worst)
    })?;
    Ok(per_n.into_iter().fold(f64::NEG_INFINITY, f64::max))
}
