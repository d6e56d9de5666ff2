//! Acceptance criteria 1–10. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits non-zero if any fails.

mod common;

use std::f64::consts::{LN_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use christoffel_entropy::asymptotics::identities::{
    chebyshev_t_limit_cross_route, convexity_max, even_cosine_sum, odd_cosine_split,
    odd_cosine_sum, r_dual_route, sine_odd,
};
use christoffel_entropy::asymptotics::{
    asymptotic_pn, d_infinity, default_epsilon_schedule, hilbert_phase_term,
    lambda_two_limits_with, max_gap_over_zeros, odd_gap_bound, phase, pv_integral_oracle,
    s_hat_n_empirical, subsequence, test_angles, zero_entropy_gap, AngleClass, SubsequenceItem,
    SubsequenceKind, IRRATIONAL_D_INFINITY, IRRATIONAL_S_HAT,
};
use christoffel_entropy::entropy::{
    divergence_at, gcd, shannon_at, zero_closed_form_max_error, zero_entropy,
};
use christoffel_entropy::exec::Execution;
use christoffel_entropy::orthopoly::{
    chebyshev_orthonormal, chebyshev_zero, jacobi_recurrence, recurrence_for, ChebKind,
    RecurrenceCoefficients, WeightSpec,
};
use christoffel_entropy::specfun::r_closed;
use christoffel_entropy::Result;

const TOL_CLOSED_FORM: f64 = 1e-10;
const TOL_R_DUAL: f64 = 1e-12;
const TOL_IDENTITY: f64 = 1e-10;
const TOL_CROSS_ROUTE: f64 = 1e-10;
const TOL_RATIONAL_LIMIT: f64 = 0.02;
const TOL_S_HAT_IRRATIONAL: f64 = 0.01;
const TOL_DIVERGENCE_IRRATIONAL: f64 = 0.03;
const TOL_GAP_FINAL: f64 = 0.01;
const TOL_GAP_BOUND_SLACK: f64 = 0.01;
const ROUNDING_SLACK: f64 = 1e-12;
const UNIVERSALITY_BAND: (f64, f64) = (0.98, 1.02);
const TOL_TAIL: f64 = 0.01;
const TOL_SPECTRAL_PHASE: f64 = 1e-10;
const TOL_PV_ORACLE: f64 = 1e-6;
const TOL_CHEBYSHEV_ASYMPTOTIC: f64 = 1e-12;
const TOL_ORTHONORMAL: f64 = 1e-10;

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Outcome);

fn named_weights() -> [(&'static str, WeightSpec); 3] {
    [
        ("T", WeightSpec::chebyshev_first()),
        ("U", WeightSpec::chebyshev_second()),
        ("Legendre", WeightSpec::legendre()),
    ]
}

fn jacobi_for(weight: &WeightSpec, n_max: usize) -> Result<RecurrenceCoefficients> {
    jacobi_recurrence(weight.alpha(), weight.beta(), n_max)
}

fn criterion_1() -> Outcome {
    let mut worst: f64 = 0.0;
    for (kind, alpha) in [(ChebKind::First, -0.5), (ChebKind::Second, 0.5)] {
        let rec = jacobi_recurrence(alpha, alpha, 200)?;
        let ns: Vec<usize> = (1..=200).collect();
        let per_n = Execution::default().try_map(&ns, |&n| -> Result<f64> {
            let mut w: f64 = 0.0;
            for j in 1..=n {
                let direct = shannon_at(&rec, chebyshev_zero(kind, n, j)?, n)?;
                w = w.max((zero_entropy(kind, n, j)? - direct).abs());
            }
            Ok(w)
        })?;
        worst = per_n.into_iter().fold(worst, f64::max);
    }
    let trig = zero_closed_form_max_error(ChebKind::First, 200, Execution::default())?.max(
        zero_closed_form_max_error(ChebKind::Second, 200, Execution::default())?,
    );
    Ok((
        worst < TOL_CLOSED_FORM && trig < TOL_CLOSED_FORM,
        format!(
            "max |closed - recurrence| = {worst:.3e}, max |closed - explicit trig| = {trig:.3e}"
        ),
    ))
}

fn criterion_2() -> Outcome {
    let dual = r_dual_route()?;
    let half = (r_closed(0.5)? - (2.0 * LN_2 - 1.0)).abs();
    Ok((
        dual < TOL_R_DUAL && half < TOL_R_DUAL,
        format!("max dual-route diff = {dual:.3e}, |R(1/2) - (2log2 - 1)| = {half:.3e}"),
    ))
}

fn criterion_3() -> Outcome {
    let exec = Execution::default();
    let even = even_cosine_sum(exec)?;
    let odd = odd_cosine_sum(exec)?;
    let s1 = odd_cosine_split(exec)?;
    let sine = sine_odd(exec)?;
    let convex = convexity_max(1000)?;
    let worst = even.max(odd).max(s1).max(sine);
    Ok((
        worst < TOL_IDENTITY && convex < 0.0,
        format!(
            "even k {even:.2e}, odd k {odd:.2e}, split {s1:.2e}, sine {sine:.2e}, convexity max {convex:.3e}"
        ),
    ))
}

fn criterion_4() -> Outcome {
    let cross = chebyshev_t_limit_cross_route(50, Execution::default())?;
    let w = WeightSpec::chebyshev_first();
    let mut sign_ok = true;
    for k in 2..=50u64 {
        for s in (1..k).filter(|&s| gcd(s, k) == 1) {
            let d = d_infinity(&w, &AngleClass::rational(s, k)?)?;
            let ok = if k % 2 == 0 {
                d > IRRATIONAL_D_INFINITY
            } else {
                d < IRRATIONAL_D_INFINITY
            };
            sign_ok &= ok;
        }
    }
    Ok((
        cross < TOL_CROSS_ROUTE && sign_ok,
        format!("max cross-route diff = {cross:.3e}, sign pattern holds = {sign_ok}"),
    ))
}

fn criterion_5() -> Outcome {
    let base = 10_000usize;
    let mut pass = true;
    let mut worst_point: f64 = 0.0;
    let mut details = Vec::new();
    for (name, w) in named_weights() {
        let rec = jacobi_for(&w, 2 * base + 8)?;
        for (s, k) in [(1u64, 2u64), (1, 3), (2, 5)] {
            let angle = AngleClass::rational(s, k)?;
            let limit = d_infinity(&w, &angle)?;
            let err = |n: usize| -> Result<f64> {
                Ok((divergence_at(&rec, angle.x(), n)? - limit).abs())
            };
            let envelope = |n: usize| -> Result<f64> {
                (0..k as usize).try_fold(0.0f64, |m, r| Ok(m.max(err(n + r)?)))
            };
            let at_base = err(base)?;
            let (e1, e2) = (envelope(base)?, envelope(2 * base)?);
            worst_point = worst_point.max(at_base);
            let ok = at_base < TOL_RATIONAL_LIMIT && e2 < e1;
            pass &= ok;
            if !ok {
                details.push(format!(
                    "{name} {s}/{k}: err {at_base:.2e}, envelope {e1:.2e} -> {e2:.2e}"
                ));
            }
        }
    }
    let mut msg = format!("max error at n = 1e4: {worst_point:.3e}; envelopes shrink on doubling");
    if !details.is_empty() {
        msg = details.join("; ");
    }
    Ok((pass, msg))
}

fn criterion_6() -> Outcome {
    let theta = test_angles::ONE;
    let mut worst_s: f64 = 0.0;
    for (_, w) in named_weights() {
        worst_s = worst_s.max((s_hat_n_empirical(&w, theta, 100_000)? - IRRATIONAL_S_HAT).abs());
    }
    let w = WeightSpec::legendre();
    let rec = jacobi_for(&w, 10_000)?;
    let d = divergence_at(&rec, theta.cos(), 10_000)?;
    let d_err = (d - IRRATIONAL_D_INFINITY).abs();
    Ok((
        worst_s < TOL_S_HAT_IRRATIONAL && d_err < TOL_DIVERGENCE_IRRATIONAL,
        format!("|S_hat - (1/2 - log2)| = {worst_s:.3e}, |D - (1 - log2)| = {d_err:.3e}"),
    ))
}

fn shrinking_to_zero(gaps: &[f64]) -> bool {
    gaps.windows(2)
        .all(|p| p[1].abs() <= p[0].abs() + ROUNDING_SLACK)
        && gaps.last().is_some_and(|g| g.abs() < TOL_GAP_FINAL)
}

fn past_1000(kind: SubsequenceKind, angle: &AngleClass) -> Result<Vec<SubsequenceItem>> {
    let mut count = 16;
    loop {
        let items = subsequence(kind, angle, count)?;
        if items.last().is_some_and(|it| it.n > 1000) {
            return Ok(items);
        }
        count *= 2;
    }
}

fn criterion_7() -> Outcome {
    let exec = Execution::default();
    let mut pass = true;
    let mut failing = Vec::new();
    let mut final_gap: f64 = 0.0;
    for (s, k) in [(1u64, 2u64), (1, 3), (2, 5)] {
        let a = AngleClass::rational(s, k)?;
        let gaps = zero_entropy_gap(
            ChebKind::Second,
            &a,
            &past_1000(SubsequenceKind::Lambda4, &a)?,
            exec,
        )?;
        if !shrinking_to_zero(&gaps) {
            pass = false;
            failing.push(format!("second kind {s}/{k}"));
        }
        final_gap = final_gap.max(gaps.last().map_or(f64::INFINITY, |g| g.abs()));
    }
    for (s, k) in [(1u64, 2u64), (1, 4), (3, 4), (1, 6)] {
        let a = AngleClass::rational(s, k)?;
        let gaps = zero_entropy_gap(
            ChebKind::First,
            &a,
            &past_1000(SubsequenceKind::Lambda2, &a)?,
            exec,
        )?;
        if !shrinking_to_zero(&gaps) {
            pass = false;
            failing.push(format!("first kind {s}/{k}"));
        }
        final_gap = final_gap.max(gaps.last().map_or(f64::INFINITY, |g| g.abs()));
    }
    let ns: Vec<usize> = (1001..=1200).collect();
    let mut margins = Vec::new();
    for k in [3u64, 5, 7] {
        let bound = odd_gap_bound(k)?;
        let worst = max_gap_over_zeros(ChebKind::First, &AngleClass::rational(1, k)?, &ns, exec)?;
        pass &= bound < 0.0 && worst < bound + TOL_GAP_BOUND_SLACK;
        margins.push(format!("k={k}: max {worst:.4} vs bound {bound:.4}"));
    }
    if !failing.is_empty() {
        margins.push(format!("not shrinking: {}", failing.join(", ")));
    }
    Ok((
        pass,
        format!("final |gap| {final_gap:.2e}; {}", margins.join(", ")),
    ))
}

fn criterion_8() -> Outcome {
    let n = 4000;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut tail: f64 = 0.0;
    for (_, w) in named_weights() {
        let rec = jacobi_for(&w, n)?;
        for x in [0.0, 0.3, -0.3, 0.6, -0.6] {
            let (ratio, t) = lambda_two_limits_with(&w, &rec, x, n)?;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
            tail = tail.max(t);
        }
    }
    Ok((
        lo >= UNIVERSALITY_BAND.0 && hi <= UNIVERSALITY_BAND.1 && tail < TOL_TAIL,
        format!("ratio in [{lo:.5}, {hi:.5}], max lambda p_n^2 = {tail:.3e}"),
    ))
}

fn criterion_9() -> Outcome {
    let w = WeightSpec::new(0.0, 0.0, vec![0.0, 1.0])?;
    let mut spectral: f64 = 0.0;
    for i in 1..100 {
        let theta = PI * i as f64 / 100.0;
        spectral = spectral.max((hilbert_phase_term(&w, theta) - 0.5 * theta.sin()).abs());
    }
    let eps = default_epsilon_schedule();
    let mut oracle: f64 = 0.0;
    for x in [-0.7, -0.4, -0.1, 0.0, 0.2, 0.5, 0.8] {
        let theta = f64::acos(x);
        let pv = pv_integral_oracle(&w, x, &eps)?;
        oracle = oracle.max((phase(&w, theta)? - theta.sin() / (2.0 * PI) * pv).abs());
    }
    let mut cheb: f64 = 0.0;
    for (kind, w, first_n) in [
        (ChebKind::First, WeightSpec::chebyshev_first(), 1usize),
        (ChebKind::Second, WeightSpec::chebyshev_second(), 0),
    ] {
        for i in 1..40 {
            // compare at the same x: acos(cos θ) ≠ θ near the endpoints
            let x = (PI * i as f64 / 40.0).cos();
            let theta = x.acos();
            for n in first_n..=200 {
                let approx = asymptotic_pn(&w, n, x)?;
                cheb = cheb.max((approx - chebyshev_orthonormal(kind, n, theta)).abs());
            }
        }
    }
    Ok((
        spectral < TOL_SPECTRAL_PHASE && oracle < TOL_PV_ORACLE && cheb < TOL_CHEBYSHEV_ASYMPTOTIC,
        format!("spectral {spectral:.2e}, oracle {oracle:.2e}, Chebyshev asymptotics {cheb:.2e}"),
    ))
}

fn criterion_10() -> Outcome {
    let cases = [
        (0.0, 0.0, vec![0.0, 1.0]),
        (-0.5, -0.5, vec![0.0, 0.5, 0.25]),
        (0.5, -0.5, vec![0.0, 1.0]),
    ];
    let mut worst: f64 = 0.0;
    for (alpha, beta, logh) in cases {
        let w = WeightSpec::new(alpha, beta, logh.clone())?;
        let rec = recurrence_for(&w, 30)?;
        let values = |x: f64| rec.orthonormal_iter(x).collect::<Vec<f64>>();
        for i in 0..=30 {
            for j in 0..=i {
                let ip = common::weighted_integral(alpha, beta, &logh, |x| {
                    let v = values(x);
                    v[i] * v[j]
                });
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((ip - target).abs());
            }
        }
    }
    Ok((
        worst < TOL_ORTHONORMAL,
        format!("max |<p_i, p_j> - delta_ij| = {worst:.3e}"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "Chebyshev zero entropies: closed form vs recurrence",
            criterion_1,
        ),
        ("R function: closed form vs series", criterion_2),
        ("trigonometric-sum identities and convexity", criterion_3),
        (
            "limiting divergence cross-route and sign pattern",
            criterion_4,
        ),
        ("rational-angle divergence convergence", criterion_5),
        ("irrational-angle limits", criterion_6),
        ("zero-entropy gaps along subsequences", criterion_7),
        ("Christoffel function universality", criterion_8),
        ("phase and principal-value machinery", criterion_9),
        ("generalized-weight orthonormality", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
        failures += usize::from(!ok);
        println!(
            "criterion {:>2}: {} | {name} | {detail} | {:.2?}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
