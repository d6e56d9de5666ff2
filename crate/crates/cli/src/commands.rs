use christoffel_entropy::asymptotics::identities::{
    chebyshev_t_limit_cross_route, convexity_max, even_cosine_sum, odd_cosine_split,
    odd_cosine_sum, r_dual_route, sine_even, sine_odd,
};
use christoffel_entropy::asymptotics::{
    d_infinity, phase, s_hat_ks, subsequence, AngleClass, SubsequenceKind,
};
use christoffel_entropy::entropy::{
    chebyshev_entropy_at_angle, chebyshev_zero_entropy_direct, zero_closed_form_max_error,
    zero_entropy, EntropyReport,
};
use christoffel_entropy::exec::Execution;
use christoffel_entropy::orthopoly::{chebyshev_zero, recurrence_for, ChebKind, WeightSpec};

use crate::args::{LimitArgs, PointArgs, ScanArgs, VerifyArgs, ZerosArgs};
use crate::config::{
    check_x, parse_grid, require_angle, resolve_angle, resolve_degrees, resolve_weight,
};
use crate::output::{emit, CheckRow, GapRow, LimitRow, ZeroRow};
use crate::CliError;

/// Rows ordered by (n, x); `xs` must be increasing.
fn entropy_table(
    weight: &WeightSpec,
    xs: &[f64],
    ns: &[usize],
    d_inf: Option<f64>,
    exec: Execution,
) -> Result<Vec<EntropyReport>, CliError> {
    let n_max = *ns.last().expect("non-empty schedule");
    let rec = recurrence_for(weight, n_max)?;
    let points: Vec<(usize, f64)> = ns
        .iter()
        .flat_map(|&n| xs.iter().map(move |&x| (n, x)))
        .collect();
    Ok(exec.try_map(&points, |&(n, x)| EntropyReport::compute(&rec, x, n, d_inf))?)
}

pub fn entropy(args: &PointArgs) -> Result<i32, CliError> {
    let weight = resolve_weight(&args.weight)?;
    let ns = resolve_degrees(&args.degrees)?;
    let angle = resolve_angle(&args.angle)?;
    let (x, d_inf) = match (&angle, args.x) {
        (Some(a), _) => (a.x(), Some(d_infinity(&weight, a)?)),
        (None, Some(x)) => (check_x(x)?, None),
        (None, None) => {
            return Err(CliError::Config(
                "one of --x, --angle or --theta is required".into(),
            ))
        }
    };
    let rows = entropy_table(&weight, &[x], &ns, d_inf, Execution::Sequential)?;
    emit(&rows, &args.output)?;
    Ok(0)
}

pub fn scan(args: &ScanArgs) -> Result<i32, CliError> {
    let weight = resolve_weight(&args.weight)?;
    let ns = resolve_degrees(&args.degrees)?;
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let angle = resolve_angle(&args.angle)?;
    let (xs, d_inf) = match (&angle, &args.x_grid, args.x) {
        (Some(a), _, _) => (vec![a.x()], Some(d_infinity(&weight, a)?)),
        (None, Some(grid), _) => (parse_grid(grid)?, None),
        (None, None, Some(x)) => (vec![check_x(x)?], None),
        (None, None, None) => {
            return Err(CliError::Config(
                "one of --x-grid, --x, --angle or --theta is required".into(),
            ))
        }
    };
    let rows = entropy_table(&weight, &xs, &ns, d_inf, exec)?;
    emit(&rows, &args.output)?;
    Ok(0)
}

pub fn limit(args: &LimitArgs) -> Result<i32, CliError> {
    let weight = resolve_weight(&args.weight)?;
    let angle = require_angle(&args.angle)?;
    let (label, class, s_hat) = match angle {
        AngleClass::Rational(r) => (r.to_string(), "rational", Some(s_hat_ks(&weight, r)?)),
        AngleClass::Irrational(t) => (format!("{t}"), "irrational", None),
    };
    let row = LimitRow {
        angle: label,
        class,
        theta: angle.theta(),
        x: angle.x(),
        phase: phase(&weight, angle.theta())?,
        s_hat,
        d_infinity: d_infinity(&weight, &angle)?,
    };
    emit(&[row], &args.output)?;
    Ok(0)
}

pub fn zeros(args: &ZerosArgs) -> Result<i32, CliError> {
    let kind = args.kind;
    if let Some(id) = args.lambda {
        let angle = require_angle(&args.angle)?;
        let items = subsequence(SubsequenceKind::try_from(id)?, &angle, args.count)?;
        let theta = angle.theta();
        let rows = Execution::default().try_map(&items, |it| -> Result<GapRow, CliError> {
            let closed = zero_entropy(kind, it.n, it.j)?;
            let at_x = chebyshev_entropy_at_angle(kind, it.n, theta);
            Ok(GapRow {
                n: it.n,
                j: it.j,
                zero: chebyshev_zero(kind, it.n, it.j)?,
                zero_entropy: closed,
                shannon_at_x: at_x,
                gap: closed - at_x,
            })
        })?;
        emit(&rows, &args.output)?;
        return Ok(0);
    }
    let n = args
        .n
        .ok_or_else(|| CliError::Config("zeros needs --n, or --lambda with an angle".into()))?;
    if n == 0 {
        return Err(CliError::Config("--n must be at least 1".into()));
    }
    let js: Vec<usize> = (1..=n).collect();
    let rows = Execution::default().try_map(&js, |&j| -> Result<ZeroRow, CliError> {
        let closed = zero_entropy(kind, n, j)?;
        let direct = chebyshev_zero_entropy_direct(kind, n, j)?;
        Ok(ZeroRow {
            n,
            j,
            zero: chebyshev_zero(kind, n, j)?,
            closed_form: closed,
            direct,
            difference: closed - direct,
        })
    })?;
    emit(&rows, &args.output)?;
    Ok(0)
}

pub fn verify(args: &VerifyArgs) -> Result<i32, CliError> {
    if !(args.tol > 0.0) {
        return Err(CliError::Config(format!(
            "--tol must be positive, got {}",
            args.tol
        )));
    }
    if args.n == 0 {
        return Err(CliError::Config("--n must be at least 1".into()));
    }
    let exec = Execution::default();
    let below = |check: &str, value: f64| CheckRow {
        check: check.to_string(),
        value,
        criterion: "below tol",
        pass: value.is_finite() && value < args.tol,
    };
    let convex = convexity_max(1000)?;
    let rows = vec![
        below(
            "zero_entropy_first_kind",
            zero_closed_form_max_error(ChebKind::First, args.n, exec)?,
        ),
        below(
            "zero_entropy_second_kind",
            zero_closed_form_max_error(ChebKind::Second, args.n, exec)?,
        ),
        below("r_dual_route", r_dual_route()?),
        below("cosine_sum_even_k", even_cosine_sum(exec)?),
        below("cosine_sum_odd_k", odd_cosine_sum(exec)?),
        below("cosine_split_odd_k", odd_cosine_split(exec)?),
        below("sine_sum_odd_k", sine_odd(exec)?),
        below("sine_sum_even_k", sine_even(exec)?),
        below(
            "d_infinity_cross_route",
            chebyshev_t_limit_cross_route(50, exec)?,
        ),
        CheckRow {
            check: "convexity_gap".into(),
            value: convex,
            criterion: "negative",
            pass: convex < 0.0,
        },
    ];
    let ok = rows.iter().all(|r| r.pass);
    emit(&rows, &args.output)?;
    if !ok {
        eprintln!("verification failed");
    }
    Ok(if ok { 0 } else { 1 })
}
