use std::fs;

use christoffel_entropy::asymptotics::AngleClass;
use christoffel_entropy::orthopoly::WeightSpec;

use crate::args::{AngleArgs, DegreeArgs, WeightArgs};
use crate::CliError;

/// Inline flags override the matching fields of `--weight`; with neither the
/// weight defaults to Legendre.
pub fn resolve_weight(args: &WeightArgs) -> Result<WeightSpec, CliError> {
    let base = match &args.weight {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            let spec: WeightSpec = serde_json::from_str(&text).map_err(|e| {
                CliError::Config(format!("bad weight file {}: {e}", path.display()))
            })?;
            let inline = args.alpha.is_some() || args.beta.is_some() || args.logh_coeffs.is_some();
            if inline {
                eprintln!(
                    "warning: inline weight flags override values from {}",
                    path.display()
                );
            }
            spec
        }
        None => WeightSpec::legendre(),
    };
    let alpha = args.alpha.unwrap_or(base.alpha());
    let beta = args.beta.unwrap_or(base.beta());
    let logh = args
        .logh_coeffs
        .clone()
        .unwrap_or_else(|| base.logh_cheb().to_vec());
    Ok(WeightSpec::new(alpha, beta, logh)?)
}

pub fn resolve_angle(args: &AngleArgs) -> Result<Option<AngleClass>, CliError> {
    match (args.angle, args.theta) {
        (Some(r), _) => Ok(Some(AngleClass::Rational(r))),
        (None, Some(t)) => Ok(Some(AngleClass::irrational(t)?)),
        (None, None) => Ok(None),
    }
}

pub fn require_angle(args: &AngleArgs) -> Result<AngleClass, CliError> {
    resolve_angle(args)?
        .ok_or_else(|| CliError::Config("one of --angle or --theta is required".into()))
}

pub fn resolve_degrees(args: &DegreeArgs) -> Result<Vec<usize>, CliError> {
    let ns = match (&args.n, &args.n_schedule) {
        (Some(n), _) => vec![*n],
        (None, Some(s)) => s.clone(),
        (None, None) => {
            return Err(CliError::Config(
                "one of --n or --n-schedule is required".into(),
            ))
        }
    };
    if ns.is_empty() || ns[0] == 0 {
        return Err(CliError::Config("degrees must be at least 1".into()));
    }
    if ns.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CliError::Config(
            "--n-schedule must be strictly increasing".into(),
        ));
    }
    Ok(ns)
}

/// Points a, a+step, … up to b (inclusive within rounding).
pub fn parse_grid(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = || {
        CliError::Config(format!(
            "x grid '{text}' must be a:b:step with a <= b, step > 0"
        ))
    };
    let parts: Vec<f64> = text
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [a, b, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0 && a <= b && a.is_finite() && b.is_finite()) {
        return Err(bad());
    }
    let count = ((b - a) / step + 1e-9).floor() as usize + 1;
    let points: Vec<f64> = (0..count).map(|i| a + i as f64 * step).collect();
    for &x in &points {
        check_x(x)?;
    }
    Ok(points)
}

pub fn check_x(x: f64) -> Result<f64, CliError> {
    if x > -1.0 && x < 1.0 {
        Ok(x)
    } else {
        Err(CliError::Config(format!("x = {x} must lie in (-1, 1)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("-0.5:0.5:0.25").unwrap();
        assert_eq!(g, vec![-0.5, -0.25, 0.0, 0.25, 0.5]);
        assert_eq!(parse_grid("0.1:0.1:1").unwrap(), vec![0.1]);
        assert!(parse_grid("0:1:0.5").is_err());
        assert!(parse_grid("0.5:0.1:0.1").is_err());
        assert!(parse_grid("0:0.5").is_err());
        assert!(parse_grid("a:b:c").is_err());
    }

    #[test]
    fn schedule_must_increase() {
        let d = |s: Vec<usize>| DegreeArgs {
            n: None,
            n_schedule: Some(s),
        };
        assert!(resolve_degrees(&d(vec![10, 20, 40])).is_ok());
        assert!(resolve_degrees(&d(vec![10, 10])).is_err());
        assert!(resolve_degrees(&d(vec![0, 10])).is_err());
        assert!(resolve_degrees(&DegreeArgs {
            n: None,
            n_schedule: None
        })
        .is_err());
    }
}
