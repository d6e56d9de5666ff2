use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use christoffel_entropy::entropy::{format_float, EntropyReport};
use serde::Serialize;

use crate::args::{Format, OutputArgs};
use crate::CliError;

/// A record that can be written as a CSV row or a JSON object.
pub trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn fields(&self) -> Vec<String>;
}

pub fn opt(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

impl Row for EntropyReport {
    fn header() -> &'static [&'static str] {
        &EntropyReport::CSV_HEADER
    }

    fn fields(&self) -> Vec<String> {
        self.csv_fields().to_vec()
    }
}

#[derive(Debug, Serialize)]
pub struct LimitRow {
    pub angle: String,
    pub class: &'static str,
    pub theta: f64,
    pub x: f64,
    pub phase: f64,
    pub s_hat: Option<f64>,
    pub d_infinity: f64,
}

impl Row for LimitRow {
    fn header() -> &'static [&'static str] {
        &[
            "angle",
            "class",
            "theta",
            "x",
            "phase",
            "s_hat",
            "d_infinity",
        ]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.angle.clone(),
            self.class.to_string(),
            format_float(self.theta),
            format_float(self.x),
            format_float(self.phase),
            opt(self.s_hat),
            format_float(self.d_infinity),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct ZeroRow {
    pub n: usize,
    pub j: usize,
    pub zero: f64,
    pub closed_form: f64,
    pub direct: f64,
    pub difference: f64,
}

impl Row for ZeroRow {
    fn header() -> &'static [&'static str] {
        &["n", "j", "zero", "closed_form", "direct", "difference"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.j.to_string(),
            format_float(self.zero),
            format_float(self.closed_form),
            format_float(self.direct),
            format_float(self.difference),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct GapRow {
    pub n: usize,
    pub j: usize,
    pub zero: f64,
    pub zero_entropy: f64,
    pub shannon_at_x: f64,
    pub gap: f64,
}

impl Row for GapRow {
    fn header() -> &'static [&'static str] {
        &["n", "j", "zero", "zero_entropy", "shannon_at_x", "gap"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.j.to_string(),
            format_float(self.zero),
            format_float(self.zero_entropy),
            format_float(self.shannon_at_x),
            format_float(self.gap),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub value: f64,
    pub criterion: &'static str,
    pub pass: bool,
}

impl Row for CheckRow {
    fn header() -> &'static [&'static str] {
        &["check", "value", "criterion", "pass"]
    }

    fn fields(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            format_float(self.value),
            self.criterion.to_string(),
            self.pass.to_string(),
        ]
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            CliError::Config(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn emit<R: Row>(rows: &[R], output: &OutputArgs) -> Result<(), CliError> {
    let mut w = sink(output.out.as_deref())?;
    match output.format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut w);
            csv.write_record(R::header()).map_err(io_error)?;
            for row in rows {
                csv.write_record(row.fields()).map_err(io_error)?;
            }
            csv.flush().map_err(CliError::Io)?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, rows).map_err(|e| CliError::Io(e.into()))?;
            writeln!(w).map_err(CliError::Io)?;
        }
    }
    w.flush().map_err(CliError::Io)
}

fn io_error(e: csv::Error) -> CliError {
    CliError::Io(io::Error::other(e))
}
