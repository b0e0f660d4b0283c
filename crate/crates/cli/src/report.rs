//! Reports: a verdict plus labeled numbers and matrices, rendered either as
//! human-readable text (6 significant digits) or as one JSON object.

use std::fmt::Write;

use pasf_core::{Matrix, NormBound};
use serde::Serialize;

use crate::CliError;

/// A labeled number and the tolerance it was judged against. Inexact
/// operator norms also carry their `[lower, upper]` bracket.
#[derive(Clone, Debug, Serialize)]
pub struct Number {
    pub label: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<[f64; 2]>,
    pub tol: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabeledMatrix {
    pub label: String,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub verdict: String,
    pub holds: bool,
    pub exit_code: u8,
    pub tol: f64,
    pub numbers: Vec<Number>,
    pub matrices: Vec<LabeledMatrix>,
    pub outputs: Vec<String>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorEnvelope<'a> {
    command: &'a str,
    inputs: &'a [String],
    error: ErrorBody<'a>,
    exit_code: u8,
    tol: f64,
}

impl Report {
    pub fn new(command: &str, inputs: &[String], tol: f64) -> Self {
        Report {
            command: command.into(),
            inputs: inputs.to_vec(),
            verdict: String::new(),
            holds: true,
            exit_code: crate::EXIT_HOLDS,
            tol,
            numbers: Vec::new(),
            matrices: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn verdict(&mut self, holds: bool, text: impl Into<String>) {
        self.holds = holds;
        self.exit_code = if holds {
            crate::EXIT_HOLDS
        } else {
            crate::EXIT_FAILS
        };
        self.verdict = text.into();
    }

    pub fn number(&mut self, label: impl Into<String>, value: f64) {
        self.numbers.push(Number {
            label: label.into(),
            value,
            bracket: None,
            tol: self.tol,
        });
    }

    pub fn bound(&mut self, label: impl Into<String>, b: &NormBound) {
        self.numbers.push(Number {
            label: label.into(),
            value: b.value(),
            bracket: (!b.exact).then_some([b.lower, b.upper]),
            tol: self.tol,
        });
    }

    pub fn matrix(&mut self, label: impl Into<String>, m: &Matrix) {
        self.matrices.push(LabeledMatrix {
            label: label.into(),
            rows: m.to_rows(),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("{}\n", self.verdict);
        for n in &self.numbers {
            match n.bracket {
                Some([lo, hi]) => writeln!(out, "  {}: [{}, {}]", n.label, fmt_g(lo), fmt_g(hi)),
                None => writeln!(out, "  {}: {}", n.label, fmt_g(n.value)),
            }
            .unwrap();
        }
        for m in &self.matrices {
            writeln!(out, "  {}:", m.label).unwrap();
            for row in &m.rows {
                let cells: Vec<String> = row.iter().map(|v| fmt_g(*v)).collect();
                writeln!(out, "    [{}]", cells.join(", ")).unwrap();
            }
        }
        for o in &self.outputs {
            writeln!(out, "  wrote {o}").unwrap();
        }
        out
    }
}

pub fn error_json(command: &str, inputs: &[String], tol: f64, err: &CliError) -> String {
    let envelope = ErrorEnvelope {
        command,
        inputs,
        error: ErrorBody {
            code: err.code(),
            message: err.to_string(),
        },
        exit_code: err.exit_code(),
        tol,
    };
    serde_json::to_string_pretty(&envelope).expect("envelope serializes")
}

/// Formats like C's `%g` with 6 significant digits.
pub fn fmt_g(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{sign}{:02}",
            trim_zeros(mantissa.to_string()),
            exp.abs()
        )
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
