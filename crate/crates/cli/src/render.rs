//! Output formats for normal forms, triangles and verification reports.
//!
//! Every renderer is a pure function of its input, so identical inputs give
//! identical bytes.

use std::fmt::Write as _;

use intorder_core::{EquivalenceReport, NormalForm, Rational, RationalPolynomial, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Latex,
    Json,
    Csv,
}

/// A normal form together with the word it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordered {
    pub word: String,
    pub total_x: u64,
    pub total_i: u64,
    pub nf: NormalForm,
}

impl Ordered {
    pub fn new(word: &Word, nf: NormalForm) -> Self {
        let (total_x, total_i) = word.total_degrees();
        Ordered { word: word.to_string(), total_x, total_i, nf }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalFormDoc {
    pub word: String,
    pub total_x: u64,
    #[serde(rename = "total_I")]
    pub total_i: u64,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub k: u64,
    pub x: u64,
    #[serde(rename = "I")]
    pub i: u64,
    /// Signed decimal; coefficients routinely exceed 64 bits.
    pub coeff: String,
}

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid coefficient {0:?}")]
    Coefficient(String),
    #[error("term x^{x} I^{i} is not at offset {k} from total I degree {total_i}")]
    Offset { k: u64, x: u64, i: u64, total_i: u64 },
}

impl NormalFormDoc {
    pub fn from_ordered(o: &Ordered) -> Self {
        let terms = o
            .nf
            .iter()
            .map(|(m, c)| TermDoc {
                k: m.i_power.saturating_sub(o.total_i),
                x: m.x_power,
                i: m.i_power,
                coeff: c.to_string(),
            })
            .collect();
        NormalFormDoc { word: o.word.clone(), total_x: o.total_x, total_i: o.total_i, terms }
    }

    pub fn parse(json: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_ordered(&self) -> Result<Ordered, DocError> {
        let mut nf = NormalForm::zero();
        for t in &self.terms {
            if t.i.checked_sub(self.total_i) != Some(t.k) {
                return Err(DocError::Offset { k: t.k, x: t.x, i: t.i, total_i: self.total_i });
            }
            let c: BigInt = t.coeff.parse().map_err(|_| DocError::Coefficient(t.coeff.clone()))?;
            nf.add_term(intorder_core::Monomial::new(t.x, t.i), c);
        }
        Ok(Ordered { word: self.word.clone(), total_x: self.total_x, total_i: self.total_i, nf })
    }
}

pub fn render_ordered(o: &Ordered, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", nf_text(&o.nf)),
        Format::Latex => format!("{}\n", nf_latex(&o.nf)),
        Format::Json => {
            let doc = NormalFormDoc::from_ordered(o);
            format!("{}\n", serde_json::to_string(&doc).expect("document serializes"))
        }
        Format::Csv => {
            let mut out = String::from("k,x,I,coeff\n");
            for t in NormalFormDoc::from_ordered(o).terms {
                writeln!(out, "{},{},{},{}", t.k, t.x, t.i, t.coeff).unwrap();
            }
            out
        }
    }
}

fn power_text(symbol: &str, e: u64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(symbol.to_string()),
        _ => Some(format!("{symbol}^{e}")),
    }
}

/// `x^2 I^2 - x I^3`; the zero operator prints as `0`.
pub fn nf_text(nf: &NormalForm) -> String {
    signed_sum(nf, |m| {
        let parts: Vec<String> = [power_text("x", m.x_power), power_text("I", m.i_power)]
            .into_iter()
            .flatten()
            .collect();
        parts.join(" ")
    }, " ")
}

/// `x^{2}\mathrm{I}^{2} - x\mathrm{I}^{3}`.
pub fn nf_latex(nf: &NormalForm) -> String {
    signed_sum(nf, |m| {
        let mut s = String::new();
        match m.x_power {
            0 => {}
            1 => s.push('x'),
            e => write!(s, "x^{{{e}}}").unwrap(),
        }
        match m.i_power {
            0 => {}
            1 => s.push_str("\\mathrm{I}"),
            e => write!(s, "\\mathrm{{I}}^{{{e}}}").unwrap(),
        }
        s
    }, "")
}

fn signed_sum(
    nf: &NormalForm,
    monomial: impl Fn(&intorder_core::Monomial) -> String,
    coeff_sep: &str,
) -> String {
    if nf.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in nf.iter().enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let magnitude = c.abs();
        let body = monomial(m);
        if body.is_empty() {
            write!(out, "{magnitude}").unwrap();
        } else if magnitude.is_one() {
            out.push_str(&body);
        } else {
            write!(out, "{magnitude}{coeff_sep}{body}").unwrap();
        }
    }
    out
}

/// Which triangle a set of rows came from, for the JSON header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Bessel,
    Generalized { lambda: u64, delta: u64 },
}

#[derive(Debug, Serialize)]
struct TriangleDoc<'a> {
    triangle: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<u64>,
    /// Index of the first row: 0 for Bessel rows, 1 for generalized rows.
    first_row: u64,
    rows: &'a [Vec<String>],
}

pub fn render_triangle(kind: TriangleKind, rows: &[Vec<BigUint>], format: Format) -> String {
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let join_rows = |sep: &str| -> String {
        cells.iter().map(|r| format!("{}\n", r.join(sep))).collect()
    };
    match format {
        Format::Text => join_rows(" "),
        Format::Csv => join_rows(","),
        Format::Latex => {
            let width = cells.iter().map(Vec::len).max().unwrap_or(1);
            let body: Vec<String> = cells.iter().map(|r| r.join(" & ")).collect();
            format!(
                "\\begin{{array}}{{{}}}\n{}\n\\end{{array}}\n",
                "r".repeat(width),
                body.join(" \\\\\n")
            )
        }
        Format::Json => {
            let (triangle, lambda, delta, first_row) = match kind {
                TriangleKind::Bessel => ("bessel", None, None, 0),
                TriangleKind::Generalized { lambda, delta } => {
                    ("generalized", Some(lambda), Some(delta), 1)
                }
            };
            let doc = TriangleDoc { triangle, lambda, delta, first_row, rows: &cells };
            format!("{}\n", serde_json::to_string(&doc).expect("document serializes"))
        }
    }
}

fn rational_text(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `1/3 x^4`, or `0` for the zero polynomial.
pub fn polynomial_text(p: &RationalPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (d, c)) in p.iter().enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let magnitude = rational_text(&c.abs());
        match power_text("x", *d) {
            None => out.push_str(&magnitude),
            Some(x) => write!(out, "{magnitude} {x}").unwrap(),
        }
    }
    out
}

pub fn render_report(word: &Word, nf: &NormalForm, report: &EquivalenceReport) -> String {
    let mut out = String::new();
    writeln!(out, "word: {word}").unwrap();
    writeln!(out, "normal form: {}", nf_text(nf)).unwrap();
    writeln!(out, "samples: {}", report.samples.len()).unwrap();
    for s in &report.samples {
        writeln!(
            out,
            "m={}: word {} | normal form {} | {}",
            s.m,
            polynomial_text(&s.lhs),
            polynomial_text(&s.rhs),
            if s.matches() { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    match report.first_mismatch() {
        None => out.push_str("result: equivalent\n"),
        Some(s) => writeln!(out, "result: NOT equivalent (first mismatch at m={})", s.m).unwrap(),
    }
    out
}
