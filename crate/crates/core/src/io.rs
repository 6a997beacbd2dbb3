//! Input documents and output renderers.
//!
//! Inputs are JSON objects holding exactly one of `"rays"` (a fan) or
//! `"vertices"` (a lattice polygon), each a list of `[int, int]` pairs, plus an
//! optional `"name"`. A plain-text mode reads whitespace-separated integer
//! pairs as a ray list; `#` starts a comment.

use std::io::Read;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chow::LinearForm;
use crate::error::Result;
use crate::fan::Fan;
use crate::matrix::{Rational, RationalMatrix};
use crate::polygon::{normal_fan, Polygon};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDocument {
    pub rays: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonDocument {
    pub vertices: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    Fan(FanDocument),
    Polygon(PolygonDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("document has both \"rays\" and \"vertices\"")]
    AmbiguousDocument,
    #[error("document has neither \"rays\" nor \"vertices\"")]
    MissingData,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    rays: Option<Vec<[i64; 2]>>,
    vertices: Option<Vec<[i64; 2]>>,
    name: Option<String>,
}

impl FanDocument {
    pub fn from_fan(fan: &Fan) -> Self {
        FanDocument { rays: fan.rays().iter().map(|&r| r.into()).collect(), name: None }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("fan documents always serialize")
    }

    pub fn to_fan(&self) -> Result<Fan> {
        Fan::new(self.rays.iter().copied())
    }
}

impl PolygonDocument {
    pub fn to_polygon(&self) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().copied())
    }
}

impl InputDocument {
    /// The fan described by the document; polygons give their normal fan.
    pub fn to_fan(&self) -> Result<Fan> {
        match self {
            InputDocument::Fan(doc) => doc.to_fan(),
            InputDocument::Polygon(doc) => normal_fan(&doc.to_polygon()?),
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            InputDocument::Fan(d) => d.name.as_deref(),
            InputDocument::Polygon(d) => d.name.as_deref(),
        }
    }
}

/// Parses a JSON input document. Integers must be exact; floats are rejected.
pub fn parse_document(text: &str) -> std::result::Result<InputDocument, InputError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    match (raw.rays, raw.vertices) {
        (Some(_), Some(_)) => Err(InputError::AmbiguousDocument),
        (Some(rays), None) => Ok(InputDocument::Fan(FanDocument { rays, name: raw.name })),
        (None, Some(vertices)) => Ok(InputDocument::Polygon(PolygonDocument { vertices, name: raw.name })),
        (None, None) => Err(InputError::MissingData),
    }
}

/// Parses whitespace-separated integer pairs as a ray list.
pub fn parse_plain(text: &str) -> std::result::Result<FanDocument, InputError> {
    let mut numbers = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("");
        let mut offset = 0;
        for token in content.split_whitespace() {
            let column = content[offset..].find(token).map_or(offset, |p| p + offset) + 1;
            offset = column - 1 + token.len();
            let value = token.parse::<i64>().map_err(|e| InputError::Parse {
                line: line_no + 1,
                column,
                message: format!("expected an integer, found {token:?} ({e})"),
            })?;
            numbers.push((value, line_no + 1, column));
        }
    }
    if numbers.len() % 2 == 1 {
        let (_, line, column) = numbers[numbers.len() - 1];
        return Err(InputError::Parse { line, column, message: "odd number of coordinates".into() });
    }
    let rays = numbers.chunks(2).map(|c| [c[0].0, c[1].0]).collect();
    Ok(FanDocument { rays, name: None })
}

/// Reads a document from `path`, where `-` means `stdin`.
pub fn read_input(path: &str, plain: bool, stdin: &mut dyn Read) -> std::result::Result<InputDocument, InputError> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| InputError::Io { path: "<stdin>".into(), message: e.to_string() })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError::Io { path: path.into(), message: e.to_string() })?
    };
    if plain {
        parse_plain(&text).map(InputDocument::Fan)
    } else {
        parse_document(&text)
    }
}

/// `p/q`, or `p` for integers.
pub fn rational_string(x: &Rational) -> String {
    x.to_string()
}

pub fn rational_latex(x: &Rational) -> String {
    if x.is_integer() {
        return x.numer().to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", x.numer().abs(), x.denom())
}

pub fn matrix_json(m: &RationalMatrix) -> serde_json::Value {
    (0..m.rows()).map(|i| m.row(i).iter().map(rational_string).collect::<Vec<_>>()).collect::<Vec<_>>().into()
}

/// Right-aligned columns separated by two spaces.
pub fn matrix_table(m: &RationalMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(rational_string).collect()).collect();
    let widths: Vec<usize> = (0..m.cols()).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

pub fn matrix_latex(m: &RationalMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    let rows: Vec<String> =
        (0..m.rows()).map(|i| m.row(i).iter().map(rational_latex).collect::<Vec<_>>().join(" & ")).collect();
    out.push_str(&rows.join(" \\\\\n"));
    out.push_str("\n\\end{pmatrix}\n");
    out
}

/// Human-readable form such as `2x1 + 2x2 - x3`, or `0`.
pub fn linear_form_string(form: &LinearForm) -> String {
    let mut out = String::new();
    for (k, c) in form.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        let sep = match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let coeff = if magnitude.is_one() {
            String::new()
        } else if magnitude.is_integer() {
            magnitude.to_string()
        } else {
            format!("({magnitude})")
        };
        out.push_str(&format!("{sep}{coeff}x{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
