//! Plain-text matrix dumps: one row per line, entries `p/q` (or `p`)
//! separated by single spaces.

use std::fmt::Write as _;

use super::module::ExplicitModule;
use super::parabolic::Filtration;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

pub fn format_matrix(rows: &[Vec<Rational>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Rational>().map_err(|e| Error::MatrixParse {
                    line: n + 1,
                    reason: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            let first: &Vec<Rational> = first;
            if first.len() != row.len() {
                return Err(Error::MatrixParse {
                    line: n + 1,
                    reason: format!("expected {} entries, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// Each generator's action as a titled block.
pub fn dump_module(module: &ExplicitModule) -> String {
    let mut out = String::new();
    for (g, m) in module.action() {
        let _ = writeln!(out, "# {g}");
        out.push_str(&format_matrix(m.to_dense().rows()));
    }
    out
}

/// Each step's basis as a titled block, one basis vector per line.
pub fn dump_filtration(filtration: &Filtration) -> String {
    let mut out = String::new();
    for (k, step) in filtration.steps().iter().enumerate() {
        let _ = writeln!(out, "# step {k} dim {}", step.dim());
        out.push_str(&format_matrix(step.basis()));
    }
    out
}
