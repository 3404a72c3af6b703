//! Basis file formats.
//!
//! Text: first line `n`, then `n` lines of `n` integers; line `i + 1` holds
//! the coordinates of `b_i`. JSON: `{"n": n, "basis": [[...], ...]}` with the
//! same row convention. Blank lines and `#` comments are ignored in text.

use serde::{Deserialize, Serialize};

use super::Basis;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct BasisJson {
    n: usize,
    basis: Vec<Vec<i64>>,
}

pub fn parse_basis(input: &str) -> Result<Basis> {
    if input.trim_start().starts_with('{') {
        parse_basis_json(input)
    } else {
        parse_basis_text(input)
    }
}

pub fn parse_basis_text(input: &str) -> Result<Basis> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected dimension, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::Parse { line, msg: "dimension must be positive".into() });
    }
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: line + k + 1,
            msg: format!("expected {n} basis rows, found {k}"),
        })?;
        let row: Vec<i64> = text
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("not an integer: {tok:?}"),
                })
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: "trailing data after basis".into() });
    }
    Basis::new(rows)
}

pub fn parse_basis_json(input: &str) -> Result<Basis> {
    let parsed: BasisJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    if parsed.basis.len() != parsed.n {
        return Err(Error::Parse {
            line: 1,
            msg: format!("n = {} but {} rows given", parsed.n, parsed.basis.len()),
        });
    }
    Basis::new(parsed.basis)
}

pub fn to_text(b: &Basis) -> String {
    let mut out = format!("{}\n", b.n());
    for v in b.vectors() {
        let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_json(b: &Basis) -> String {
    serde_json::to_string(&BasisJson { n: b.n(), basis: b.vectors().to_vec() }).expect("serializable")
}
