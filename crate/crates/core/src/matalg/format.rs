//! Text format for algebras with named partitions and elements.
//!
//! ```text
//! summands: [3, 1]
//! partition diag
//!   atom [1, 0, 0; 0, 0, 0; 0, 0, 0] [0]
//!   atom [0, 0, 0; 0, 1, 0; 0, 0, 1] [1]
//! end
//! element a [2, 0, 0; 0, 3, 0; 0, 0, 3] [1/2+1 i]
//! ```
//!
//! An element is written as one bracketed matrix per summand.

use std::fmt::Write as _;

use super::algebra::{AlgElement, FinDimAlgebra, Matrix};
use super::partition::PartitionOfUnity;
use super::scalar::GaussScalar;
use super::{MatalgError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: FinDimAlgebra,
    pub partitions: Vec<(String, PartitionOfUnity)>,
    pub elements: Vec<(String, AlgElement)>,
}

fn perr(line: usize, msg: impl Into<String>) -> MatalgError {
    MatalgError::Parse { line, msg: msg.into() }
}

/// Parses `[a, b; c, d]`.
pub fn parse_matrix(text: &str) -> std::result::Result<Matrix, String> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("expected a bracketed matrix, found `{text}`"))?;
    let rows: Vec<Vec<GaussScalar>> = inner
        .split(';')
        .map(|r| r.split(',').map(|e| e.parse::<GaussScalar>().map_err(|e| e.to_string())).collect())
        .collect::<std::result::Result<_, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(format!("matrix `{text}` is not square"));
    }
    Ok(Matrix::from_rows(rows))
}

fn bracket_groups(text: &str) -> std::result::Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('[') {
            return Err(format!("unexpected text `{rest}`"));
        }
        let end = rest.find(']').ok_or("unterminated matrix")?;
        out.push(&rest[..=end]);
        rest = rest[end + 1..].trim_start();
    }
    Ok(out)
}

/// Parses the blocks of one element of `algebra` from bracketed matrices.
pub fn parse_element(algebra: &FinDimAlgebra, text: &str) -> std::result::Result<AlgElement, String> {
    let blocks = bracket_groups(text)?.into_iter().map(parse_matrix).collect::<std::result::Result<Vec<_>, _>>()?;
    algebra.element(blocks).map_err(|_| format!("block shapes do not match summands {:?}", algebra.summand_dims()))
}

fn parse_dims(text: &str) -> Option<Vec<usize>> {
    let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?;
    inner.split(',').map(|d| d.trim().parse().ok()).collect()
}

/// Reads an algebra file. `#` starts a comment.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let mut algebra: Option<FinDimAlgebra> = None;
    let mut partitions = Vec::new();
    let mut elements = Vec::new();
    let mut open: Option<(usize, String, Vec<AlgElement>)> = None;
    for (no, raw) in text.lines().enumerate() {
        let no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("summands:") {
            if algebra.is_some() {
                return Err(perr(no, "duplicate `summands:` line"));
            }
            let dims = parse_dims(rest).ok_or_else(|| perr(no, "expected `summands: [n1, n2, ...]`"))?;
            algebra = Some(FinDimAlgebra::new(dims).map_err(|e| perr(no, e.to_string()))?);
            continue;
        }
        let alg = algebra.as_ref().ok_or_else(|| perr(no, "`summands:` must come first"))?;
        let (word, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match (word, open.as_mut()) {
            ("atom", Some((_, _, atoms))) => atoms.push(parse_element(alg, rest).map_err(|m| perr(no, m))?),
            ("end", Some(_)) => {
                let (start, name, atoms) = open.take().unwrap();
                let p = PartitionOfUnity::new(alg, atoms).map_err(|e| perr(start, format!("partition {name}: {e}")))?;
                partitions.push((name, p));
            }
            ("partition", None) => {
                let name = rest.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(perr(no, "expected `partition NAME`"));
                }
                open = Some((no, name.to_string(), Vec::new()));
            }
            ("element", None) => {
                let (name, m) = rest
                    .trim()
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| perr(no, "expected `element NAME [..]`"))?;
                elements.push((name.to_string(), parse_element(alg, m).map_err(|msg| perr(no, msg))?));
            }
            _ => return Err(perr(no, format!("unexpected `{word}`"))),
        }
    }
    if let Some((start, name, _)) = open {
        return Err(perr(start, format!("partition {name} is missing `end`")));
    }
    let algebra = algebra.ok_or_else(|| perr(0, "missing `summands:` line"))?;
    Ok(AlgebraFile { algebra, partitions, elements })
}

impl AlgebraFile {
    pub fn new(algebra: FinDimAlgebra) -> Self {
        AlgebraFile { algebra, partitions: Vec::new(), elements: Vec::new() }
    }

    pub fn partition(&self, name: &str) -> Option<&PartitionOfUnity> {
        self.partitions.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn to_text(&self) -> String {
        let dims: Vec<String> = self.algebra.summand_dims().iter().map(ToString::to_string).collect();
        let mut out = format!("summands: [{}]\n", dims.join(", "));
        for (name, p) in &self.partitions {
            let _ = writeln!(out, "partition {name}");
            for a in p.atoms() {
                let _ = writeln!(out, "  atom {a}");
            }
            out.push_str("end\n");
        }
        for (name, x) in &self.elements {
            let _ = writeln!(out, "element {name} {x}");
        }
        out
    }
}
