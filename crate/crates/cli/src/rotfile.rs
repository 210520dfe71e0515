//! Plain-text rotation systems.
//!
//! ```text
//! rot 1 4
//! # comment
//! 0: 1 3
//! 1: 2 0
//! ```
//!
//! One line per vertex `0..count`, listing its neighbours clockwise. Output
//! is canonical: ascending vertices, each rotation started at its smallest
//! neighbour.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use genusforge::{CombinatorialMap, MapError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationFile {
    pub rotations: Vec<Vec<usize>>,
    /// Line on which each vertex was defined (1-based).
    lines: Vec<usize>,
    header_line: usize,
}

impl RotationFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows: BTreeMap<usize, (usize, Vec<usize>)> = BTreeMap::new();
        let mut last = 0;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            last = lineno;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((_, count)) = header else {
                let parts: Vec<&str> = content.split_whitespace().collect();
                match parts.as_slice() {
                    ["rot", "1", count] => {
                        let count = count.parse().map_err(|_| err(lineno, format!("bad vertex count `{count}`")))?;
                        header = Some((lineno, count));
                    }
                    ["rot", version, _] => return Err(err(lineno, format!("unsupported format version `{version}`"))),
                    _ => return Err(err(lineno, "expected header `rot 1 <vertexCount>`")),
                }
                continue;
            };
            let (v, rest) = content.split_once(':').ok_or_else(|| err(lineno, "expected `v: n1 n2 …`"))?;
            let v: usize = v.trim().parse().map_err(|_| err(lineno, format!("bad vertex `{}`", v.trim())))?;
            if v >= count {
                return Err(err(lineno, format!("vertex {v} out of range 0..{count}")));
            }
            let mut nb = Vec::new();
            for tok in rest.split_whitespace() {
                let w: usize = tok.parse().map_err(|_| err(lineno, format!("bad neighbour `{tok}`")))?;
                if w >= count {
                    return Err(err(lineno, format!("neighbour {w} out of range 0..{count}")));
                }
                nb.push(w);
            }
            if rows.insert(v, (lineno, nb)).is_some() {
                return Err(err(lineno, format!("vertex {v} listed twice")));
            }
        }
        let (header_line, count) = header.ok_or_else(|| err(last.max(1), "missing header `rot 1 <vertexCount>`"))?;
        if let Some(missing) = (0..count).find(|v| !rows.contains_key(v)) {
            return Err(err(header_line, format!("vertex {missing} has no rotation line")));
        }
        let (lines, rotations) = rows.into_values().unzip();
        Ok(Self { rotations, lines, header_line })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    /// Validates the rotations as a simple connected map.
    pub fn to_map(&self) -> Result<CombinatorialMap, ParseError> {
        CombinatorialMap::from_rotations(&self.rotations).map_err(|e| {
            let at = |v: usize| self.lines.get(v).copied().unwrap_or(self.header_line);
            let line = match e {
                MapError::AsymmetricAdjacency(v, _)
                | MapError::DuplicateNeighbor(v, _)
                | MapError::SelfLoop(v)
                | MapError::UnknownVertex { vertex: v, .. } => at(v),
                _ => self.header_line,
            };
            err(line, e.to_string())
        })
    }
}

/// Canonical text for a map whose vertices are `0..v`.
pub fn serialize(map: &CombinatorialMap) -> String {
    let mut out = format!("rot 1 {}\n", map.vertex_count());
    for v in 0..map.vertex_count() {
        let mut rot: Vec<usize> = map.rotation(v).into_iter().map(|w| map.label(w)).collect();
        if let Some(i) = rot.iter().enumerate().min_by_key(|&(_, &w)| w).map(|(i, _)| i) {
            rot.rotate_left(i);
        }
        let _ = write!(out, "{}:", map.label(v));
        for w in rot {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}
