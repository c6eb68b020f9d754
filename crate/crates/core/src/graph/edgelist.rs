//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v        (m lines, 0-based ids, ascending lexicographic order)
//! ```

use std::io::{self, BufRead, Write};

use super::MolecularGraph;
use crate::error::{Error, Result};

/// Writes the canonical edge list with LF line endings.
pub fn write_edge_list<W: Write>(g: &MolecularGraph, mut out: W) -> io::Result<()> {
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<MolecularGraph> {
    read_edge_list(text.as_bytes())
}

/// Reads an edge list. Lines starting with `#` and blank lines are skipped.
/// Edges may appear in any order; the returned graph is canonical.
pub fn read_edge_list<R: BufRead>(input: R) -> Result<MolecularGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let pair = parse_pair(trimmed, lineno)?;
        match header {
            None => header = Some(pair),
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("more than the declared {m} edges"),
                    });
                }
                edges.push(pair);
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    MolecularGraph::new(n, edges)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line: lineno,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            message: "trailing fields".into(),
        });
    }
    Ok((a, b))
}
