//! graph6 and plain edge-list text formats.
//!
//! graph6 layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups and offset by 63.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const GRAPH6_HEADER: &str = ">>graph6<<";
/// Largest order expressible with the 4-byte size header.
const MAX_GRAPH6_ORDER: usize = 258_047;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sixbit(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(g6_err(offset, "unexpected end of input")),
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(g6_err(offset, format!("byte 0x{b:02x} outside 63..=126"))),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest.as_bytes(), GRAPH6_HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    if bytes[0] == b':' || bytes[0] == b'&' {
        return Err(g6_err(base, "sparse6/digraph6 input is not supported"));
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(g6_err(base + 1, "8-byte size header exceeds supported order"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sixbit(bytes, i).map_err(|e| rebase(e, base))? as usize;
        }
        (n, 4)
    } else {
        (sixbit(bytes, 0).map_err(|e| rebase(e, base))? as usize, 1)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(g6_err(
            base + bytes.len(),
            format!("truncated: {n} vertices need {nbytes} data bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() > pos + nbytes {
        return Err(g6_err(base + pos + nbytes, "trailing bytes after adjacency data"));
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut k = 0usize;
    while k < nbits {
        let chunk = sixbit(bytes, pos).map_err(|e| rebase(e, base))?;
        for bit in (0..6).rev() {
            if k == nbits {
                if chunk & ((1 << (bit + 1)) - 1) != 0 {
                    return Err(g6_err(base + pos, "nonzero padding bits"));
                }
                break;
            }
            if chunk >> bit & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Graph::from_edges(n, edges)
}

fn rebase(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge(format!(
            "graph6 supports at most {MAX_GRAPH6_ORDER} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Parses the edge-list format: a header line `n m`, then one `u v` pair per
/// line. `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::EdgeList {
                line: line_no,
                reason: format!("expected two integers, found {}", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList {
                line: line_no,
                reason: format!("`{s}` is not a non-negative integer"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }
    let (n, m) = header.ok_or(Error::EdgeList {
        line: 0,
        reason: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: 0,
            reason: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u, e.v);
    }
    s
}
