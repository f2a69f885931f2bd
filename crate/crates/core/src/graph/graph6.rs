//! graph6 codec for graphs with at most 62 vertices.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte (most significant first), zero padded, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// Optional header accepted on input; never emitted.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    let Some(&size_byte) = body.first() else {
        return Err(parse_err(start, "empty input"));
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(start + i, format!("byte {b} outside 63..=126")));
        }
    }
    if size_byte == 126 {
        return Err(Error::UnsupportedSize {
            what: "graph6 order",
            size: MAX_ORDER + 1,
            max: MAX_ORDER,
        });
    }
    let n = (size_byte - 63) as usize;
    if n == 0 {
        return Err(parse_err(start, "zero-vertex graphs are not supported"));
    }
    let bits = n * (n - 1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            start + body.len().min(expected),
            format!("expected {expected} bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "graph6 order",
            size: n,
            max: MAX_ORDER,
        });
    }
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
