//! graph6 encoding (the header-less line format written by nauty's `geng`).
//!
//! Order byte `n + 63`, then the upper triangle read column by column,
//! x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into 6-bit groups,
//! each offset by 63 and zero-padded on the right.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub(super) fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Parses one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; byte offsets in errors refer to the
/// trimmed text after the header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };

    let first = *body.first().ok_or_else(|| err(0, "empty input"))?;
    if first == b'~' {
        return Err(err(0, &format!("order above {MAX_VERTICES} is not supported")));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, "order byte out of range"));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(err(0, &format!("order {n} exceeds {MAX_VERTICES}")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];
    if data.len() != nbytes {
        let offset = 1 + data.len().min(nbytes);
        return Err(err(
            offset,
            &format!("expected {nbytes} data bytes for order {n}, found {}", data.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0;
    'outer: for (pos, &c) in data.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(err(1 + pos, "character outside the graph6 range 63..=126"));
        }
        let v = c - 63;
        for shift in (0..6).rev() {
            let set = v >> shift & 1 == 1;
            if bit == nbits {
                if set {
                    return Err(err(1 + pos, "nonzero padding bit"));
                }
                continue;
            }
            if set {
                let (i, j) = unpair(bit);
                g.add_edge(i, j)?;
            }
            bit += 1;
            if bit == nbits && shift == 0 {
                break 'outer;
            }
        }
    }
    Ok(g)
}

fn unpair(bit: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= bit {
        j += 1;
    }
    (bit - j * (j - 1) / 2, j)
}
