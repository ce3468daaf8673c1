//! graph6 encoding: order N(n) followed by the upper triangle packed six bits
//! per byte, column by column (`(0,1),(0,2),(1,2),(0,3),...`), each byte
//! biased by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
/// Largest order emitted with the single-byte size prefix.
pub const MAX_EMIT_ORDER: usize = 62;

/// Parses one graph6 record. Leading `>>graph6<<` headers and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let err = |off: usize, reason: String| Error::Parse { offset: base + off, reason };

    if body.is_empty() {
        return Err(err(0, "empty record".into()));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte {b:#04x} outside the graph6 range 63..=126")));
        }
    }
    let (n, mut pos) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() > 1 && body[1] != 126 {
        if body.len() < 4 {
            return Err(err(body.len(), "truncated 18-bit order".into()));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if body.len() < 8 {
            return Err(err(body.len(), "truncated 36-bit order".into()));
        }
        let n = body[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    if n > MAX_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_ORDER });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[pos..];
    if data.len() < need {
        return Err(err(body.len(), format!("expected {need} adjacency bytes, found {}", data.len())));
    }
    if data.len() > need {
        return Err(err(pos + need, "trailing bytes after adjacency data".into()));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    Ok(g)
}

/// Encodes `g` in graph6. Orders above 62 are rejected.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_EMIT_ORDER {
        return Err(Error::UnsupportedSize { order: n, limit: MAX_EMIT_ORDER });
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push((acc + 63) as char);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        acc <<= 6 - k % 6;
        out.push((acc + 63) as char);
    }
    Ok(out)
}
