use super::WeightedGraph;
use crate::{Error, Result};

const MAX_ORDER: usize = 1 << 16;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 line into a unit-weight graph.
///
/// A leading `>>graph6<<` header and surrounding whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<WeightedGraph> {
    let trimmed = text.trim();
    let (base, body) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(base + pos, format!("byte {:#04x} outside the range 63..=126", body[pos])));
    }
    if body.is_empty() {
        return Err(err(base, "empty input"));
    }

    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        return Err(err(base + 1, "orders above 258047 are not supported"));
    } else {
        if body.len() < 4 {
            return Err(err(base + body.len(), "truncated order header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(err(base, format!("order {n} exceeds {MAX_ORDER}")));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if body.len() < expected {
        return Err(err(base + body.len(), format!("truncated bit field: expected {expected} bytes")));
    }
    if body.len() > expected {
        return Err(err(base + expected, "trailing bytes after the bit field"));
    }

    let data = &body[header_len..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..data.len() * 6).any(bit) {
        return Err(err(base + expected - 1, "nonzero padding bits"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    WeightedGraph::unweighted(n, &edges)
}

/// Encodes the structure of `g` as graph6 (weights dropped).
pub fn to_graph6(g: &WeightedGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
