//! Standard graph6 text encoding: a size byte `n + 63`, then the
//! upper-triangle adjacency bits in column order packed six per byte with
//! the same offset. Round-trips are bit-exact, not merely up to
//! isomorphism.

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order the single-byte size header covers.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::OrderCap {
            requested: n,
            cap: GRAPH6_MAX_ORDER,
        });
    }
    let mut bytes = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for q in 1..n {
        for p in 0..q {
            acc <<= 1;
            if g.has_edge(p, q) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        bytes.push(acc + 63);
    }
    Ok(String::from_utf8(bytes).expect("printable range"))
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let malformed = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(malformed(0, "empty input"));
    }
    if bytes[0] == 126 {
        return Err(malformed(0, "multi-byte size headers are out of scope"));
    }
    if !(63..126).contains(&bytes[0]) {
        return Err(malformed(0, "size byte out of printable range"));
    }
    let n = (bytes[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = 1 + bits.div_ceil(6);
    if bytes.len() != want {
        return Err(malformed(
            bytes.len().min(want) - 1,
            &format!("expected {want} bytes for order {n}, got {}", bytes.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..127).contains(&b) {
            return Err(malformed(i, "data byte out of printable range"));
        }
        let payload = b - 63;
        for k in 0..6 {
            if idx == bits {
                if payload & (0x3f >> k) != 0 {
                    return Err(malformed(i, "nonzero padding bits"));
                }
                break;
            }
            if payload >> (5 - k) & 1 == 1 {
                let (p, q) = pair_of(idx);
                g.add_edge(p, q);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-order bit layout: bit `i` encodes the pair
/// `(p, q)` with `i = q(q-1)/2 + p`.
fn pair_of(i: usize) -> (usize, usize) {
    let mut q = 1;
    let mut base = 0;
    while base + q <= i {
        base += q;
        q += 1;
    }
    (i - base, q)
}
