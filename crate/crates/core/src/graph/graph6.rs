//! graph6 text encoding.

use super::Graph;
use crate::error::{Error, Result};

fn encode_n(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: usize| out.push((63 + (v & 63) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    encode_n(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((63 + chunk) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (chunk << (6 - filled))) as char);
    }
    out
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let mut values = Vec::with_capacity(bytes.len());
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b:#x} outside the printable range")));
        }
        values.push((b - 63) as usize);
    }
    let (n, body) = match values.as_slice() {
        [] => return Err(Error::Graph6("empty input".into())),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            (rest[..6].iter().fold(0, |acc, &v| acc << 6 | v), &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size header".into()));
            }
            (rest[..3].iter().fold(0, |acc, &v| acc << 6 | v), &rest[3..])
        }
        [n, rest @ ..] => (*n, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
