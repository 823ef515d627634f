//! graph6 encoding (single graph per line, no `>>graph6<<` header).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n / 12) + 1);
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is printable ascii")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(bad("8-byte order header not supported"));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated order header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(Error::Capacity { order: n, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        let last = body[body.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}
