//! The graph6 text format.
//!
//! Only the plain form is accepted: no `>>graph6<<` header, no digraph6
//! (`&`) or sparse6 (`:`) prefixes. The upper triangle is read column by
//! column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Decodes one graph6 line. A single trailing newline (`\n` or `\r\n`) is
/// tolerated.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();

    if line.starts_with(">>") {
        return Err(Error::BadGraph6("headers are not accepted".into()));
    }
    match bytes.first() {
        None => return Err(Error::BadGraph6("empty line".into())),
        Some(b'&') => return Err(Error::BadGraph6("digraph6 is not supported".into())),
        Some(b':') => return Err(Error::BadGraph6("sparse6 is not supported".into())),
        _ => {}
    }
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(Error::BadGraph6(format!("byte {pos} is outside the printable range 63..=126")));
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::Unsupported("graph6 orders above 258047".into()));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::BadGraph6("truncated size header".into()));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }

    let nbits = triangle_bits(n);
    let expected_len = nbits.div_ceil(6);
    if body.len() != expected_len {
        return Err(Error::BadGraph6(format!(
            "expected {expected_len} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[expected_len - 1] - BIAS;
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Error::BadGraph6("padding bits beyond the triangle are set".into()));
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 string (no trailing newline). Names are dropped.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + triangle_bits(n).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Hand decoder straight from the format definition, used to derive the
    /// frozen examples below.
    fn hand_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bits = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for k in (0..6).rev() {
                bits.push((v >> k) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn frozen_small_examples() {
        assert_eq!(hand_decode("@"), (1, vec![]));
        assert_eq!(hand_decode("A_"), (2, vec![(0, 1)]));
        assert_eq!(hand_decode("C~").1.len(), 6);

        let k1 = decode_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let k2 = decode_graph6("A_").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let k4 = decode_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));

        assert_eq!(encode_graph6(&k1), "@");
        assert_eq!(encode_graph6(&k2), "A_");
        assert_eq!(encode_graph6(&k4), "C~");
    }

    #[test]
    fn matches_hand_decoder_on_longer_string() {
        // C5 as emitted by the reference tools.
        let g = decode_graph6("Dhc").unwrap();
        let (n, mut edges) = hand_decode("Dhc");
        edges.sort();
        assert_eq!(g.n(), n);
        assert_eq!(g.edges(), edges);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn empty_graph_round_trips() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(encode_graph6(&g), "?");
        assert_eq!(decode_graph6("?").unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", ">>graph6<<C~", "&C~", ":Fa@x^", "C~~", "C", "A`", "C\u{7f}"] {
            assert!(
                matches!(decode_graph6(bad), Err(Error::BadGraph6(_))),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn trailing_newline_is_tolerated() {
        assert_eq!(decode_graph6("C~\n").unwrap().m(), 6);
        assert_eq!(decode_graph6("C~\r\n").unwrap().m(), 6);
    }

    #[test]
    fn long_header_for_orders_63_and_64() {
        for n in [63, 64] {
            let mut g = Graph::empty(n).unwrap();
            g.add_edge_unchecked(0, n - 1);
            g.add_edge_unchecked(5, 17);
            let s = encode_graph6(&g);
            assert!(s.starts_with('~'));
            assert_eq!(decode_graph6(&s).unwrap(), g);
        }
        assert!(matches!(decode_graph6("~?@@"), Err(Error::TooManyVertices { .. })));
    }
}
