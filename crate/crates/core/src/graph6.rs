//! graph6 encoding and decoding for graphs on at most 62 vertices.
//!
//! First byte is `n + 63`; the upper-triangle adjacency bits in column order
//! x(0,1), x(0,2), x(1,2), x(0,3), ... are packed big-endian into 6-bit
//! groups (zero-padded) and each group is emitted as `group + 63`, giving
//! printable bytes in 63..=126.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest n encodable with the single-byte header.
pub const MAX_GRAPH6_VERTICES: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n == 0 || n > MAX_GRAPH6_VERTICES {
        return Err(Error::Graph6(format!(
            "graph6 supports 1..={} vertices, got {}",
            MAX_GRAPH6_VERTICES, n
        )));
    }
    let mut out = vec![(n as u8) + 63];
    let mut group: u8 = 0;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("bytes 63..=126 are ASCII"))
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if bytes[0] < 63 || bytes[0] > 63 + MAX_GRAPH6_VERTICES as u8 {
        return Err(Error::Graph6(format!(
            "unsupported header byte {}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("zero-vertex graph".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {} bytes for n={}, got {}",
            expected,
            n,
            bytes.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("invalid byte {}", byte)));
            }
            let bit = (byte - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    // trailing padding bits must be zero
    if !nbits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_known_encoding() {
        // 5 vertices, edges 02 04 13 34 encodes to "DQc"
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn roundtrips_exactly() {
        for (n, edges) in [
            (1, vec![]),
            (2, vec![(0, 1)]),
            (6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
            (7, vec![(0, 1), (2, 5), (3, 6), (1, 4)]),
        ] {
            let g = Graph::from_edge_list(n, &edges).unwrap();
            assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(decode("").is_err());
        assert!(decode("D").is_err()); // truncated
        assert!(decode("DQcX").is_err()); // too long
        assert!(decode("\u{7f}").is_err()); // header above range
    }
}
