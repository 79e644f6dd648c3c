//! graph6 for `n <= 62`: one size byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian six bits per byte, zero padded, each byte offset by 63.

use super::{Graph, GraphError};
use crate::vertex_set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

fn column_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in column_pairs(n) {
        acc = (acc << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut base = 0;
    let mut body = text;
    if let Some(rest) = body.strip_prefix(HEADER) {
        base = HEADER.len();
        body = rest;
    }
    let body = body.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(GraphError::parse(base, "empty graph6 string"));
    };
    if !(63..=126).contains(&first) {
        return Err(GraphError::parse(base, format!("invalid size byte 0x{first:02x}")));
    }
    if first == 126 {
        return Err(GraphError::parse(
            base,
            format!("multi-byte vertex counts are not supported (n <= {MAX_VERTICES})"),
        ));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        let offset = base + bytes.len().min(expected);
        return Err(GraphError::parse(
            offset,
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    for (k, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(GraphError::parse(base + k, format!("invalid graph6 byte 0x{b:02x}")));
        }
    }
    let bit = |k: usize| ((bytes[1 + k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    for k in nbits..(expected - 1) * 6 {
        if bit(k) {
            return Err(GraphError::parse(base + 1 + k / 6, "nonzero padding bits"));
        }
    }
    let edges: Vec<_> = column_pairs(n)
        .enumerate()
        .filter(|&(k, _)| bit(k))
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Straight transcription of the format: build the bit string, pad, slice into sixes.
    fn reference_encode(n: usize, has_edge: impl Fn(usize, usize) -> bool) -> String {
        let mut bits = String::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(if has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut s = String::new();
        s.push(char::from(63 + n as u8));
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push(char::from(63 + v));
        }
        s
    }

    #[test]
    fn two_k2_fixture() {
        // 2K2 on [4]: bits x01=1 x02=0 x12=0 x03=0 x13=0 x23=1 -> 100001 = 33 -> '`'
        let expected = reference_encode(4, |i, j| (i, j) == (0, 1) || (i, j) == (2, 3));
        assert_eq!(expected, "C`");
        let g = decode_graph6("C`").unwrap();
        assert_eq!(g, Graph::from_labeled_edges(4, &[(1, 2), (3, 4)]));
        assert_eq!(encode_graph6(&g), "C`");
    }

    #[test]
    fn petgraph_fixture() {
        // A-C, A-E, B-D, D-E on five vertices encodes as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn header_and_newline_are_accepted() {
        let g = decode_graph6(">>graph6<<C`\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode_graph6(""), Err(GraphError::Parse { offset: 0, .. })));
        assert!(matches!(decode_graph6("C"), Err(GraphError::Parse { offset: 1, .. })));
        assert!(matches!(decode_graph6("C``"), Err(GraphError::Parse { .. })));
        assert!(matches!(decode_graph6("C "), Err(GraphError::Parse { offset: 1, .. })));
        // 'a' = 34 = 100010, padding bits for n=4 is zero bits; n=3 has 3 data bits + 3 padding
        assert!(matches!(decode_graph6("Ba"), Err(GraphError::Parse { offset: 1, .. })));
        assert!(matches!(decode_graph6("~??"), Err(GraphError::Parse { offset: 0, .. })));
    }

    proptest! {
        #[test]
        fn matches_reference_and_round_trips(n in 0usize..=11, mask in any::<u64>()) {
            let pairs = n * n.saturating_sub(1) / 2;
            let mask = if pairs >= 64 { mask } else { mask & ((1u64 << pairs) - 1) };
            let g = Graph::from_edge_mask(n, mask);
            let s = encode_graph6(&g);
            prop_assert_eq!(&s, &reference_encode(n, |i, j| g.has_edge(i, j)));
            let back = decode_graph6(&s).unwrap();
            prop_assert_eq!(encode_graph6(&back), s);
            prop_assert_eq!(back, g);
        }
    }

    #[test]
    fn largest_supported_size() {
        let g = Graph::complete(62);
        assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }
}
