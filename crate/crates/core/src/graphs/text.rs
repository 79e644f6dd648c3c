//! Edge-list text: a header line holding `n`, then one `i j` pair per line
//! (1-based labels). Blank lines are ignored.

use super::{Graph, GraphError};
use crate::vertex_set::MAX_VERTICES;

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = lines_with_offsets(text).filter(|(_, l)| !l.trim().is_empty());
    let (hoff, header) = lines
        .next()
        .ok_or_else(|| GraphError::parse(0, "missing vertex-count header"))?;
    let n = parse_label(header.trim(), hoff + leading_ws(header))?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for (off, line) in lines {
        let mut fields = Vec::new();
        let mut pos = 0;
        for tok in line.split_whitespace() {
            let at = pos + line[pos..].find(tok).expect("token comes from this line");
            fields.push((off + at, tok));
            pos = at + tok.len();
        }
        if fields.len() != 2 {
            return Err(GraphError::parse(
                off + leading_ws(line),
                format!("expected two vertex labels, found {}", fields.len()),
            ));
        }
        let mut ends = [0usize; 2];
        for (slot, &(at, tok)) in ends.iter_mut().zip(&fields) {
            let v = parse_label(tok, at)?;
            if v == 0 || v > n {
                return Err(GraphError::parse(at, format!("vertex {v} outside 1..={n}")));
            }
            *slot = v - 1;
        }
        edges.push((ends[0], ends[1]));
    }
    Graph::from_edges(n, &edges)
}

/// Inverse of [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (i, j) in g.edges() {
        s.push_str(&format!("{} {}\n", i + 1, j + 1));
    }
    s
}

fn lines_with_offsets(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').map(move |raw| {
        let start = offset;
        offset += raw.len();
        (start, raw.trim_end_matches(['\n', '\r']))
    })
}

fn leading_ws(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn parse_label(tok: &str, offset: usize) -> Result<usize, GraphError> {
    tok.parse::<usize>()
        .map_err(|_| GraphError::parse(offset, format!("not a nonnegative integer: {tok:?}")))
}
