use crate::vertex_set::VertexSet;

/// Inclusion-minimal members of `sets`, deduplicated, sorted by size then lexicographically.
pub fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// Minimal transversals (hitting sets) of a hypergraph, by Berge's incremental
/// product: after absorbing edge `e`, every transversal either already meets `e`
/// or is extended by one vertex of `e`, and the result is re-minimalized.
///
/// The empty hypergraph has the single transversal `∅`; a hypergraph containing
/// the empty edge has none.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut edges = edges.to_vec();
    // Small edges first keeps the intermediate families small.
    edges.sort_by_key(|e| (e.len(), *e));
    edges.dedup();
    let mut current = vec![VertexSet::EMPTY];
    for e in edges {
        let (hit, miss): (Vec<_>, Vec<_>) = current.into_iter().partition(|t| t.meets(e));
        let mut next = hit.clone();
        for t in miss {
            for v in e.iter() {
                let ext = t.insert(v);
                // an extension containing a surviving transversal is not minimal
                if !hit.iter().any(|h| h.is_subset(ext)) {
                    next.push(ext);
                }
            }
        }
        current = minimalize(next);
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(n: usize, edges: &[VertexSet]) -> Vec<VertexSet> {
        let hits: Vec<_> = VertexSet::full(n)
            .subsets()
            .filter(|t| edges.iter().all(|e| e.meets(*t)))
            .collect();
        minimalize(hits)
    }

    #[test]
    fn degenerate_hypergraphs() {
        assert_eq!(minimal_transversals(&[]), vec![VertexSet::EMPTY]);
        assert!(minimal_transversals(&[VertexSet::EMPTY]).is_empty());
    }

    #[test]
    fn minimalize_drops_supersets() {
        let s = |l: &[usize]| VertexSet::from_labels(l.iter().copied());
        let out = minimalize(vec![s(&[1, 2, 3]), s(&[2]), s(&[1, 3]), s(&[2, 4]), s(&[1, 3])]);
        assert_eq!(out, vec![s(&[2]), s(&[1, 3])]);
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_search(
            n in 1usize..=7,
            raw in proptest::collection::vec(1u64..128, 0..8),
        ) {
            let all = VertexSet::full(n).bits();
            let edges: Vec<_> = raw
                .into_iter()
                .map(|b| VertexSet::from_bits(b & all))
                .filter(|e| !e.is_empty())
                .collect();
            let tr = minimal_transversals(&edges);
            prop_assert_eq!(&tr, &brute(n, &edges));
            for t in &tr {
                prop_assert!(edges.iter().all(|e| e.meets(*t)));
            }
        }
    }
}
