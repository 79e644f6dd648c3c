use super::Graph;
use crate::vertex_set::VertexSet;

/// Maximum cardinality search: repeatedly visit the unvisited vertex with the
/// most visited neighbors, ties broken by smallest index. Returns the visit order.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited = visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).difference(visited).iter() {
            weight[u] += 1;
        }
    }
    order
}

/// True iff, for every vertex, its neighbors eliminated after it form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later = later.remove(v);
        let fwd = g.neighbors(v).intersection(later);
        if !g.induced_subgraph_is_clique(fwd) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Induced cycle of length >= 4, by exhaustive subset search.
    fn has_long_induced_cycle(g: &Graph) -> bool {
        g.vertices().subsets().any(|s| {
            s.len() >= 4
                && s.iter().all(|v| g.neighbors(v).intersection(s).len() == 2)
                && {
                    let sub_edges: Vec<_> = g
                        .edges()
                        .into_iter()
                        .filter(|&(i, j)| s.contains(i) && s.contains(j))
                        .collect();
                    // all degrees 2 and connected => a single cycle
                    let mut comp = VertexSet::singleton(s.min().unwrap());
                    loop {
                        let mut grown = comp;
                        for &(i, j) in &sub_edges {
                            if comp.contains(i) || comp.contains(j) {
                                grown = grown.insert(i).insert(j);
                            }
                        }
                        if grown == comp {
                            break;
                        }
                        comp = grown;
                    }
                    comp == s
                }
        })
    }

    #[test]
    fn mcs_agrees_with_induced_cycle_search_up_to_seven_vertices() {
        for n in 1..=7usize {
            let pairs = n * (n - 1) / 2;
            // n = 7 has 2^21 graphs; stride through them to keep the test quick.
            let step = if n == 7 { 97 } else { 1 };
            let mut mask = 0u64;
            while mask < (1u64 << pairs) {
                let g = Graph::from_edge_mask(n, mask);
                assert_eq!(g.is_chordal(), !has_long_induced_cycle(&g), "{g:?}");
                mask += step;
            }
        }
    }

    #[test]
    fn mcs_visits_every_vertex() {
        let g = Graph::cycle(6);
        let mut order = maximum_cardinality_search(&g);
        assert_eq!(order[0], 0);
        order.sort();
        assert_eq!(order, (0..6).collect::<Vec<_>>());
    }
}
