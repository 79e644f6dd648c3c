//! lcm graphs, linear relatedness, and linear quotient orders.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{complementary_edge_ideal, minimalize, IdealError, SqfIdeal, SqfMonomial};
use crate::graphs::{validate_standing_assumptions, Graph};
use crate::vertex_set::VertexSet;

/// The graph on `𝒢(I)` joining `u, v` when `deg lcm(u,v) = d + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmGraph {
    pub gens: Vec<SqfMonomial>,
    pub adj: Vec<Vec<bool>>,
}

impl LcmGraph {
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    /// Is `to` reachable from `from` using only generators in `allowed`?
    fn connected_within(&self, from: usize, to: usize, allowed: &[bool]) -> bool {
        let mut seen = vec![false; self.gens.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for y in 0..self.gens.len() {
                if allowed[y] && !seen[y] && self.adj[x][y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}

pub fn lcm_graph(ideal: &SqfIdeal) -> Result<LcmGraph, IdealError> {
    let d = ideal.generated_degree().ok_or(IdealError::NotEquigenerated)?;
    let gens = ideal.gens().to_vec();
    let adj = gens
        .iter()
        .map(|&u| {
            gens.iter()
                .map(|&v| u != v && u.lcm(v).degree() == d + 1)
                .collect()
        })
        .collect();
    Ok(LcmGraph { gens, adj })
}

/// Every pair `u, v` is joined by a path in the lcm graph restricted to the
/// generators dividing `lcm(u, v)`.
pub fn is_linearly_related(ideal: &SqfIdeal) -> Result<bool, IdealError> {
    let g = lcm_graph(ideal)?;
    let m = g.gens.len();
    for a in 0..m {
        for b in a + 1..m {
            let l = g.gens[a].lcm(g.gens[b]);
            let allowed: Vec<bool> = g.gens.iter().map(|w| w.divides(l)).collect();
            if !g.connected_within(a, b, &allowed) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An ordering of `𝒢(I)` together with the minimal generators of each colon
/// ideal `(u_1, …, u_{i-1}) : u_i` (empty for the first step).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrderCert {
    /// Indices into the sorted generator list of the ideal.
    pub order: Vec<usize>,
    pub monomials: Vec<SqfMonomial>,
    pub colon_gens: Vec<Vec<SqfMonomial>>,
}

/// Minimal generators of `(u_{order[0]}, …, u_{order[i-1]}) : u_{order[i]}`.
pub fn colon_generators(ideal: &SqfIdeal, order: &[usize], i: usize) -> Vec<VertexSet> {
    let gens = ideal.gens();
    let target = gens[order[i]];
    minimalize(
        order[..i]
            .iter()
            .map(|&j| gens[j].colon(target).support)
            .collect(),
    )
}

fn is_permutation(order: &[usize], len: usize) -> bool {
    let mut seen = vec![false; len];
    order.len() == len
        && order
            .iter()
            .all(|&k| k < len && !std::mem::replace(&mut seen[k], true))
}

pub fn is_linear_quotient_order(ideal: &SqfIdeal, order: &[usize]) -> bool {
    is_permutation(order, ideal.gens().len())
        && (1..order.len()).all(|i| colon_generators(ideal, order, i).iter().all(|c| c.len() == 1))
}

/// The generator listing from the connectivity argument: start at the
/// smallest vertex `a` and list its edges; then repeatedly take the smallest
/// vertex `c` outside the visited set `T`, adjacent to `T`, that still has
/// unlisted edges, list those edges, and add `c` to `T`. Edges within a step
/// go by increasing other endpoint.
pub fn linear_quotient_order(g: &Graph) -> Result<MonomialOrderCert, IdealError> {
    validate_standing_assumptions(g)?;
    if !g.is_connected() {
        return Err(IdealError::NoOrderExists {
            components: g.connected_components(),
        });
    }
    let n = g.n();
    let ideal = complementary_edge_ideal(g)?;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count());
    let a = 0;
    let mut visited = VertexSet::singleton(a);
    edges.extend(g.neighbors(a).iter().map(|x| (a, x)));
    while edges.len() < g.edge_count() {
        let reach = visited
            .iter()
            .fold(VertexSet::EMPTY, |acc, t| acc.union(g.neighbors(t)))
            .difference(visited);
        let c = reach
            .iter()
            .find(|&c| !g.neighbors(c).is_subset(visited))
            .expect("a connected graph always offers a next vertex");
        edges.extend(g.neighbors(c).difference(visited).iter().map(|x| (c, x)));
        visited = visited.insert(c);
    }
    let order: Vec<usize> = edges
        .iter()
        .map(|&(u, v)| {
            let m = SqfMonomial::new(VertexSet::from_indices([u, v]).complement(n));
            ideal.index_of(m).expect("every edge yields a generator")
        })
        .collect();
    Ok(certificate(&ideal, order))
}

fn certificate(ideal: &SqfIdeal, order: Vec<usize>) -> MonomialOrderCert {
    let colon_gens = (0..order.len())
        .map(|i| {
            colon_generators(ideal, &order, i)
                .into_iter()
                .map(SqfMonomial::new)
                .collect()
        })
        .collect();
    MonomialOrderCert {
        monomials: order.iter().map(|&k| ideal.gens()[k]).collect(),
        order,
        colon_gens,
    }
}

/// Exhaustive search for any linear quotient order of `𝒢(I)`.
///
/// Depth-first over permutations; a failing prefix prunes all its extensions, and
/// since each step's test depends only on the *set* already placed, dead sets are
/// memoized (for up to 128 generators).
pub fn search_linear_quotient_order(ideal: &SqfIdeal) -> Option<Vec<usize>> {
    let gens = ideal.gens();
    let m = gens.len();
    let mut dead: HashSet<u128> = HashSet::new();
    let mut prefix = Vec::with_capacity(m);

    fn step_ok(gens: &[SqfMonomial], placed: &[usize], next: usize) -> bool {
        let colons = minimalize(placed.iter().map(|&j| gens[j].colon(gens[next]).support).collect());
        colons.iter().all(|c| c.len() == 1)
    }

    fn dfs(
        gens: &[SqfMonomial],
        prefix: &mut Vec<usize>,
        used: u128,
        dead: &mut HashSet<u128>,
    ) -> bool {
        let m = gens.len();
        if prefix.len() == m {
            return true;
        }
        if m <= 128 && dead.contains(&used) {
            return false;
        }
        for k in 0..m {
            let bit = if m <= 128 { 1u128 << k } else { 0 };
            if prefix.contains(&k) || !step_ok(gens, prefix, k) {
                continue;
            }
            prefix.push(k);
            if dfs(gens, prefix, used | bit, dead) {
                return true;
            }
            prefix.pop();
        }
        if m <= 128 {
            dead.insert(used);
        }
        false
    }

    dfs(gens, &mut prefix, 0, &mut dead).then_some(prefix)
}
