//! Simplicial complexes on `[n]` given by their facets, and the complexes
//! attached to a graph: the Stanley–Reisner complex `Γ_G` of `I_c(G)` and the
//! facet complex `Λ_G` whose facets are the generator supports.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{validate_standing_assumptions, Graph, GraphError};
use crate::ideals::{complementary_edge_ideal, minimal_transversals, IdealError, SqfIdeal};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("{0} is not a facet of the complex")]
    NotAFacet(VertexSet),
    #[error("facet {0} appears more than once in the sequence")]
    RepeatedFacet(VertexSet),
}

/// A simplicial complex stored as its sorted list of facets.
///
/// No facets at all is the void complex; the single facet `∅` is the
/// irrelevant complex `{∅}`. The two have different reduced homology.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal entries are dropped.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Self {
        let mut sets: Vec<VertexSet> = faces.into_iter().collect();
        assert!(
            sets.iter().all(|s| s.is_subset(VertexSet::full(n))),
            "face outside [n]"
        );
        sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
        let mut facets: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        facets.sort();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    pub fn simplex(n: usize, vertices: VertexSet) -> Self {
        SimplicialComplex::from_faces(n, [vertices])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Every face, including `∅` when the complex is not void, sorted by size then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        out.sort_by_key(|s| (s.len(), *s));
        out.dedup();
        out
    }

    /// `Δ_W`: faces of `Δ` inside `W`. Restricting a nonvoid complex to a set
    /// that misses every vertex leaves `{∅}`, not the void complex.
    pub fn induced_subcomplex(&self, w: VertexSet) -> SimplicialComplex {
        SimplicialComplex::from_faces(self.n, self.facets.iter().map(|f| f.intersection(w)))
    }

    /// `Δ^W`: the facets of `Δ` contained in `W`.
    pub fn induced_subcollection(&self, w: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            facets: self.facets.iter().copied().filter(|f| f.is_subset(w)).collect(),
        }
    }

    /// Smallest vertex lying in every facet.
    pub fn cone_apex(&self) -> Option<usize> {
        let (first, rest) = self.facets.split_first()?;
        rest.iter().fold(*first, |a, &f| a.intersection(f)).min()
    }

    pub fn is_cone(&self) -> bool {
        self.cone_apex().is_some()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.facets).finish()
    }
}

/// `Γ_G`: facets `[n]∖{i,j}` for nonedges and `[n]∖{i,j,k}` for triangles.
pub fn gamma_complex(g: &Graph) -> Result<SimplicialComplex, GraphError> {
    validate_standing_assumptions(g)?;
    let n = g.n();
    let facets = g
        .nonedge_sets()
        .into_iter()
        .chain(g.triangles())
        .map(|s| s.complement(n));
    Ok(SimplicialComplex::from_faces(n, facets))
}

/// `Λ_G`: facets are the supports of the generators of `I_c(G)`.
pub fn facet_complex(g: &Graph) -> Result<SimplicialComplex, IdealError> {
    let ideal = complementary_edge_ideal(g)?;
    Ok(SimplicialComplex::from_faces(ideal.n(), ideal.supports()))
}

/// Minimal non-faces of `Δ`. A set is a non-face iff it meets the complement
/// of every facet, so these are the minimal transversals of the facet complements.
pub fn stanley_reisner_ideal(delta: &SimplicialComplex) -> SqfIdeal {
    let n = delta.n;
    let complements: Vec<_> = delta.facets.iter().map(|f| f.complement(n)).collect();
    SqfIdeal::from_supports(n, minimal_transversals(&complements))
}

/// The complex whose Stanley–Reisner ideal is `ideal`: faces are the sets
/// containing no generator support, so facets are complements of minimal primes.
pub fn stanley_reisner_complex(ideal: &SqfIdeal) -> SimplicialComplex {
    let n = ideal.n();
    let tr = minimal_transversals(&ideal.supports());
    SimplicialComplex::from_faces(n, tr.into_iter().map(|t| t.complement(n)))
}

/// An ordered sequence of distinct facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetCoverSeq(pub Vec<VertexSet>);

impl FacetCoverSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Checks that `seq` is a minimal facet cover of `Δ` and that every other
/// facet `H` admits some `i < k` with `F_i ⊆ H ∪ F_{i+1} ∪ … ∪ F_k`.
pub fn is_well_ordered_facet_cover(
    delta: &SimplicialComplex,
    seq: &FacetCoverSeq,
) -> Result<bool, ComplexError> {
    for (k, &f) in seq.0.iter().enumerate() {
        if !delta.facets.contains(&f) {
            return Err(ComplexError::NotAFacet(f));
        }
        if seq.0[..k].contains(&f) {
            return Err(ComplexError::RepeatedFacet(f));
        }
    }
    Ok(well_ordered(delta.vertex_set(), &delta.facets, &seq.0))
}

fn union_of(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
}

fn is_minimal_cover(vertices: VertexSet, seq: &[VertexSet]) -> bool {
    union_of(seq) == vertices
        && (0..seq.len()).all(|skip| {
            let rest = seq
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .fold(VertexSet::EMPTY, |a, (_, &f)| a.union(f));
            rest != vertices
        })
}

fn well_ordered(vertices: VertexSet, facets: &[VertexSet], seq: &[VertexSet]) -> bool {
    if !is_minimal_cover(vertices, seq) {
        return false;
    }
    // suffix[i] = F_i ∪ … ∪ F_k
    let mut suffix = vec![VertexSet::EMPTY; seq.len() + 1];
    for i in (0..seq.len()).rev() {
        suffix[i] = suffix[i + 1].union(seq[i]);
    }
    facets.iter().filter(|h| !seq.contains(h)).all(|&h| {
        (0..seq.len().saturating_sub(1)).any(|i| seq[i].is_subset(h.union(suffix[i + 1])))
    })
}

/// Every well-ordered facet cover with at most `k_max` facets, shortest first and
/// lexicographically by facet position within each length.
pub fn well_ordered_covers(delta: &SimplicialComplex, k_max: usize) -> Vec<FacetCoverSeq> {
    let facets = &delta.facets;
    let vertices = delta.vertex_set();
    let mut found = Vec::new();
    for k in 1..=k_max.min(facets.len()) {
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        for_each_combination(facets.len(), k, &mut |combo| {
            let chosen: Vec<VertexSet> = combo.iter().map(|&i| facets[i]).collect();
            if !is_minimal_cover(vertices, &chosen) {
                return;
            }
            for_each_permutation(combo, &mut |perm| {
                let seq: Vec<VertexSet> = perm.iter().map(|&i| facets[i]).collect();
                if well_ordered(vertices, facets, &seq) {
                    tuples.push(perm.to_vec());
                }
            });
        });
        tuples.sort();
        found.extend(
            tuples
                .into_iter()
                .map(|t| FacetCoverSeq(t.into_iter().map(|i| facets[i]).collect())),
        );
    }
    found
}

/// The first entry of [`well_ordered_covers`], if any.
pub fn find_well_ordered_cover(delta: &SimplicialComplex, k_max: usize) -> Option<FacetCoverSeq> {
    let facets = &delta.facets;
    let vertices = delta.vertex_set();
    for k in 1..=k_max.min(facets.len()) {
        let mut best: Option<Vec<usize>> = None;
        for_each_combination(facets.len(), k, &mut |combo| {
            let chosen: Vec<VertexSet> = combo.iter().map(|&i| facets[i]).collect();
            if !is_minimal_cover(vertices, &chosen) {
                return;
            }
            for_each_permutation(combo, &mut |perm| {
                if best.as_deref().is_some_and(|b| b <= perm) {
                    return;
                }
                let seq: Vec<VertexSet> = perm.iter().map(|&i| facets[i]).collect();
                if well_ordered(vertices, facets, &seq) {
                    best = Some(perm.to_vec());
                }
            });
        });
        if let Some(b) = best {
            return Some(FacetCoverSeq(b.into_iter().map(|i| facets[i]).collect()));
        }
    }
    None
}

fn for_each_combination(m: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, f);
            cur.pop();
        }
    }
    rec(0, m, k, &mut Vec::with_capacity(k), f);
}

fn for_each_permutation(items: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if rest.is_empty() {
            f(cur);
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            rec(rest, cur, f);
            cur.pop();
            rest.insert(k, x);
        }
    }
    rec(&mut items.to_vec(), &mut Vec::with_capacity(items.len()), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(l: &[usize]) -> VertexSet {
        VertexSet::from_labels(l.iter().copied())
    }

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        let mut out: Vec<_> = v.iter().map(|x| s(x)).collect();
        out.sort();
        out
    }

    fn two_k2() -> Graph {
        Graph::from_labeled_edges(4, &[(1, 2), (3, 4)])
    }

    fn p3_k2() -> Graph {
        Graph::from_labeled_edges(5, &[(1, 2), (2, 3), (4, 5)])
    }

    #[test]
    fn gamma_fixtures() {
        let g = gamma_complex(&two_k2()).unwrap();
        assert_eq!(g.facets(), sets(&[&[2, 4], &[2, 3], &[1, 4], &[1, 3]]));
        let g = gamma_complex(&Graph::complete(4)).unwrap();
        assert_eq!(g.facets(), sets(&[&[1], &[2], &[3], &[4]]));
        let g = gamma_complex(&Graph::path(4)).unwrap();
        assert_eq!(g.facets(), sets(&[&[2, 4], &[2, 3], &[1, 3]]));
        assert!(gamma_complex(&Graph::complete(3)).is_err());
    }

    #[test]
    fn stanley_reisner_fixtures() {
        let g = gamma_complex(&two_k2()).unwrap();
        assert_eq!(
            stanley_reisner_ideal(&g),
            complementary_edge_ideal(&two_k2()).unwrap()
        );
        let g = gamma_complex(&Graph::path(4)).unwrap();
        assert_eq!(
            stanley_reisner_ideal(&g),
            complementary_edge_ideal(&Graph::path(4)).unwrap()
        );
        assert!(stanley_reisner_ideal(&SimplicialComplex::simplex(4, VertexSet::full(4))).is_zero());
        // the void complex has every set as a non-face, starting with ∅
        let unit = stanley_reisner_ideal(&SimplicialComplex::void(3));
        assert_eq!(unit.supports(), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn stanley_reisner_complex_inverts_the_ideal() {
        let i = complementary_edge_ideal(&Graph::cycle(5)).unwrap();
        let delta = stanley_reisner_complex(&i);
        assert_eq!(stanley_reisner_ideal(&delta), i);
        assert_eq!(delta, gamma_complex(&Graph::cycle(5)).unwrap());
    }

    #[test]
    fn facet_complex_fixtures() {
        assert_eq!(facet_complex(&two_k2()).unwrap().facets(), sets(&[&[3, 4], &[1, 2]]));
        assert_eq!(
            facet_complex(&p3_k2()).unwrap().facets(),
            sets(&[&[3, 4, 5], &[1, 4, 5], &[1, 2, 3]])
        );
        assert_eq!(facet_complex(&Graph::complete(4)).unwrap().facets().len(), 6);
    }

    #[test]
    fn restrictions() {
        let g = gamma_complex(&two_k2()).unwrap();
        let r = g.induced_subcomplex(s(&[2, 3, 4]));
        assert_eq!(r.facets(), sets(&[&[2, 3], &[2, 4]]));
        assert_eq!(r.cone_apex(), Some(1));
        assert_eq!(g.induced_subcomplex(g.vertex_set()), g);
        assert_eq!(g.induced_subcomplex(VertexSet::EMPTY), SimplicialComplex::irrelevant(4));
        assert!(SimplicialComplex::void(4).induced_subcomplex(VertexSet::EMPTY).is_void());

        let lam = facet_complex(&p3_k2()).unwrap();
        assert_eq!(
            lam.induced_subcollection(s(&[1, 3, 4, 5])).facets(),
            sets(&[&[3, 4, 5], &[1, 4, 5]])
        );
        let lam = facet_complex(&two_k2()).unwrap();
        assert_eq!(lam.induced_subcollection(s(&[1, 2])).facets(), sets(&[&[1, 2]]));
        assert!(lam.induced_subcollection(s(&[1, 3])).is_void());
    }

    #[test]
    fn cones() {
        assert_eq!(gamma_complex(&two_k2()).unwrap().cone_apex(), None);
        assert_eq!(SimplicialComplex::simplex(4, s(&[1, 2, 3])).cone_apex(), Some(0));
        assert_eq!(SimplicialComplex::void(4).cone_apex(), None);
        assert_eq!(SimplicialComplex::irrelevant(4).cone_apex(), None);
    }

    #[test]
    fn well_ordered_cover_checks() {
        let sub = facet_complex(&p3_k2()).unwrap().induced_subcollection(s(&[1, 3, 4, 5]));
        let seq = FacetCoverSeq(vec![s(&[1, 4, 5]), s(&[3, 4, 5])]);
        assert_eq!(is_well_ordered_facet_cover(&sub, &seq), Ok(true));

        let lam = facet_complex(&two_k2()).unwrap();
        assert_eq!(is_well_ordered_facet_cover(&lam, &FacetCoverSeq(vec![s(&[1, 2])])), Ok(false));
        assert_eq!(
            is_well_ordered_facet_cover(&lam, &FacetCoverSeq(vec![s(&[1, 3])])),
            Err(ComplexError::NotAFacet(s(&[1, 3])))
        );
        assert_eq!(
            is_well_ordered_facet_cover(&lam, &FacetCoverSeq(vec![s(&[1, 2]), s(&[1, 2])])),
            Err(ComplexError::RepeatedFacet(s(&[1, 2])))
        );
    }

    #[test]
    fn star_cover_by_definition() {
        // Λ of K_{1,3}: facets {3,4},{2,4},{2,3}. Each pair covers [2..4] minimally;
        // the left-out facet H must absorb F_1 into H ∪ F_2, which always holds.
        let star = Graph::from_labeled_edges(4, &[(1, 2), (1, 3), (1, 4)]);
        let lam = facet_complex(&star).unwrap();
        let all_three = FacetCoverSeq(vec![s(&[3, 4]), s(&[2, 4]), s(&[2, 3])]);
        assert_eq!(is_well_ordered_facet_cover(&lam, &all_three), Ok(false));
        let pair = FacetCoverSeq(vec![s(&[3, 4]), s(&[2, 4])]);
        assert_eq!(is_well_ordered_facet_cover(&lam, &pair), Ok(true));
    }

    #[test]
    fn cover_search() {
        let sub = facet_complex(&p3_k2()).unwrap().induced_subcollection(s(&[1, 3, 4, 5]));
        let found = find_well_ordered_cover(&sub, 2).unwrap();
        assert_eq!(found.0, vec![s(&[1, 4, 5]), s(&[3, 4, 5])]);
        assert_eq!(well_ordered_covers(&sub, 2).len(), 2);

        let lam = facet_complex(&two_k2()).unwrap();
        assert_eq!(find_well_ordered_cover(&lam, 2).unwrap().0, vec![s(&[1, 2]), s(&[3, 4])]);
        assert_eq!(find_well_ordered_cover(&lam, 1), None);

        let single = SimplicialComplex::simplex(4, s(&[1, 2, 3]));
        assert_eq!(find_well_ordered_cover(&single, 1).unwrap().0, vec![s(&[1, 2, 3])]);
    }

    #[test]
    fn first_cover_agrees_with_full_enumeration() {
        for g in [Graph::complete(4), Graph::cycle(5), p3_k2(), Graph::path(5)] {
            let lam = facet_complex(&g).unwrap();
            for w in lam.vertex_set().subsets() {
                let sub = lam.induced_subcollection(w);
                assert_eq!(
                    find_well_ordered_cover(&sub, 3),
                    well_ordered_covers(&sub, 3).into_iter().next()
                );
            }
        }
    }
}
