//! Squarefree monomial ideals, represented by the supports of their minimal generators.

mod quotients;
mod transversal;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graphs::{validate_standing_assumptions, Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use self::quotients::{
    colon_generators, is_linear_quotient_order, is_linearly_related, lcm_graph,
    linear_quotient_order, search_linear_quotient_order, LcmGraph, MonomialOrderCert,
};
pub use self::transversal::{minimal_transversals, minimalize};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the zero ideal has no minimal primes")]
    ZeroIdeal,
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("no linear quotient order exists: the graph is disconnected")]
    NoOrderExists { components: Vec<VertexSet> },
    #[error("invalid monomial {0:?}")]
    BadMonomial(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `∏_{i ∈ support} x_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SqfMonomial {
    pub support: VertexSet,
}

impl SqfMonomial {
    pub const ONE: SqfMonomial = SqfMonomial {
        support: VertexSet::EMPTY,
    };

    pub fn new(support: VertexSet) -> Self {
        SqfMonomial { support }
    }

    pub fn degree(self) -> usize {
        self.support.len()
    }

    pub fn divides(self, other: SqfMonomial) -> bool {
        self.support.is_subset(other.support)
    }

    pub fn lcm(self, other: SqfMonomial) -> SqfMonomial {
        SqfMonomial::new(self.support.union(other.support))
    }

    /// `self : other = lcm(self, other) / other`.
    pub fn colon(self, other: SqfMonomial) -> SqfMonomial {
        SqfMonomial::new(self.support.difference(other.support))
    }
}

impl Ord for SqfMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.support).cmp(&(other.degree(), other.support))
    }
}

impl PartialOrd for SqfMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("1");
        }
        for (k, v) in self.support.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SqfMonomial {
    type Err = IdealError;

    fn from_str(s: &str) -> Result<Self, IdealError> {
        let s = s.trim();
        if s == "1" {
            return Ok(SqfMonomial::ONE);
        }
        let bad = || IdealError::BadMonomial(s.to_string());
        let mut support = VertexSet::EMPTY;
        for var in s.split('*') {
            let idx: usize = var
                .trim()
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(bad)?;
            if idx == 0 || idx > MAX_VERTICES || support.contains(idx - 1) {
                return Err(bad());
            }
            support = support.insert(idx - 1);
        }
        Ok(SqfMonomial::new(support))
    }
}

impl Serialize for SqfMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SqfMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A squarefree monomial ideal of `K[x_1..x_n]` given by its minimal generators,
/// kept sorted by degree and then lexicographically by support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqfIdeal {
    n: usize,
    gens: Vec<SqfMonomial>,
}

impl SqfIdeal {
    /// The ideal generated by the given supports; non-minimal ones are dropped.
    pub fn from_supports<I: IntoIterator<Item = VertexSet>>(n: usize, supports: I) -> Self {
        let all = VertexSet::full(n);
        let mut sets: Vec<VertexSet> = supports.into_iter().collect();
        assert!(sets.iter().all(|s| s.is_subset(all)), "support outside [n]");
        sets = minimalize(sets);
        let mut gens: Vec<_> = sets.into_iter().map(SqfMonomial::new).collect();
        gens.sort();
        SqfIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        SqfIdeal { n, gens: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SqfMonomial] {
        &self.gens
    }

    pub fn supports(&self) -> Vec<VertexSet> {
        self.gens.iter().map(|g| g.support).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: SqfMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `Some(d)` when every minimal generator has degree `d`.
    pub fn generated_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn index_of(&self, m: SqfMonomial) -> Option<usize> {
        self.gens.binary_search(&m).ok()
    }
}

impl fmt::Display for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as a JSON array of monomial strings.
impl Serialize for SqfIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(&self.gens)
    }
}

/// `I_c(G) = (x_1⋯x_n / x_i x_j : {i,j} ∈ E(G))`.
pub fn complementary_edge_ideal(g: &Graph) -> Result<SqfIdeal, IdealError> {
    validate_standing_assumptions(g)?;
    let n = g.n();
    Ok(SqfIdeal::from_supports(
        n,
        g.edge_sets().into_iter().map(|e| e.complement(n)),
    ))
}

/// Minimal primes `P(T) = (x_i : i ∈ T)`, returned as the sets `T`: the
/// inclusion-minimal transversals of the generator supports.
pub fn minimal_primes(ideal: &SqfIdeal) -> Result<Vec<VertexSet>, IdealError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    Ok(minimal_transversals(&ideal.supports()))
}

pub fn height(ideal: &SqfIdeal) -> Result<usize, IdealError> {
    Ok(minimal_primes(ideal)?
        .iter()
        .map(|t| t.len())
        .min()
        .unwrap_or(0))
}

/// All minimal primes have the same height. The zero ideal counts as unmixed.
pub fn is_unmixed(ideal: &SqfIdeal) -> bool {
    match minimal_primes(ideal) {
        Ok(primes) => primes.windows(2).all(|w| w[0].len() == w[1].len()),
        Err(_) => true,
    }
}

pub fn alexander_dual(ideal: &SqfIdeal) -> Result<SqfIdeal, IdealError> {
    Ok(SqfIdeal::from_supports(ideal.n, minimal_primes(ideal)?))
}

/// `I_[j]`: the ideal generated by every squarefree degree-`j` monomial of `I`.
pub fn degree_component(ideal: &SqfIdeal, j: usize) -> SqfIdeal {
    let n = ideal.n;
    let mut out = BTreeSet::new();
    for g in ideal.gens.iter().filter(|g| g.degree() <= j) {
        let free: Vec<usize> = g.support.complement(n).iter().collect();
        for_each_combination(&free, j - g.degree(), |extra| {
            out.insert(g.support.union(extra));
        });
    }
    SqfIdeal::from_supports(n, out)
}

fn for_each_combination(items: &[usize], k: usize, mut f: impl FnMut(VertexSet)) {
    fn rec(items: &[usize], k: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet)) {
        if k == 0 {
            f(acc);
            return;
        }
        if items.len() < k {
            return;
        }
        rec(&items[1..], k - 1, acc.insert(items[0]), f);
        rec(&items[1..], k, acc, f);
    }
    rec(items, k, VertexSet::EMPTY, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| VertexSet::from_labels(s.iter().copied())).collect()
    }

    fn supports(i: &SqfIdeal) -> Vec<VertexSet> {
        i.supports()
    }

    fn two_k2() -> Graph {
        Graph::from_labeled_edges(4, &[(1, 2), (3, 4)])
    }

    fn paw() -> Graph {
        Graph::from_labeled_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])
    }

    /// Minimal hitting sets by scanning every subset of [n].
    fn brute_minimal_transversals(n: usize, edges: &[VertexSet]) -> Vec<VertexSet> {
        let hits: Vec<_> = VertexSet::full(n)
            .subsets()
            .filter(|t| edges.iter().all(|e| e.meets(*t)))
            .collect();
        let mut out: Vec<_> = hits
            .iter()
            .copied()
            .filter(|t| !hits.iter().any(|s| s != t && s.is_subset(*t)))
            .collect();
        out.sort_by_key(|t| (t.len(), *t));
        out
    }

    #[test]
    fn construction() {
        let i = complementary_edge_ideal(&two_k2()).unwrap();
        assert_eq!(supports(&i), sets(&[&[1, 2], &[3, 4]]));
        let i = complementary_edge_ideal(&Graph::path(4)).unwrap();
        assert_eq!(supports(&i), sets(&[&[1, 2], &[1, 4], &[3, 4]]));
        let i = complementary_edge_ideal(&Graph::complete(4)).unwrap();
        assert_eq!(i.gens().len(), 6);
        assert_eq!(i.generated_degree(), Some(2));
        assert!(matches!(
            complementary_edge_ideal(&Graph::complete(3)),
            Err(IdealError::Graph(GraphError::AmbientTooSmall(3)))
        ));
    }

    #[test]
    fn primes_of_fixtures() {
        let i = complementary_edge_ideal(&two_k2()).unwrap();
        let expected = sets(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(minimal_primes(&i).unwrap(), expected);
        assert_eq!(brute_minimal_transversals(4, &i.supports()), expected);
        assert_eq!(height(&i).unwrap(), 2);

        let i = complementary_edge_ideal(&Graph::complete(4)).unwrap();
        let expected = sets(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(minimal_primes(&i).unwrap(), expected);
        assert_eq!(brute_minimal_transversals(4, &i.supports()), expected);
        assert_eq!(height(&i).unwrap(), 3);

        let i = complementary_edge_ideal(&Graph::path(4)).unwrap();
        let expected = sets(&[&[1, 3], &[1, 4], &[2, 4]]);
        assert_eq!(minimal_primes(&i).unwrap(), expected);
        assert_eq!(brute_minimal_transversals(4, &i.supports()), expected);
        assert_eq!(height(&i).unwrap(), 2);
    }

    #[test]
    fn zero_ideal_errors() {
        let z = SqfIdeal::zero(4);
        assert_eq!(minimal_primes(&z), Err(IdealError::ZeroIdeal));
        assert_eq!(height(&z), Err(IdealError::ZeroIdeal));
        assert_eq!(alexander_dual(&z), Err(IdealError::ZeroIdeal));
    }

    #[test]
    fn unmixedness() {
        let c4 = complementary_edge_ideal(&Graph::cycle(4)).unwrap();
        assert!(is_unmixed(&c4));
        let p = complementary_edge_ideal(&paw()).unwrap();
        let heights: BTreeSet<_> = brute_minimal_transversals(4, &p.supports())
            .iter()
            .map(|t| t.len())
            .collect();
        assert_eq!(heights, BTreeSet::from([2, 3]));
        assert!(!is_unmixed(&p));
        assert!(is_unmixed(&complementary_edge_ideal(&Graph::complete(5)).unwrap()));
    }

    #[test]
    fn duals() {
        let i = complementary_edge_ideal(&two_k2()).unwrap();
        let d = alexander_dual(&i).unwrap();
        assert_eq!(d.supports(), two_k2().complement().edge_sets());
        let k4 = complementary_edge_ideal(&Graph::complete(4)).unwrap();
        assert_eq!(alexander_dual(&k4).unwrap().supports(), Graph::complete(4).triangles());
    }

    #[test]
    fn degree_components_of_the_paw_dual() {
        let d = alexander_dual(&complementary_edge_ideal(&paw()).unwrap()).unwrap();
        assert_eq!(degree_component(&d, 2).supports(), sets(&[&[1, 4], &[2, 4]]));
        let third = degree_component(&d, 3);
        assert_eq!(third.gens().len(), 4);
        assert_eq!(third.generated_degree(), Some(3));
        let p4 = complementary_edge_ideal(&Graph::path(4)).unwrap();
        assert_eq!(degree_component(&p4, 2), p4);
        assert!(degree_component(&p4, 1).is_zero());
    }

    #[test]
    fn monomial_strings() {
        let m: SqfMonomial = "x1*x3*x4".parse().unwrap();
        assert_eq!(m.support, VertexSet::from_labels([1, 3, 4]));
        assert_eq!(m.to_string(), "x1*x3*x4");
        assert_eq!("1".parse::<SqfMonomial>().unwrap(), SqfMonomial::ONE);
        assert!("x0".parse::<SqfMonomial>().is_err());
        assert!("x1*x1".parse::<SqfMonomial>().is_err());
        assert!("y2".parse::<SqfMonomial>().is_err());
        let i = complementary_edge_ideal(&two_k2()).unwrap();
        assert_eq!(serde_json::to_string(&i).unwrap(), r#"["x1*x2","x3*x4"]"#);
    }

    #[test]
    fn transversals_match_brute_force_for_all_small_graphs() {
        for n in 4..=6usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0..(1u64 << pairs) {
                let g = Graph::from_edge_mask(n, mask);
                let Ok(i) = complementary_edge_ideal(&g) else { continue };
                let primes = minimal_primes(&i).unwrap();
                assert_eq!(primes, brute_minimal_transversals(n, &i.supports()), "{g:?}");
                // duality is an involution
                let d = alexander_dual(&i).unwrap();
                assert_eq!(alexander_dual(&d).unwrap(), i);
            }
        }
    }
}
