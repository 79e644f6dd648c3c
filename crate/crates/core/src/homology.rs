//! Reduced simplicial homology over `ℚ` or `GF(p)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complexes::SimplicialComplex;
use crate::linalg::{rank_gf2_columns, rank_mod_p, rank_rational, IntMatrix};
use crate::vertex_set::VertexSet;

/// Coefficient field: characteristic zero or a prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);

    /// `GF(p)`, or `None` when `p` is not prime.
    pub fn prime(p: u32) -> Option<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        prime.then_some(FieldSpec::Prime(p))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn rank(self, m: &IntMatrix) -> usize {
        match self {
            FieldSpec::Rational => rank_rational(m),
            FieldSpec::Prime(p) => rank_mod_p(m, p as u64),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FieldSpec {
    type Err = String;

    /// Accepts `q`, `Q`, `QQ`, a prime `p`, or `GF(p)`.
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if matches!(t, "q" | "Q" | "QQ" | "0") {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        digits
            .parse::<u32>()
            .ok()
            .and_then(FieldSpec::prime)
            .ok_or_else(|| format!("unknown field {s:?}: expected q or a prime"))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `dim H̃_k` for `k = -1, 0, …`; zero everywhere else.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyDims {
    /// `dims[k + 1] = dim H̃_k`
    dims: Vec<usize>,
}

impl HomologyDims {
    pub fn get(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(k, dim)` pairs with nonzero dimension.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as isize - 1, d))
    }

    /// `Σ (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

fn group_by_size(faces: &[VertexSet]) -> Vec<Vec<VertexSet>> {
    let top = faces.iter().map(|f| f.len()).max();
    let mut groups: Vec<Vec<VertexSet>> = vec![Vec::new(); top.map_or(0, |t| t + 1)];
    for &f in faces {
        groups[f.len()].push(f);
    }
    for g in &mut groups {
        g.sort();
        g.dedup();
    }
    groups
}

/// Columns of `∂` from `upper` (size `s+1`) to `lower` (size `s`), as
/// `(row, sign)` lists. Removing the `i`-th smallest vertex carries `(-1)^i`.
fn boundary_columns(upper: &[VertexSet], lower: &[VertexSet]) -> Vec<Vec<(usize, i64)>> {
    upper
        .iter()
        .map(|&face| {
            face.iter()
                .enumerate()
                .map(|(i, v)| {
                    let row = lower
                        .binary_search(&face.remove(v))
                        .expect("face list is closed under subsets");
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect()
}

fn boundary_rank(upper: &[VertexSet], lower: &[VertexSet], field: FieldSpec) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let cols = boundary_columns(upper, lower);
    match field {
        FieldSpec::Prime(2) => {
            let idx: Vec<Vec<usize>> = cols
                .iter()
                .map(|c| c.iter().map(|&(r, _)| r).collect())
                .collect();
            rank_gf2_columns(idx.iter().map(|c| c.as_slice()), lower.len())
        }
        _ => field.rank(&dense(&cols, lower.len())),
    }
}

fn dense(cols: &[Vec<(usize, i64)>], rows: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for &(r, s) in col {
            m.set(r, c, s);
        }
    }
    m
}

/// Matrix of `∂_k : C_k → C_{k-1}` of the augmented chain complex, rows and
/// columns in lexicographic face order. `∂_0` sends every vertex to `∅`.
pub fn boundary_matrix(delta: &SimplicialComplex, k: isize) -> IntMatrix {
    assert!(k >= -1, "boundary index below -1");
    let groups = group_by_size(&delta.faces());
    let at = |size: isize| -> &[VertexSet] {
        if size < 0 {
            &[]
        } else {
            groups.get(size as usize).map_or(&[], |g| g.as_slice())
        }
    };
    let (upper, lower) = (at(k + 1), at(k));
    dense(&boundary_columns(upper, lower), lower.len())
}

/// Reduced homology of the complex whose full face list (closed under
/// subsets, `∅` included unless void) is `faces`.
pub fn reduced_homology_of_faces(faces: &[VertexSet], field: FieldSpec) -> HomologyDims {
    let groups = group_by_size(faces);
    if groups.is_empty() {
        return HomologyDims::default();
    }
    // ranks[s] = rank of ∂ from size-s faces to size-(s-1) faces; ranks[0] = 0
    let mut ranks = vec![0usize; groups.len() + 1];
    for s in 1..groups.len() {
        ranks[s] = boundary_rank(&groups[s], &groups[s - 1], field);
    }
    let dims = (0..groups.len())
        .map(|s| groups[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    HomologyDims { dims }
}

pub fn reduced_homology_dims(delta: &SimplicialComplex, field: FieldSpec) -> HomologyDims {
    reduced_homology_of_faces(&delta.faces(), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIELDS: [FieldSpec; 3] = [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rational];

    fn s(l: &[usize]) -> VertexSet {
        VertexSet::from_labels(l.iter().copied())
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, facets.iter().map(|f| s(f)))
    }

    fn f_vector_euler(delta: &SimplicialComplex) -> i64 {
        delta
            .faces()
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    #[test]
    fn edge_boundary_convention() {
        let m = boundary_matrix(&cx(2, &[&[1, 2]]), 1);
        assert_eq!(m, IntMatrix::from_rows(vec![vec![-1], vec![1]]));
        let aug = boundary_matrix(&cx(2, &[&[1, 2]]), 0);
        assert_eq!(aug, IntMatrix::from_rows(vec![vec![1, 1]]));
        assert_eq!(boundary_matrix(&cx(2, &[&[1, 2]]), -1).rows, 0);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let delta = cx(5, &[&[1, 2, 3, 4], &[2, 3, 5], &[4, 5]]);
        for k in 0..=4 {
            let prod = boundary_matrix(&delta, k).mul(&boundary_matrix(&delta, k + 1));
            assert!(prod.is_zero(), "k = {k}");
        }
    }

    #[test]
    fn hollow_triangle() {
        let delta = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let d1 = boundary_matrix(&delta, 1);
        assert_eq!((d1.rows, d1.cols), (3, 3));
        assert_eq!(FieldSpec::Rational.rank(&d1), 2);
        for f in FIELDS {
            let h = reduced_homology_dims(&delta, f);
            assert_eq!((h.get(0), h.get(1)), (0, 1));
        }
    }

    #[test]
    fn standard_examples() {
        let square = cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let two = cx(4, &[&[1, 2], &[3, 4]]);
        let full = cx(4, &[&[1, 2, 3, 4]]);
        for f in FIELDS {
            let h = reduced_homology_dims(&square, f);
            assert_eq!((h.get(0), h.get(1)), (0, 1));
            assert_eq!(reduced_homology_dims(&two, f).get(0), 1);
            assert!(reduced_homology_dims(&full, f).is_acyclic());
        }
    }

    #[test]
    fn void_and_irrelevant_complexes() {
        for f in FIELDS {
            assert!(reduced_homology_dims(&SimplicialComplex::void(3), f).is_acyclic());
            let h = reduced_homology_dims(&SimplicialComplex::irrelevant(3), f);
            assert_eq!(h.get(-1), 1);
            assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(-1, 1)]);
        }
    }

    #[test]
    fn projective_plane_depends_on_the_field() {
        // six-vertex triangulation of RP^2
        let rp2 = cx(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
            ],
        );
        let q = reduced_homology_dims(&rp2, FieldSpec::Rational);
        assert!(q.is_acyclic());
        let z2 = reduced_homology_dims(&rp2, FieldSpec::GF2);
        assert_eq!((z2.get(1), z2.get(2)), (1, 1));
        assert!(reduced_homology_dims(&rp2, FieldSpec::GF3).is_acyclic());
        for h in [q, z2] {
            assert_eq!(h.euler_characteristic(), f_vector_euler(&rp2));
        }
    }

    #[test]
    fn cones_are_acyclic() {
        let delta = cx(5, &[&[1, 2, 3], &[1, 4], &[1, 3, 5]]);
        assert_eq!(delta.cone_apex(), Some(0));
        for f in FIELDS {
            assert!(reduced_homology_dims(&delta, f).is_acyclic());
        }
    }

    #[test]
    fn field_parsing() {
        assert_eq!("2".parse::<FieldSpec>(), Ok(FieldSpec::GF2));
        assert_eq!("GF(3)".parse::<FieldSpec>(), Ok(FieldSpec::GF3));
        assert_eq!("q".parse::<FieldSpec>(), Ok(FieldSpec::Rational));
        assert!("4".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::prime(7), Some(FieldSpec::Prime(7)));
        assert_eq!(FieldSpec::prime(1), None);
        assert_eq!(FieldSpec::GF2.to_string(), "GF(2)");
    }
}
