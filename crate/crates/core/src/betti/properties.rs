use serde::{Deserialize, Serialize};

use crate::homology::FieldSpec;
use crate::ideals::{alexander_dual, degree_component, height, is_unmixed, IdealError, SqfIdeal};

use super::{hochster_betti, BettiTable};

/// Homological invariants of `I` and `S/I` over one coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub pd: usize,
    pub reg: usize,
    pub height: usize,
    pub linear_resolution: bool,
    pub pure_resolution: bool,
    pub unmixed: bool,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub level: bool,
    pub componentwise_linear_dual: bool,
    /// Reported through componentwise linearity of the Alexander dual.
    pub sequentially_cohen_macaulay: bool,
}

fn is_linear(table: &BettiTable, d: Option<usize>) -> bool {
    match d {
        Some(d) => table.entries().all(|((i, j), _)| j == i + d),
        None => false,
    }
}

fn is_pure(table: &BettiTable) -> bool {
    (0..=table.pd()).all(|i| table.row(i).count() == 1)
}

/// Equigenerated in degree `d` with `β_{i,j} = 0` whenever `j ≠ i + d`.
pub fn has_linear_resolution(ideal: &SqfIdeal, field: FieldSpec) -> Result<bool, IdealError> {
    if ideal.gens().len() == 1 {
        return Ok(true);
    }
    let d = ideal.generated_degree();
    if d.is_none() {
        return Ok(false);
    }
    Ok(is_linear(&hochster_betti(ideal, field)?, d))
}

fn componentwise_linear(ideal: &SqfIdeal, field: FieldSpec) -> Result<bool, IdealError> {
    let lo = ideal.gens().first().ok_or(IdealError::ZeroIdeal)?.degree();
    for j in lo..=ideal.n() {
        if !has_linear_resolution(&degree_component(ideal, j), field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Properties computed from `table`, which must be the Betti table of `ideal`.
pub(crate) fn properties_from_table(
    ideal: &SqfIdeal,
    table: &BettiTable,
    field: FieldSpec,
) -> Result<PropertyReport, IdealError> {
    let pd = table.pd();
    let height = height(ideal)?;
    // Auslander–Buchsbaum: depth S/I = n - pd(S/I) = n - pd(I) - 1
    let cm = pd + 1 == height;
    let last_row = table.row(pd).count();
    let cwl = componentwise_linear(&alexander_dual(ideal)?, field)?;
    Ok(PropertyReport {
        pd,
        reg: table.reg(),
        height,
        linear_resolution: is_linear(table, ideal.generated_degree()),
        pure_resolution: is_pure(table),
        unmixed: is_unmixed(ideal),
        cohen_macaulay: cm,
        gorenstein: cm && table.total(pd) == 1,
        level: cm && last_row == 1,
        componentwise_linear_dual: cwl,
        sequentially_cohen_macaulay: cwl,
    })
}

pub fn ring_properties(ideal: &SqfIdeal, field: FieldSpec) -> Result<PropertyReport, IdealError> {
    let table = hochster_betti(ideal, field)?;
    properties_from_table(ideal, &table, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;
    use crate::ideals::complementary_edge_ideal;
    use crate::vertex_set::VertexSet;

    fn props(g: &Graph) -> PropertyReport {
        ring_properties(&complementary_edge_ideal(g).unwrap(), FieldSpec::GF2).unwrap()
    }

    #[test]
    fn two_k2_is_gorenstein() {
        let p = props(&Graph::from_labeled_edges(4, &[(1, 2), (3, 4)]));
        assert!(p.gorenstein && p.level && p.cohen_macaulay && p.pure_resolution);
        assert!(!p.linear_resolution);
        assert_eq!((p.pd, p.reg, p.height), (1, 3, 2));
    }

    #[test]
    fn complete_graph_is_level_not_gorenstein() {
        let p = props(&Graph::complete(4));
        assert!(p.cohen_macaulay && p.level && !p.gorenstein);
        assert_eq!((p.pd, p.reg, p.height), (2, 2, 3));
    }

    #[test]
    fn four_cycle() {
        let p = props(&Graph::cycle(4));
        assert!(p.linear_resolution && p.unmixed && p.pure_resolution);
        assert!(!p.cohen_macaulay && !p.componentwise_linear_dual);
    }

    #[test]
    fn paw_is_mixed() {
        let paw = Graph::from_labeled_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]);
        let p = props(&paw);
        assert!(!p.unmixed);
        assert!(p.componentwise_linear_dual);
    }

    #[test]
    fn linear_resolution_of_general_ideals() {
        let s = |l: &[usize]| VertexSet::from_labels(l.iter().copied());
        // edge ideal of a path on three vertices: linear
        let path = SqfIdeal::from_supports(3, [s(&[1, 2]), s(&[2, 3])]);
        assert!(has_linear_resolution(&path, FieldSpec::GF2).unwrap());
        // edge ideal of 2K2: not linear
        let two = SqfIdeal::from_supports(4, [s(&[1, 2]), s(&[3, 4])]);
        assert!(!has_linear_resolution(&two, FieldSpec::GF2).unwrap());
        let mixed = SqfIdeal::from_supports(3, [s(&[1]), s(&[2, 3])]);
        assert!(!has_linear_resolution(&mixed, FieldSpec::GF2).unwrap());
    }
}
