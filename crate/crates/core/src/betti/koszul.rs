//! Betti numbers from the upper Koszul simplicial complex
//! `K^σ(I) = {τ ⊆ σ : x^{σ∖τ} ∈ I}`, with `β_{i,σ}(I) = dim H̃_{i-1}(K^σ)`.
//! Nothing here goes through the Stanley–Reisner complex.

use crate::homology::{reduced_homology_of_faces, FieldSpec};
use crate::ideals::{IdealError, SqfIdeal};
use crate::vertex_set::VertexSet;

use super::BettiTable;

/// Faces of `K^σ(I)`.
pub fn upper_koszul_faces(ideal: &SqfIdeal, sigma: VertexSet) -> Vec<VertexSet> {
    let gens = ideal.supports();
    sigma
        .subsets()
        .filter(|&tau| {
            let rest = sigma.difference(tau);
            gens.iter().any(|g| g.is_subset(rest))
        })
        .collect()
}

/// `β_{i,σ}(I)` for every `i`, as `(i, β)` pairs with `β > 0`.
pub fn koszul_multigraded_betti(
    ideal: &SqfIdeal,
    sigma: VertexSet,
    field: FieldSpec,
) -> Vec<(usize, u64)> {
    reduced_homology_of_faces(&upper_koszul_faces(ideal, sigma), field)
        .nonzero()
        .map(|(k, d)| ((k + 1) as usize, d as u64))
        .collect()
}

pub fn koszul_betti(ideal: &SqfIdeal, field: FieldSpec) -> Result<BettiTable, IdealError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let n = ideal.n();
    let mut table = BettiTable::new(n, field);
    for sigma in VertexSet::full(n).subsets() {
        for (i, b) in koszul_multigraded_betti(ideal, sigma, field) {
            table.add(i, sigma.len(), b);
        }
    }
    Ok(table)
}
