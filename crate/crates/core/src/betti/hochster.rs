use crate::complexes::stanley_reisner_complex;
use crate::homology::{reduced_homology_of_faces, FieldSpec};
use crate::ideals::{IdealError, SqfIdeal};
use crate::vertex_set::VertexSet;

use super::BettiTable;

/// `β_{i,j}(I) = Σ_{|W|=j} dim H̃_{j-i-2}(Δ_W)` with `Δ` the Stanley–Reisner
/// complex of `I`.
pub fn hochster_betti(ideal: &SqfIdeal, field: FieldSpec) -> Result<BettiTable, IdealError> {
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let n = ideal.n();
    let mut table = BettiTable::new(n, field);
    if ideal.contains(crate::ideals::SqfMonomial::ONE) {
        // the unit ideal is free of rank one
        table.add(0, 0, 1);
        return Ok(table);
    }
    let faces = stanley_reisner_complex(ideal).faces();
    let mut restricted: Vec<VertexSet> = Vec::with_capacity(faces.len());
    for w in VertexSet::full(n).subsets() {
        restricted.clear();
        restricted.extend(faces.iter().copied().filter(|f| f.is_subset(w)));
        let j = w.len() as isize;
        for (k, dim) in reduced_homology_of_faces(&restricted, field).nonzero() {
            let i = j - k - 2;
            if i >= 0 {
                table.add(i as usize, j as usize, dim as u64);
            }
        }
    }
    Ok(table)
}
