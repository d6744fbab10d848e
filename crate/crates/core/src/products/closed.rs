//! Combinatorial closed forms for products with the smallest factors.

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::Decomposition;

/// `[1]• ⋆ [λ]•`: `dp(λ)·[λ]` plus every other partition obtained by adding
/// a box, deleting a box, or deleting and then adding a box, once each.
pub fn star_one_closed(shape: &Partition) -> Decomposition {
    let mut d = Decomposition::new();
    d.add(shape.clone(), shape.distinct_parts() as u64);
    for p in shape
        .add_box()
        .into_iter()
        .chain(shape.remove_box())
        .chain(shape.move_box())
    {
        d.add(p, 1);
    }
    d
}

/// `[n−1,1][λ]` for `λ ⊢ n ≥ 2`: `(dp(λ)−1)·[λ]` plus every other partition
/// obtained by removing and then adding a box.
pub fn hook_kron_closed(shape: &Partition) -> Result<Decomposition> {
    if shape.size() < 2 {
        return Err(Error::Precondition(format!(
            "[n-1,1][λ] needs |λ| >= 2, got {shape}"
        )));
    }
    let mut d = Decomposition::new();
    d.add(shape.clone(), shape.distinct_parts() as u64 - 1);
    for p in shape.move_box() {
        d.add(p, 1);
    }
    Ok(d)
}
