//! Statistics of decompositions and checkers for the classification
//! results about reduced Kronecker products.

mod bounds;
mod census;
mod classify;
mod equality;
mod monotone;
mod saturation;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bounds::{bound_formulas, lower_bounds, outer_bound_check, outer_thresholds, BoundsReport};
pub use census::{
    dd_pair_count, pair_census_staircase, printed_census_entry, CensusLabel, PairCensus,
};
pub use classify::{classify_product, CaseTag, ClassificationCase};
pub use equality::{equality_scan, Collision, ProductKind};
pub use monotone::{monotonicity_check, random_witness, MonotonicityKind, Triple, Witness};
pub use saturation::{saturation_probe, SaturationReport};

use crate::partition::differs_by_one_box;
use crate::products::Decomposition;

/// `(components, constituents)` of a character.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CcType {
    pub components: u64,
    pub constituents: u64,
}

impl CcType {
    pub const fn new(components: u64, constituents: u64) -> Self {
        CcType {
            components,
            constituents,
        }
    }

    /// Coordinatewise `≥`.
    pub fn dominates(&self, other: &CcType) -> bool {
        self.components >= other.components && self.constituents >= other.constituents
    }
}

impl fmt::Display for CcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.components, self.constituents)
    }
}

pub fn cc_type(d: &Decomposition) -> CcType {
    CcType::new(d.len() as u64, d.constituents())
}

/// Unordered pairs of distinct components whose partitions differ by one box.
pub fn one_box_pairs(d: &Decomposition) -> u64 {
    let parts: Vec<_> = d.partitions().collect();
    let mut count = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if differs_by_one_box(parts[i], parts[j]) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::products::Kernel;

    #[test]
    fn cc_type_examples() {
        let k = Kernel::new();
        let cc = |a, b| cc_type(&k.reduced_product(&a, &b).unwrap());
        assert_eq!(cc(partition![2], partition![2]), CcType::new(10, 12));
        assert_eq!(cc(partition![3], partition![1, 1]), CcType::new(11, 13));
        assert_eq!(cc(partition![2], partition![1, 1, 1]), CcType::new(10, 13));
        assert_eq!(cc(partition![1, 1], partition![1, 1]), CcType::new(10, 12));
        assert_eq!(cc_type(&Decomposition::new()), CcType::new(0, 0));
    }

    #[test]
    fn one_box_pair_examples() {
        let k = Kernel::new();
        // components [], [1], [2], [1,1]: pairs ([],[1]), ([1],[2]), ([1],[1,1]), ([2],[1,1])
        let d = k.reduced_product(&partition![1], &partition![1]).unwrap();
        assert_eq!(one_box_pairs(&d), 4);
        let d = k
            .reduced_product(&partition![1], &partition![2, 1])
            .unwrap();
        assert!(one_box_pairs(&d) >= 14);
        assert_eq!(
            one_box_pairs(&Decomposition::irreducible(partition![3, 1])),
            0
        );
    }
}
