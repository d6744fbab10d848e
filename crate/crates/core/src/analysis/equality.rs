use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::{partitions_up_to, Partition};
use crate::products::{outer_product, Decomposition, Kernel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Outer,
    Reduced,
}

/// Distinct unordered factor pairs sharing one product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub pairs: Vec<(Partition, Partition)>,
    pub product: Decomposition,
}

/// Groups every unordered pair `{λ, μ}` with `|λ|, |μ| ≤ max_size` by its
/// product and returns the groups holding more than one pair.
pub fn equality_scan(
    kernel: &Kernel,
    kind: ProductKind,
    max_size: usize,
) -> Result<Vec<Collision>> {
    let shapes = partitions_up_to(max_size);
    let pairs: Vec<(Partition, Partition)> = shapes
        .iter()
        .enumerate()
        .flat_map(|(i, a)| shapes[i..].iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let products: Vec<Decomposition> = pairs
        .par_iter()
        .map(|(a, b)| match kind {
            ProductKind::Outer => Ok(outer_product(a, b)),
            ProductKind::Reduced => kernel.reduced_product(a, b),
        })
        .collect::<Result<_>>()?;

    let mut groups: HashMap<Decomposition, Vec<(Partition, Partition)>> = HashMap::new();
    for (pair, product) in pairs.into_iter().zip(products) {
        groups.entry(product).or_default().push(pair);
    }
    let mut collisions: Vec<Collision> = groups
        .into_iter()
        .filter(|(_, pairs)| pairs.len() > 1)
        .map(|(product, mut pairs)| {
            pairs.sort();
            Collision { pairs, product }
        })
        .collect();
    collisions.sort_by(|a, b| a.pairs.cmp(&b.pairs));
    Ok(collisions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_collisions_at_three() {
        let k = Kernel::new();
        assert!(equality_scan(&k, ProductKind::Reduced, 3)
            .unwrap()
            .is_empty());
        assert!(equality_scan(&k, ProductKind::Outer, 3).unwrap().is_empty());
    }

    #[test]
    fn ordinary_kronecker_would_collide() {
        // sanity check of the grouping: [λ][μ] = [λᶜ][μᶜ] for the ordinary product
        let k = Kernel::new();
        let a = crate::partition![2, 1, 1];
        let b = crate::partition![3, 1];
        assert_eq!(
            k.kron_product(&a, &b).unwrap(),
            k.kron_product(&a.conjugate(), &b.conjugate()).unwrap()
        );
    }
}
