//! Ordinary Kronecker, outer and reduced Kronecker products.
//!
//! Kronecker coefficients come straight from the character formula
//! `g(λ,μ,ν) = (1/n!) ∑_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`, accumulated in checked
//! 128-bit integers and divided exactly by `n!` at the end. Reduced
//! coefficients are read off at the stable level `|λ|+|μ|+λ₁+μ₁`.

mod closed;
mod decomposition;
mod lr;
mod straighten;

use std::path::PathBuf;
use std::sync::Arc;

use rayon::prelude::*;

pub use closed::{hook_kron_closed, star_one_closed};
pub use decomposition::Decomposition;
pub use lr::{lr_coeff, outer_product};
pub use straighten::{
    expand_at_level, straighten, to_signed, SignedDecomposition, StraightenResult,
};

use crate::characters::{factorial, CharacterStore, CharacterTable, DEFAULT_TABLE_LIMIT};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default ceiling on the level `n` at which Kronecker products are formed.
pub const DEFAULT_LEVEL_LIMIT: usize = 20;

/// `|λ| + |μ| + λ₁ + μ₁`: the level from which the coefficients of
/// `[λ[n]][μ[n]]` no longer change.
pub fn stable_level(lambda: &Partition, mu: &Partition) -> usize {
    lambda.size() + mu.size() + lambda.first_part() + mu.first_part()
}

/// Entry point for every product that needs character values.
#[derive(Debug)]
pub struct Kernel {
    store: CharacterStore,
    level_limit: usize,
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel::new()
    }
}

impl Kernel {
    pub fn new() -> Self {
        Kernel {
            store: CharacterStore::new(),
            level_limit: DEFAULT_LEVEL_LIMIT,
        }
    }

    /// Sets the product ceiling; the table ceiling follows when it is higher.
    pub fn with_max_level(mut self, limit: usize) -> Self {
        self.level_limit = limit;
        let table_limit = limit.max(DEFAULT_TABLE_LIMIT);
        self.store = self.rebuild_store(table_limit, self.store.cache_dir().map(PathBuf::from));
        self
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.store = self.rebuild_store(self.store.limit(), Some(dir.into()));
        self
    }

    fn rebuild_store(&self, limit: usize, dir: Option<PathBuf>) -> CharacterStore {
        let store = CharacterStore::new().with_limit(limit);
        match dir {
            Some(d) => store.with_cache_dir(d),
            None => store,
        }
    }

    pub fn store(&self) -> &CharacterStore {
        &self.store
    }

    pub fn max_level(&self) -> usize {
        self.level_limit
    }

    fn table_for(&self, n: usize) -> Result<Arc<CharacterTable>> {
        if n > self.level_limit {
            return Err(Error::ResourceLimit {
                level: n,
                limit: self.level_limit,
            });
        }
        self.store.table(n)
    }

    /// `|C_ρ| χ^λ(ρ) χ^μ(ρ)` for every class `ρ`.
    fn class_weights(
        table: &CharacterTable,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<Vec<i128>> {
        let a = table.index_of(lambda).expect("λ indexes the table");
        let b = table.index_of(mu).expect("μ indexes the table");
        table
            .classes()
            .iter()
            .enumerate()
            .map(|(col, class)| {
                let chars = (table.value(a, col) as i128) * (table.value(b, col) as i128);
                (class.class_size() as i128)
                    .checked_mul(chars)
                    .ok_or(Error::Overflow("weighting a class"))
            })
            .collect()
    }

    fn coefficient_from_weights(
        table: &CharacterTable,
        weights: &[i128],
        row: usize,
    ) -> Result<u64> {
        let mut sum: i128 = 0;
        for (col, w) in weights.iter().enumerate() {
            let term = w
                .checked_mul(table.value(row, col) as i128)
                .ok_or(Error::Overflow("summing a character product"))?;
            sum = sum
                .checked_add(term)
                .ok_or(Error::Overflow("summing a character product"))?;
        }
        let order = factorial(table.level()) as i128;
        if sum % order != 0 || sum < 0 {
            return Err(Error::NonIntegral { sum, order });
        }
        Ok((sum / order) as u64)
    }

    fn check_sizes(parts: &[&Partition]) -> Result<usize> {
        let n = parts[0].size();
        if parts.iter().any(|p| p.size() != n) {
            let list: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            return Err(Error::SizeMismatch {
                context: format!(
                    "Kronecker product needs equal sizes, got {}",
                    list.join(", ")
                ),
            });
        }
        Ok(n)
    }

    /// `g(λ, μ, ν)`.
    pub fn kron_coeff(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let n = Self::check_sizes(&[lambda, mu, nu])?;
        let table = self.table_for(n)?;
        let weights = Self::class_weights(&table, lambda, mu)?;
        let row = table.index_of(nu).expect("ν indexes the table");
        Self::coefficient_from_weights(&table, &weights, row)
    }

    /// `[λ][μ] = ∑_ν g(λ,μ,ν) [ν]`. The coefficients are evaluated in
    /// parallel over `ν`.
    pub fn kron_product(&self, lambda: &Partition, mu: &Partition) -> Result<Decomposition> {
        let n = Self::check_sizes(&[lambda, mu])?;
        let table = self.table_for(n)?;
        let weights = Self::class_weights(&table, lambda, mu)?;
        let coeffs: Vec<u64> = (0..table.dim())
            .into_par_iter()
            .map(|row| Self::coefficient_from_weights(&table, &weights, row))
            .collect::<Result<_>>()?;
        Ok(table.partitions().iter().cloned().zip(coeffs).collect())
    }

    fn padded(p: &Partition, n: usize) -> Result<Partition> {
        p.at_level(n).ok_or_else(|| Error::BelowThreshold {
            partition: p.clone(),
            level: n,
            threshold: p.pad_threshold(),
        })
    }

    /// `[λ[n]][μ[n]]` as a decomposition over partitions of `n`.
    pub fn product_at_level(
        &self,
        lambda: &Partition,
        mu: &Partition,
        n: usize,
    ) -> Result<Decomposition> {
        let a = Self::padded(lambda, n)?;
        let b = Self::padded(mu, n)?;
        self.kron_product(&a, &b)
    }

    /// `[λ[n]][μ[n]]` for any `n ≥ 0`, with both factors straightened first;
    /// a vanishing factor gives the zero character.
    pub fn signed_product_at_level(
        &self,
        lambda: &Partition,
        mu: &Partition,
        n: usize,
    ) -> Result<SignedDecomposition> {
        let (
            StraightenResult::Signed {
                sign: s1,
                partition: a,
            },
            StraightenResult::Signed {
                sign: s2,
                partition: b,
            },
        ) = (straighten(&lambda.pad(n)), straighten(&mu.pad(n)))
        else {
            return Ok(SignedDecomposition::new());
        };
        let product = self.kron_product(&a, &b)?;
        Ok(product
            .iter()
            .map(|(p, m)| (p.clone(), s1 * s2 * m as i64))
            .collect())
    }

    /// `ḡ(λ, μ, ν)`, evaluated as `g(λ[N], μ[N], ν[N])` at
    /// `N = stable_level(λ, μ)`; zero when `ν[N]` is not a partition.
    pub fn reduced_coeff(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
        let level = stable_level(lambda, mu);
        let Some(c) = nu.at_level(level) else {
            return Ok(0);
        };
        let a = Self::padded(lambda, level)?;
        let b = Self::padded(mu, level)?;
        self.kron_coeff(&a, &b, &c)
    }

    /// `[λ]• ⋆ [μ]• = ∑_ν ḡ(λ,μ,ν) [ν]•`.
    pub fn reduced_product(&self, lambda: &Partition, mu: &Partition) -> Result<Decomposition> {
        let level = stable_level(lambda, mu);
        Ok(self
            .product_at_level(lambda, mu, level)?
            .map_partitions(Partition::strip_first_row))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::{enumerate_partitions, partitions_up_to};

    /// Oracle: the character formula evaluated with rationals over a
    /// common denominator, class by class from centralizer orders.
    fn character_sum(kernel: &Kernel, l: &Partition, m: &Partition, n: &Partition) -> u64 {
        let t = kernel.store().table(l.size()).unwrap();
        let mut num: i128 = 0;
        let order = factorial(l.size()) as i128;
        for c in t.classes() {
            let z = c.centralizer() as i128;
            let x = |p: &Partition| t.get(p, c.cycles()).unwrap() as i128;
            num += (order / z) * x(l) * x(m) * x(n);
        }
        assert_eq!(num % order, 0);
        (num / order) as u64
    }

    #[test]
    fn kron_coeff_examples() {
        let k = Kernel::new();
        assert_eq!(
            k.kron_coeff(&partition![2, 1, 1], &partition![2, 2], &partition![3, 1])
                .unwrap(),
            1
        );
        for n in 1..=7 {
            for l in enumerate_partitions(n) {
                assert_eq!(k.kron_coeff(&l, &partition![n], &l).unwrap(), 1);
            }
        }
        let p = partition![2, 2];
        assert_eq!(
            k.kron_coeff(&p, &p, &p).unwrap(),
            character_sum(&k, &p, &p, &p)
        );
        assert_eq!(k.kron_coeff(&p, &p, &p).unwrap(), 1);
        assert!(matches!(
            k.kron_coeff(&partition![2], &partition![1], &partition![1]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn kron_product_examples() {
        let k = Kernel::new();
        assert_eq!(
            k.kron_product(&partition![2, 1, 1], &partition![2, 2])
                .unwrap()
                .to_string(),
            "[3,1]+[2,1,1]"
        );
        assert_eq!(
            k.kron_product(&partition![4, 1, 1], &partition![4, 2])
                .unwrap()
                .to_string(),
            "[5,1]+[4,2]+2[4,1,1]+[3,3]+2[3,2,1]+[3,1,1,1]+[2,2,1,1]"
        );
        for l in enumerate_partitions(5) {
            assert_eq!(
                k.kron_product(&partition![5], &l).unwrap(),
                Decomposition::irreducible(l.clone())
            );
        }
    }

    #[test]
    fn product_matches_oracle_through_six() {
        let k = Kernel::new();
        for n in 0..=6 {
            let ps = enumerate_partitions(n);
            for a in &ps {
                for b in &ps {
                    let d = k.kron_product(a, b).unwrap();
                    for c in &ps {
                        assert_eq!(d.get(c), character_sum(&k, a, b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn level_ladder() {
        let k = Kernel::new();
        let (l, m) = (partition![1, 1], partition![2]);
        assert_eq!(
            k.product_at_level(&l, &m, 4).unwrap().to_string(),
            "[3,1]+[2,1,1]"
        );
        assert_eq!(
            k.product_at_level(&l, &m, 7).unwrap().to_string(),
            "[6,1]+[5,2]+2[5,1,1]+[4,3]+2[4,2,1]+[4,1,1,1]+[3,3,1]+[3,2,1,1]"
        );
        let six = k.product_at_level(&l, &m, 6).unwrap();
        assert_eq!(
            six.to_string(),
            "[5,1]+[4,2]+2[4,1,1]+[3,3]+2[3,2,1]+[3,1,1,1]+[2,2,1,1]"
        );
        assert_eq!(six.get(&partition![3, 1]), 0);
        assert!(matches!(
            k.product_at_level(&l, &m, 3),
            Err(Error::BelowThreshold { threshold: 4, .. })
        ));
    }

    #[test]
    fn stable_level_examples() {
        assert_eq!(stable_level(&partition![1, 1], &partition![2]), 7);
        assert_eq!(stable_level(&partition![], &partition![]), 0);
        assert_eq!(stable_level(&partition![2], &partition![2]), 8);
    }

    #[test]
    fn reduced_examples() {
        let k = Kernel::new();
        assert_eq!(
            k.reduced_coeff(&partition![1, 1], &partition![2], &partition![1, 1])
                .unwrap(),
            2
        );
        assert_eq!(
            k.reduced_coeff(&partition![2], &partition![2], &partition![2])
                .unwrap(),
            2
        );
        assert_eq!(
            k.reduced_coeff(&partition![1], &partition![1], &partition![2])
                .unwrap(),
            1
        );
        assert_eq!(
            k.reduced_product(&partition![1, 1], &partition![2])
                .unwrap()
                .to_string(),
            "[1]+[2]+2[1,1]+[3]+2[2,1]+[1,1,1]+[3,1]+[2,1,1]"
        );
        assert_eq!(
            k.reduced_product(&partition![2], &partition![2])
                .unwrap()
                .to_string(),
            "[]+[1]+2[2]+[1,1]+[3]+2[2,1]+[1,1,1]+[4]+[3,1]+[2,2]"
        );
        for m in partitions_up_to(4) {
            assert_eq!(
                k.reduced_product(&partition![], &m).unwrap(),
                Decomposition::irreducible(m.clone())
            );
        }
    }

    #[test]
    fn closed_forms_agree() {
        let k = Kernel::new();
        for l in partitions_up_to(6) {
            assert_eq!(
                star_one_closed(&l),
                k.reduced_product(&partition![1], &l).unwrap(),
                "λ = {l}"
            );
        }
        for n in 2..=7 {
            for l in enumerate_partitions(n) {
                let hook = partition![n - 1, 1];
                assert_eq!(
                    hook_kron_closed(&l).unwrap(),
                    k.kron_product(&hook, &l).unwrap(),
                    "λ = {l}"
                );
            }
        }
    }

    #[test]
    fn resource_ceiling() {
        let k = Kernel::new().with_max_level(6);
        assert!(matches!(
            k.reduced_product(&partition![2], &partition![2]),
            Err(Error::ResourceLimit { level: 8, limit: 6 })
        ));
    }

    #[test]
    fn signed_product_straightens_factors() {
        let k = Kernel::new();
        // (1,1)[3] = (1,1,1) is a partition, (2)[3] = (1,2) -> −(1,1)... vanishes? (1,2): b=(2,2) -> 0
        assert!(k
            .signed_product_at_level(&partition![1, 1], &partition![2], 3)
            .unwrap()
            .is_empty());
        let at5 = k
            .signed_product_at_level(&partition![1, 1], &partition![2], 5)
            .unwrap();
        assert_eq!(
            at5,
            to_signed(
                &k.product_at_level(&partition![1, 1], &partition![2], 5)
                    .unwrap()
            )
        );
    }
}
