//! Probe of the saturation conjecture for reduced Kronecker coefficients:
//! `ḡ(kλ, kμ, kν) ≠ 0` for some `k ≥ 1` should force `ḡ(λ, μ, ν) ≠ 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::products::{stable_level, Kernel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub k: usize,
    /// `ḡ(kλ, kμ, kν)`
    pub scaled: u64,
    /// `ḡ(λ, μ, ν)`
    pub base: u64,
}

impl SaturationReport {
    /// The scaled coefficient is nonzero while the base one vanishes.
    pub fn counterexample(&self) -> bool {
        self.scaled != 0 && self.base == 0
    }
}

/// `ḡ` is symmetric in its three arguments, so it is evaluated with the two
/// factors of smallest stable level.
fn symmetric_reduced(kernel: &Kernel, a: &Partition, b: &Partition, c: &Partition) -> Result<u64> {
    let orders = [(a, b, c), (a, c, b), (b, c, a)];
    let (x, y, z) = orders
        .into_iter()
        .min_by_key(|(x, y, _)| stable_level(x, y))
        .expect("three orders");
    kernel.reduced_coeff(x, y, z)
}

pub fn saturation_probe(
    kernel: &Kernel,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    k: usize,
) -> Result<SaturationReport> {
    if k == 0 {
        return Err(Error::Precondition(
            "the scaling factor must be positive".into(),
        ));
    }
    let scaled = symmetric_reduced(kernel, &lambda.scale(k), &mu.scale(k), &nu.scale(k))?;
    let base = symmetric_reduced(kernel, lambda, mu, nu)?;
    Ok(SaturationReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        k,
        scaled,
        base,
    })
}
