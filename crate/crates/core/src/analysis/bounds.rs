use serde::{Deserialize, Serialize};

use super::{cc_type, one_box_pairs};
use crate::error::{Error, Result};
use crate::partition::{sequence, Partition, SequenceKind};
use crate::products::{outer_product, Kernel};

/// Lower bounds for `[λ]• ⋆ [μ]•` next to the values actually observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// `dp(λ)` after ordering the factors so that `dp(λ) ≥ dp(μ)`.
    pub n: usize,
    /// `dp(μ)`
    pub m: usize,
    pub component_lb: u64,
    pub constituent_lb: u64,
    pub pair_lb: u64,
    /// `(components, constituents, one-box pairs)` of the product.
    pub actual: (u64, u64, u64),
}

impl BoundsReport {
    pub fn holds(&self) -> bool {
        self.actual.0 >= self.component_lb
            && self.actual.1 >= self.constituent_lb
            && self.actual.2 >= self.pair_lb
    }
}

/// `(n²+1+max(p_{m+1}, n+1), n²+n+max(f_{m+1}, n+1),
/// n³+n+1+max(g_{m+1}, n(n+1)/2))`.
pub fn bound_formulas(n: usize, m: usize) -> (u64, u64, u64) {
    let n = n as u64;
    let components = n * n + 1 + sequence(SequenceKind::P, m + 1).max(n + 1);
    let constituents = n * n + n + sequence(SequenceKind::F, m + 1).max(n + 1);
    let pairs = n * n * n + n + 1 + sequence(SequenceKind::G, m + 1).max(n * (n + 1) / 2);
    (components, constituents, pairs)
}

pub fn lower_bounds(kernel: &Kernel, lambda: &Partition, mu: &Partition) -> Result<BoundsReport> {
    if lambda.is_empty() || mu.is_empty() {
        return Err(Error::Precondition(
            "lower bounds need both factors nonempty".into(),
        ));
    }
    let (big, small) = if lambda.distinct_parts() >= mu.distinct_parts() {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let (n, m) = (big.distinct_parts(), small.distinct_parts());
    let (component_lb, constituent_lb, pair_lb) = bound_formulas(n, m);
    let product = kernel.reduced_product(big, small)?;
    let cc = cc_type(&product);
    Ok(BoundsReport {
        n,
        m,
        component_lb,
        constituent_lb,
        pair_lb,
        actual: (cc.components, cc.constituents, one_box_pairs(&product)),
    })
}

/// `(p_{n+1}, f_{n+1}, g_{n+1})`
pub fn outer_thresholds(n: usize) -> (u64, u64, u64) {
    (
        sequence(SequenceKind::P, n + 1),
        sequence(SequenceKind::F, n + 1),
        sequence(SequenceKind::G, n + 1),
    )
}

/// Whether `[α] ⊗ [β]` with `dp(α) ≥ dp(β) = n ≥ 1` has cc-type at least
/// `(p_{n+1}, f_{n+1})` and at least `g_{n+1}` one-box pairs.
pub fn outer_bound_check(alpha: &Partition, beta: &Partition) -> Result<bool> {
    let n = beta.distinct_parts();
    if n == 0 || alpha.distinct_parts() < n {
        return Err(Error::Precondition(format!(
            "need dp(α) >= dp(β) >= 1, got α = {alpha}, β = {beta}"
        )));
    }
    let (p, f, g) = outer_thresholds(n);
    let product = outer_product(alpha, beta);
    let cc = cc_type(&product);
    Ok(cc.components >= p && cc.constituents >= f && one_box_pairs(&product) >= g)
}
