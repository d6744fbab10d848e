//! Jacobi–Trudi straightening of Schur functions indexed by compositions.

use std::collections::BTreeMap;
use std::fmt;

use crate::partition::{Composition, Partition};

use super::Decomposition;

/// `s_α = 0` or `s_α = ±s_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StraightenResult {
    Zero,
    Signed { sign: i64, partition: Partition },
}

impl fmt::Display for StraightenResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StraightenResult::Zero => f.write_str("0"),
            StraightenResult::Signed { sign, partition } if *sign < 0 => write!(f, "-{partition}"),
            StraightenResult::Signed { partition, .. } => write!(f, "{partition}"),
        }
    }
}

/// Evaluates `det(h_{α_i − i + j})` as `0` or `±s_λ`.
///
/// With `b_i = α_i + (k − i)` the determinant vanishes when some `b_i` is
/// negative or two coincide; otherwise sorting `b` decreasingly gives the
/// sign, and subtracting the staircase offsets gives `λ`.
pub fn straighten(alpha: &Composition) -> StraightenResult {
    let k = alpha.len() as i64;
    let shifted: Vec<i64> = alpha
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| a + (k - 1 - i as i64))
        .collect();
    if shifted.iter().any(|&b| b < 0) {
        return StraightenResult::Zero;
    }
    let mut inversions = 0usize;
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return StraightenResult::Zero,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let parts = sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (k - 1 - i as i64)) as usize)
        .collect();
    StraightenResult::Signed {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        partition: Partition::new(parts).expect("sorted beta set gives a partition"),
    }
}

/// A virtual character: integer multiplicities of either sign.
pub type SignedDecomposition = BTreeMap<Partition, i64>;

pub fn to_signed(d: &Decomposition) -> SignedDecomposition {
    d.iter().map(|(p, m)| (p.clone(), m as i64)).collect()
}

/// `∑_ν c_ν [ν[n]]` with every `ν[n]` straightened, for a stable expansion
/// `∑_ν c_ν [ν]•`.
pub fn expand_at_level(reduced: &Decomposition, n: usize) -> SignedDecomposition {
    let mut out = SignedDecomposition::new();
    for (nu, mult) in reduced.iter() {
        if let StraightenResult::Signed { sign, partition } = straighten(&nu.pad(n)) {
            *out.entry(partition).or_insert(0) += sign * mult as i64;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}
