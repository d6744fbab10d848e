//! One-box pairs among the components of `[1]• ⋆ [δ_n]•`, by derivation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{differs_by_one_box, staircase, Partition};

/// How a component of `[1]• ⋆ [δ_n]•` arises from `δ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CensusLabel {
    /// `δ_n` itself.
    A,
    /// A box added.
    B,
    /// A box deleted.
    C,
    /// A box deleted, then a different one added.
    D,
}

impl fmt::Display for CensusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CensusLabel::A => "a",
            CensusLabel::B => "b",
            CensusLabel::C => "c",
            CensusLabel::D => "d",
        };
        f.write_str(s)
    }
}

pub const ALL_LABELS: [CensusLabel; 4] = [
    CensusLabel::A,
    CensusLabel::B,
    CensusLabel::C,
    CensusLabel::D,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCensus {
    pub n: usize,
    /// Keyed by `(x, y)` with `x ≤ y`; every one of the ten types is present.
    pub counts: BTreeMap<(CensusLabel, CensusLabel), u64>,
}

impl PairCensus {
    pub fn get(&self, x: CensusLabel, y: CensusLabel) -> u64 {
        let key = if x <= y { (x, y) } else { (y, x) };
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn total_excluding_bb(&self) -> u64 {
        self.counts
            .iter()
            .filter(|(k, _)| **k != (CensusLabel::B, CensusLabel::B))
            .map(|(_, v)| v)
            .sum()
    }

    pub fn pair_types() -> impl Iterator<Item = (CensusLabel, CensusLabel)> {
        ALL_LABELS.into_iter().flat_map(|x| {
            ALL_LABELS
                .into_iter()
                .filter(move |&y| y >= x)
                .map(move |y| (x, y))
        })
    }
}

/// Brute-force count of one-box pairs, bucketed by the labels of the two
/// components.
pub fn pair_census_staircase(n: usize) -> PairCensus {
    let delta = staircase(n);
    let mut labelled: Vec<(Partition, CensusLabel)> = vec![(delta.clone(), CensusLabel::A)];
    labelled.extend(delta.add_box().into_iter().map(|p| (p, CensusLabel::B)));
    labelled.extend(delta.remove_box().into_iter().map(|p| (p, CensusLabel::C)));
    labelled.extend(delta.move_box().into_iter().map(|p| (p, CensusLabel::D)));

    let mut counts: BTreeMap<_, u64> = PairCensus::pair_types().map(|k| (k, 0)).collect();
    for i in 0..labelled.len() {
        for j in i + 1..labelled.len() {
            let (p, x) = &labelled[i];
            let (q, y) = &labelled[j];
            if differs_by_one_box(p, q) {
                let key = if x <= y { (*x, *y) } else { (*y, *x) };
                *counts.get_mut(&key).expect("all types present") += 1;
            }
        }
    }
    PairCensus { n, counts }
}

/// The closed formula for each pair type. Signed because the `(d,d)` entry
/// `n(n−1)(n−5/2)` is negative at `n = 2`.
pub fn printed_census_entry(n: usize, x: CensusLabel, y: CensusLabel) -> i64 {
    use CensusLabel::*;
    let n = n as i64;
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    match (x, y) {
        (A, A) => 0,
        (A, B) => n + 1,
        (A, C) => n,
        (A, D) => n * (n - 1),
        (B, B) => n * (n + 1) / 2,
        (B, C) => 0,
        (B, D) => n * (n - 1),
        (C, C) => n * (n - 1) / 2,
        (C, D) => n * (n - 1),
        (D, D) => n * (n - 1) * (2 * n - 5) / 2,
        _ => unreachable!("labels are ordered"),
    }
}

/// The `(d,d)` count found by brute force: pairs sharing the deleted box,
/// plus pairs sharing the added box, `(n−1)(n−2)(2n−1)/2`.
pub fn dd_pair_count(n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let n = n as u64;
    (n - 1) * (n - 2) * (2 * n - 1) / 2
}
