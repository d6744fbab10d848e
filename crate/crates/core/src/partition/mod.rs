//! Partitions, compositions and the elementary operations on Young diagrams.
//!
//! A [`Partition`] is stored without trailing zeros, so value equality is
//! sequence equality. The [`Ord`] implementation is the canonical term order
//! used for printing decompositions: smaller size first, and within one size
//! reverse lexicographic order, i.e. `[] < [1] < [2] < [1,1] < [3] < [2,1]`.

mod parse;
mod sequences;

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use parse::{parse_composition, parse_partition, ParseError};
pub use sequences::{
    hook_length_dimension, involution_count, one_box_pair_count, partition_count, sequence,
    SequenceKind,
};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// How two partitions are glued together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CombineMode {
    /// `λ + τ`: componentwise sum, i.e. inserting the columns of `τ`.
    Cols,
    /// `λ ∪ τ`: multiset union of the parts, i.e. inserting the rows of `τ`.
    Rows,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Returns `None` when the
    /// sequence is not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition { parts })
        } else {
            None
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ₁`, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn combine(&self, other: &Partition, mode: CombineMode) -> Partition {
        match mode {
            CombineMode::Cols => self.plus(other),
            CombineMode::Rows => self.union(other),
        }
    }

    /// `λ + τ`
    pub fn plus(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// `λ ∪ τ`
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Diagram intersection (componentwise minimum).
    pub fn intersection(&self, other: &Partition) -> Partition {
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Partition { parts }
    }

    /// Whether the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// `dp(λ)`: the number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        let mut count = 0;
        let mut prev = None;
        for &p in &self.parts {
            if prev != Some(p) {
                count += 1;
                prev = Some(p);
            }
        }
        count
    }

    /// The run-length form `[(value, multiplicity), ...]`, largest value first.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn is_rectangle(&self) -> bool {
        self.distinct_parts() == 1
    }

    /// `λ[n] = (n − |λ|, λ₁, λ₂, …)` as a composition.
    pub fn pad(&self, n: usize) -> Composition {
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(n as i64 - self.size() as i64);
        entries.extend(self.parts.iter().map(|&p| p as i64));
        Composition { entries }
    }

    /// Smallest `n` with `λ[n]` a partition: `|λ| + λ₁`.
    pub fn pad_threshold(&self) -> usize {
        self.size() + self.first_part()
    }

    /// `λ[n]` when it is a partition.
    pub fn at_level(&self, n: usize) -> Option<Partition> {
        if n < self.pad_threshold() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n - self.size());
        parts.extend_from_slice(&self.parts);
        Some(Partition::from_unsorted(parts))
    }

    /// Removes the first row: the inverse of [`Partition::at_level`].
    pub fn strip_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// All partitions obtained by adding one box, in canonical order.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.parts[i - 1] > self.part(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out.sort();
        out
    }

    /// All partitions obtained by removing one box, in canonical order.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.parts[i] > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts).expect("removing a corner keeps the order"));
            }
        }
        out.sort();
        out
    }

    /// Partitions different from `self` reachable by removing and then
    /// adding one box.
    pub fn move_box(&self) -> Vec<Partition> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for smaller in self.remove_box() {
            for moved in smaller.add_box() {
                if &moved != self && seen.insert(moved.clone()) {
                    out.push(moved);
                }
            }
        }
        out.sort();
        out
    }
}

/// `δ_n = (n, n−1, …, 1)`.
pub fn staircase(n: usize) -> Partition {
    Partition {
        parts: (1..=n).rev().collect(),
    }
}

/// Whether `|λ ∩ μ| = max(|λ|, |μ|) − 1` for distinct `λ`, `μ`.
pub fn differs_by_one_box(a: &Partition, b: &Partition) -> bool {
    if a == b {
        return false;
    }
    let max = a.size().max(b.size());
    max >= 1 && a.intersection(b).size() == max - 1
}

/// Whether `target` can be obtained from `source` by a finite sequence of
/// `+` and `∪` operations with nonempty partitions. Reflexive.
///
/// Adding a partition `τ` is the same as adding its columns one at a time,
/// and uniting with `τ` the same as inserting its rows one at a time, so the
/// search only needs single-column and single-row steps.
pub fn is_larger(target: &Partition, source: &Partition) -> bool {
    let (size, len, width) = (target.size(), target.len(), target.first_part());
    let fits = |p: &Partition| p.size() <= size && p.len() <= len && p.first_part() <= width;
    if !fits(source) {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(source.clone());
    queue.push_back(source.clone());
    while let Some(current) = queue.pop_front() {
        if &current == target {
            return true;
        }
        let room = size - current.size();
        let mut next = Vec::new();
        for a in 1..=len.min(room) {
            next.push(current.plus(&Partition { parts: vec![1; a] }));
        }
        for a in 1..=width.min(room) {
            next.push(current.union(&Partition { parts: vec![a] }));
        }
        for candidate in next {
            if fits(&candidate) && seen.insert(candidate.clone()) {
                queue.push_back(candidate);
            }
        }
    }
    false
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        // strip trailing ones, then decrement the last part > 1 and refill
        let mut ones = 0;
        while current.last() == Some(&1) {
            current.pop();
            ones += 1;
        }
        let Some(last) = current.last_mut() else {
            break;
        };
        *last -= 1;
        let bound = *last;
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(bound);
            current.push(take);
            rest -= take;
        }
    }
    out
}

/// All partitions of size at most `max`, in canonical order.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(enumerate_partitions).collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.parts.iter())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Partition::new(parts)
            .ok_or_else(|| serde::de::Error::custom("partition parts must be weakly decreasing"))
    }
}

/// Builds a [`Partition`] from literal parts, panicking if they are not
/// weakly decreasing.
#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("parts must be weakly decreasing")
    };
}

/// A finite integer sequence; the index of a Jacobi–Trudi determinant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    entries: Vec<i64>,
}

impl Composition {
    pub fn new(entries: Vec<i64>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The partition this sequence spells, if it already is one (trailing
    /// zeros allowed).
    pub fn as_partition(&self) -> Option<Partition> {
        if self.entries.iter().any(|&e| e < 0) {
            return None;
        }
        Partition::new(self.entries.iter().map(|&e| e as usize).collect())
    }

    pub fn is_partition(&self) -> bool {
        self.as_partition().is_some()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            entries: p.parts.iter().map(|&x| x as i64).collect(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.entries.iter())
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str("]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(partition![3, 1].conjugate(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![4, 4, 2, 2].conjugate(), partition![4, 4, 2, 2]);
    }

    #[test]
    fn conjugate_matches_column_counts() {
        // independent route: count boxes (i, j) with j < λ_i column by column
        for n in 0..=9 {
            for p in enumerate_partitions(n) {
                let mut cols = vec![0usize; p.first_part()];
                for &row in p.parts() {
                    for c in cols.iter_mut().take(row) {
                        *c += 1;
                    }
                }
                assert_eq!(p.conjugate().parts(), &cols[..]);
            }
        }
    }

    #[test]
    fn combine_examples() {
        let a = partition![4, 4, 2, 2];
        let b = partition![3, 2, 1];
        assert_eq!(a.combine(&b, CombineMode::Cols), partition![7, 6, 3, 2]);
        assert_eq!(
            a.combine(&b, CombineMode::Rows),
            partition![4, 4, 3, 2, 2, 2, 1]
        );
        for mode in [CombineMode::Cols, CombineMode::Rows] {
            assert_eq!(a.combine(&Partition::empty(), mode), a);
        }
    }

    #[test]
    fn distinct_parts_examples() {
        assert_eq!(partition![3, 2, 1].distinct_parts(), 3);
        assert_eq!(partition![2, 2].distinct_parts(), 1);
        assert_eq!(Partition::empty().distinct_parts(), 0);
    }

    #[test]
    fn pad_examples() {
        let p = partition![2, 1];
        assert_eq!(p.pad(7).entries(), &[4, 2, 1]);
        assert!(p.pad(7).is_partition());
        assert_eq!(p.pad(4).entries(), &[1, 2, 1]);
        assert!(!p.pad(4).is_partition());
        assert_eq!(Partition::empty().pad(3).entries(), &[3]);
        assert_eq!(p.at_level(7), Some(partition![4, 2, 1]));
        assert_eq!(p.at_level(5), Some(partition![2, 2, 1]));
        assert_eq!(p.at_level(4), None);
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(3), partition![3, 2, 1]);
        assert_eq!(staircase(0), Partition::empty());
        assert_eq!(staircase(1), partition![1]);
    }

    #[test]
    fn one_box_examples() {
        assert!(differs_by_one_box(&partition![2], &partition![1, 1]));
        assert!(!differs_by_one_box(&partition![3], &partition![1, 1, 1]));
        assert!(!differs_by_one_box(&partition![2, 1], &partition![2, 1]));
        assert!(differs_by_one_box(&Partition::empty(), &partition![1]));
        assert!(differs_by_one_box(&partition![2, 1], &partition![2]));
    }

    #[test]
    fn larger_examples() {
        assert!(is_larger(&partition![4, 2, 1, 1], &partition![3, 2, 1]));
        assert!(is_larger(&partition![4, 3, 1], &partition![3, 2, 1]));
        assert!(!is_larger(&partition![2, 2], &partition![3]));
        assert!(is_larger(&partition![3, 2, 1], &partition![3, 2, 1]));
        // every nonempty partition is larger than (1) ...
        assert!(is_larger(&partition![3, 3, 1], &partition![1]));
        // ... and than the empty partition
        assert!(is_larger(&partition![2], &Partition::empty()));
        // (2,2) = (1,1) + (1,1), but (2,2) is not reachable from (2,1)
        assert!(is_larger(&partition![2, 2], &partition![1, 1]));
        assert!(!is_larger(&partition![2, 2], &partition![2, 1]));
    }

    #[test]
    fn enumerate_examples() {
        let four: Vec<_> = enumerate_partitions(4);
        assert_eq!(
            four,
            vec![
                partition![4],
                partition![3, 1],
                partition![2, 2],
                partition![2, 1, 1],
                partition![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(13).len(), 101);
    }

    #[test]
    fn enumeration_is_descending_lex_and_canonical() {
        for n in 0..=12 {
            let ps = enumerate_partitions(n);
            for w in ps.windows(2) {
                assert!(w[0].parts() > w[1].parts());
                assert!(w[0] < w[1]);
            }
            assert!(ps.iter().all(|p| p.size() == n));
        }
    }

    #[test]
    fn canonical_order() {
        let mut ps = vec![
            partition![2, 1],
            partition![1],
            partition![1, 1],
            Partition::empty(),
            partition![2],
        ];
        ps.sort();
        assert_eq!(
            ps,
            vec![
                Partition::empty(),
                partition![1],
                partition![2],
                partition![1, 1],
                partition![2, 1]
            ]
        );
    }

    #[test]
    fn box_moves() {
        let p = partition![2, 1];
        assert_eq!(
            p.add_box(),
            vec![partition![3, 1], partition![2, 2], partition![2, 1, 1]]
        );
        assert_eq!(p.remove_box(), vec![partition![2], partition![1, 1]]);
        assert_eq!(p.move_box(), vec![partition![3], partition![1, 1, 1]]);
        assert_eq!(Partition::empty().add_box(), vec![partition![1]]);
        assert!(Partition::empty().remove_box().is_empty());
    }

    #[test]
    fn new_strips_trailing_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]), Some(partition![2, 1]));
        assert_eq!(Partition::new(vec![1, 2]), None);
    }
}
