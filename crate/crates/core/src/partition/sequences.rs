//! The counting sequences `p_n`, `f_n` and `g_n`.

use super::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Number of partitions of `n`.
    P,
    /// Number of standard Young tableaux with `n` boxes.
    F,
    /// Number of unordered pairs of partitions of `n` differing by one box.
    G,
}

pub fn sequence(kind: SequenceKind, n: usize) -> u64 {
    match kind {
        SequenceKind::P => partition_count(n),
        SequenceKind::F => involution_count(n),
        SequenceKind::G => one_box_pair_count(n),
    }
}

/// Coefficients of `∏_k 1/(1 − x^k)` up to `x^n`, with `extra` listing part
/// sizes that come in one additional kind.
fn restricted_partition_series(n: usize, extra: &[usize]) -> Vec<u64> {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    let parts = (1..=n).chain(extra.iter().copied().filter(|&k| k <= n));
    for k in parts {
        for i in k..=n {
            coeffs[i] += coeffs[i - k];
        }
    }
    coeffs
}

pub fn partition_count(n: usize) -> u64 {
    restricted_partition_series(n, &[])[n]
}

/// `f_n` equals the number of involutions of `n` points:
/// `I(n) = I(n−1) + (n−1)·I(n−2)`.
pub fn involution_count(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 2..=n {
        let next = cur + (k as u64 - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `g_n` equals the number of partitions of `n − 2` in which the parts 1
/// and 2 come in two kinds (OEIS A000097, shifted by two).
pub fn one_box_pair_count(n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    restricted_partition_series(n - 2, &[1, 2])[n - 2]
}

/// `f^λ = |λ|! / ∏ hooks`.
pub fn hook_length_dimension(p: &Partition) -> u128 {
    let conj = p.conjugate();
    let mut numerator: u128 = (1..=p.size() as u128).product();
    let mut hooks: u128 = 1;
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj.part(j) - i) - 1;
            hooks *= hook as u128;
        }
    }
    numerator /= hooks;
    numerator
}
