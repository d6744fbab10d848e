//! Littlewood–Richardson coefficients by enumeration of LR tableaux.

use crate::partition::{enumerate_partitions, Partition};

use super::Decomposition;

/// `c(outer; inner, content)`: the number of semistandard fillings of the
/// skew shape `outer/inner` with content `content` whose reverse reading
/// word is a lattice word. Zero unless `|outer| = |inner| + |content|` and
/// `inner ⊆ outer`.
pub fn lr_coeff(outer: &Partition, inner: &Partition, content: &Partition) -> u64 {
    if outer.size() != inner.size() + content.size() || !outer.contains(inner) {
        return 0;
    }
    if !outer.contains(content) {
        return 0;
    }
    // cells in reading order: top to bottom, right to left within a row
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|i| (inner.part(i)..outer.part(i)).rev().map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = outer.parts().iter().map(|&r| vec![0; r]).collect();
    let mut counts = vec![0usize; content.len() + 1];
    let mut total = 0;
    fill(
        0,
        &cells,
        inner,
        content,
        &mut grid,
        &mut counts,
        &mut total,
    );
    total
}

fn fill(
    k: usize,
    cells: &[(usize, usize)],
    inner: &Partition,
    content: &Partition,
    grid: &mut [Vec<usize>],
    counts: &mut [usize],
    total: &mut u64,
) {
    let Some(&(i, j)) = cells.get(k) else {
        *total += 1;
        return;
    };
    // weakly increasing along the row: bounded by the entry to the right
    let max = match grid[i].get(j + 1) {
        Some(&right) if right > 0 => right,
        _ => content.len(),
    };
    // strictly increasing down the column
    let min = if i > 0 && j >= inner.part(i - 1) {
        grid[i - 1][j] + 1
    } else {
        1
    };
    for v in min..=max.min(i + 1) {
        if counts[v] >= content.part(v - 1) {
            continue;
        }
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        counts[v] += 1;
        grid[i][j] = v;
        fill(k + 1, cells, inner, content, grid, counts, total);
        grid[i][j] = 0;
        counts[v] -= 1;
    }
}

/// `[μ] ⊗ [ν] = ∑_λ c(λ; μ, ν) [λ]`.
pub fn outer_product(left: &Partition, right: &Partition) -> Decomposition {
    let n = left.size() + right.size();
    enumerate_partitions(n)
        .into_iter()
        .filter(|lambda| lambda.contains(left) && lambda.contains(right))
        .map(|lambda| {
            let c = lr_coeff(&lambda, left, right);
            (lambda, c)
        })
        .collect()
}
