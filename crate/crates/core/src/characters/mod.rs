//! Conjugacy classes of `S_n` and exact irreducible character tables.
//!
//! Tables are built level by level with the Murnaghan–Nakayama rule: the
//! longest cycle of a class is stripped off as a rim hook, and the remaining
//! value is read from the already completed table one or more levels down.
//! The lower tables therefore act as the memo keyed by (remaining shape,
//! remaining cycles).

mod cache;

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

pub use cache::{
    cache_file_name, read_cache_file, write_cache_file, CacheFile, CACHE_FORMAT_VERSION,
};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Default ceiling on the level of character tables.
pub const DEFAULT_TABLE_LIMIT: usize = 24;

/// A conjugacy class of `S_n`, given by its cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    cycles: Partition,
    centralizer: u128,
    class_size: u128,
}

impl CycleType {
    pub fn new(cycles: Partition) -> Self {
        let n = cycles.size();
        let mut centralizer: u128 = 1;
        for (len, mult) in cycles.blocks() {
            centralizer *= (len as u128).pow(mult as u32);
            centralizer *= factorial(mult);
        }
        let class_size = factorial(n) / centralizer;
        CycleType {
            cycles,
            centralizer,
            class_size,
        }
    }

    pub fn cycles(&self) -> &Partition {
        &self.cycles
    }

    pub fn level(&self) -> usize {
        self.cycles.size()
    }

    /// `z_ρ = ∏ i^{m_i} m_i!`
    pub fn centralizer(&self) -> u128 {
        self.centralizer
    }

    /// `n! / z_ρ`
    pub fn class_size(&self) -> u128 {
        self.class_size
    }

    /// Sign of the permutations in the class.
    pub fn sign(&self) -> i64 {
        if (self.cycles.size() - self.cycles.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// One class per partition of `n`, in descending lexicographic order.
pub fn cycle_types(n: usize) -> Vec<CycleType> {
    enumerate_partitions(n)
        .into_iter()
        .map(CycleType::new)
        .collect()
}

/// The complete character table of `S_n`. Rows are irreducible characters,
/// columns are classes, both in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    level: usize,
    partitions: Vec<Partition>,
    classes: Vec<CycleType>,
    index: HashMap<Partition, usize>,
    values: Vec<i64>,
}

impl CharacterTable {
    fn from_parts(level: usize, values: Vec<i64>) -> Self {
        let partitions = enumerate_partitions(level);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let classes = partitions.iter().cloned().map(CycleType::new).collect();
        CharacterTable {
            level,
            partitions,
            classes,
            index,
            values,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    /// Number of rows (and columns).
    pub fn dim(&self) -> usize {
        self.partitions.len()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, row: usize, col: usize) -> i64 {
        self.values[row * self.dim() + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        let d = self.dim();
        &self.values[row * d..(row + 1) * d]
    }

    /// `χ^λ(ρ)`, or `None` when either index is not of this level.
    pub fn get(&self, shape: &Partition, class: &Partition) -> Option<i64> {
        Some(self.value(self.index_of(shape)?, self.index_of(class)?))
    }

    /// Row-major values.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    fn build(level: usize, lower: &[Arc<CharacterTable>]) -> Result<Self> {
        let shell = CharacterTable::from_parts(level, Vec::new());
        if level == 0 {
            return Ok(CharacterTable {
                values: vec![1],
                ..shell
            });
        }
        let d = shell.dim();
        // for each class: its longest cycle and the column of the rest
        let columns: Vec<(usize, usize)> = shell
            .classes
            .iter()
            .map(|c| {
                let r = c.cycles().first_part();
                let rest = c.cycles().strip_first_row();
                let col = lower[level - r]
                    .index_of(&rest)
                    .expect("rest is a partition");
                (r, col)
            })
            .collect();

        let mut values = Vec::with_capacity(d * d);
        let mut hooks: Vec<Option<Vec<(i64, usize)>>> = vec![None; level + 1];
        for shape in &shell.partitions {
            hooks.iter_mut().for_each(|h| *h = None);
            for &(r, col) in &columns {
                let strips = hooks[r].get_or_insert_with(|| {
                    let table = &lower[level - r];
                    rim_hooks(shape, r)
                        .into_iter()
                        .map(|(sign, rest)| (sign, table.index_of(&rest).expect("rest fits")))
                        .collect()
                });
                let table = &lower[level - r];
                let mut acc: i64 = 0;
                for &(sign, row) in strips.iter() {
                    acc = acc
                        .checked_add(sign * table.value(row, col))
                        .ok_or(Error::Overflow("building a character table"))?;
                }
                values.push(acc);
            }
        }
        Ok(CharacterTable { values, ..shell })
    }
}

/// All ways to remove a rim hook of length `len` from `shape`, as
/// `(sign, remaining shape)` with sign `(−1)^{height}`.
///
/// Works on the beta set `{λ_i + (l − i)}`: removing a rim hook of length
/// `len` moves one bead from `b` to the free position `b − len`, and the
/// height is the number of beads strictly between.
pub fn rim_hooks(shape: &Partition, len: usize) -> Vec<(i64, Partition)> {
    let l = shape.len();
    let beta: Vec<usize> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (l - 1 - j))
            .collect();
        let rest = Partition::new(parts).expect("beta sets give partitions");
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((sign, rest));
    }
    out
}

/// Shared, lazily built character tables for all levels up to a ceiling.
///
/// Construction is single-writer: building a level holds the internal lock
/// and fills in every missing lower level first. Completed tables are handed
/// out as immutable `Arc`s.
#[derive(Debug)]
pub struct CharacterStore {
    limit: usize,
    cache_dir: Option<PathBuf>,
    tables: Mutex<Vec<Arc<CharacterTable>>>,
}

impl Default for CharacterStore {
    fn default() -> Self {
        CharacterStore::new()
    }
}

impl CharacterStore {
    pub fn new() -> Self {
        CharacterStore {
            limit: DEFAULT_TABLE_LIMIT,
            cache_dir: None,
            tables: Mutex::new(Vec::new()),
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    /// Reads `chartable_<n>.json` files from `dir` when present instead of
    /// recomputing.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn cache_dir(&self) -> Option<&Path> {
        self.cache_dir.as_deref()
    }

    pub fn table(&self, n: usize) -> Result<Arc<CharacterTable>> {
        if n > self.limit {
            return Err(Error::ResourceLimit {
                level: n,
                limit: self.limit,
            });
        }
        let mut tables = self.tables.lock().expect("character store poisoned");
        while tables.len() <= n {
            let level = tables.len();
            let table = match self.load(level)? {
                Some(t) => t,
                None => CharacterTable::build(level, &tables)?,
            };
            tables.push(Arc::new(table));
        }
        Ok(tables[n].clone())
    }

    fn load(&self, level: usize) -> Result<Option<CharacterTable>> {
        let Some(dir) = &self.cache_dir else {
            return Ok(None);
        };
        let path = dir.join(cache_file_name(level));
        if !path.exists() {
            return Ok(None);
        }
        read_cache_file(&path).map(Some)
    }

    /// `χ^λ(ρ)`.
    pub fn character_value(&self, shape: &Partition, class: &CycleType) -> Result<i64> {
        self.character_value_at(shape, class.cycles())
    }

    pub fn character_value_at(&self, shape: &Partition, cycles: &Partition) -> Result<i64> {
        if shape.size() != cycles.size() {
            return Err(Error::SizeMismatch {
                context: format!("character {shape} at class {cycles}"),
            });
        }
        let table = self.table(shape.size())?;
        Ok(table.get(shape, cycles).expect("both index the table"))
    }

    /// Writes the table of level `n` to `dir/chartable_<n>.json`.
    pub fn write_cache(&self, n: usize, dir: &Path) -> Result<PathBuf> {
        let table = self.table(n)?;
        std::fs::create_dir_all(dir)?;
        let path = dir.join(cache_file_name(n));
        write_cache_file(&table, &path)?;
        Ok(path)
    }
}
