//! On-disk form of a character table: `chartable_<n>.json`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

pub const CACHE_FORMAT_VERSION: u32 = 1;

pub fn cache_file_name(n: usize) -> String {
    format!("chartable_{n}.json")
}

/// Field order is alphabetical so the serialized keys come out sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheFile {
    pub format_version: u32,
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CacheFile {
    pub fn from_table(table: &CharacterTable) -> Self {
        CacheFile {
            format_version: CACHE_FORMAT_VERSION,
            n: table.level(),
            partitions: table.partitions().to_vec(),
            values: (0..table.dim()).map(|r| table.row(r).to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string(self).expect("cache file serializes");
        text.push('\n');
        text
    }

    /// Checks the header and the partition list against a fresh enumeration.
    pub fn into_table(self) -> std::result::Result<CharacterTable, String> {
        if self.format_version != CACHE_FORMAT_VERSION {
            return Err(format!(
                "unsupported format_version {}",
                self.format_version
            ));
        }
        if self.partitions != enumerate_partitions(self.n) {
            return Err("partition list is not the descending lexicographic enumeration".into());
        }
        let d = self.partitions.len();
        if self.values.len() != d || self.values.iter().any(|r| r.len() != d) {
            return Err(format!("value matrix is not {d}x{d}"));
        }
        let values = self.values.into_iter().flatten().collect();
        Ok(CharacterTable::from_parts(self.n, values))
    }
}

pub fn write_cache_file(table: &CharacterTable, path: &Path) -> Result<()> {
    std::fs::write(path, CacheFile::from_table(table).to_json())?;
    Ok(())
}

pub fn read_cache_file(path: &Path) -> Result<CharacterTable> {
    let text = std::fs::read_to_string(path)?;
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| Error::Cache {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })?;
    file.into_table().map_err(|reason| Error::Cache {
        path: path.to_path_buf(),
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::CharacterStore;

    #[test]
    fn round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let store = CharacterStore::new();
        for n in [0, 1, 5, 9] {
            let path = store.write_cache(n, dir.path()).unwrap();
            let bytes = std::fs::read(&path).unwrap();
            let table = read_cache_file(&path).unwrap();
            assert_eq!(table, *store.table(n).unwrap());
            write_cache_file(&table, &path).unwrap();
            assert_eq!(std::fs::read(&path).unwrap(), bytes);
        }
    }

    #[test]
    fn header_layout() {
        let store = CharacterStore::new();
        let text = CacheFile::from_table(&store.table(2).unwrap()).to_json();
        assert_eq!(
            text,
            "{\"format_version\":1,\"n\":2,\"partitions\":[[2],[1,1]],\"values\":[[1,1],[-1,1]]}\n"
        );
    }

    #[test]
    fn warm_store_reads_cache() {
        let dir = tempfile::tempdir().unwrap();
        let cold = CharacterStore::new();
        for n in 0..=7 {
            cold.write_cache(n, dir.path()).unwrap();
        }
        let warm = CharacterStore::new().with_cache_dir(dir.path());
        for n in 0..=9 {
            assert_eq!(*warm.table(n).unwrap(), *cold.table(n).unwrap());
        }
    }

    #[test]
    fn rejects_corrupt_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(cache_file_name(2));
        std::fs::write(
            &path,
            "{\"format_version\":1,\"n\":2,\"partitions\":[[1,1],[2]],\"values\":[[1,1],[-1,1]]}",
        )
        .unwrap();
        assert!(matches!(read_cache_file(&path), Err(Error::Cache { .. })));
        std::fs::write(
            &path,
            "{\"format_version\":2,\"n\":2,\"partitions\":[[2],[1,1]],\"values\":[[1,1],[-1,1]]}",
        )
        .unwrap();
        assert!(matches!(read_cache_file(&path), Err(Error::Cache { .. })));
        std::fs::write(&path, "not json").unwrap();
        assert!(matches!(read_cache_file(&path), Err(Error::Cache { .. })));
    }
}
