use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

/// A character written as a sum of irreducibles: partition → multiplicity.
///
/// Zero multiplicities are never stored. Iteration follows the canonical
/// partition order (smaller size first, then reverse lexicographic).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    terms: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition::default()
    }

    /// A single irreducible with multiplicity one.
    pub fn irreducible(p: Partition) -> Self {
        let mut d = Decomposition::new();
        d.add(p, 1);
        d
    }

    pub fn add(&mut self, p: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry(p).or_insert(0) += mult;
        }
    }

    pub fn get(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys()
    }

    /// Number of components (distinct irreducibles).
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of constituents (multiplicities summed).
    pub fn constituents(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    /// Applies `f` to every partition, merging terms that collide.
    pub fn map_partitions(&self, mut f: impl FnMut(&Partition) -> Partition) -> Decomposition {
        let mut out = Decomposition::new();
        for (p, m) in self.iter() {
            out.add(f(p), m);
        }
        out
    }
}

impl FromIterator<(Partition, u64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut d = Decomposition::new();
        for (p, m) in iter {
            d.add(p, m);
        }
        d
    }
}

/// `[1]+2[2,1]`, or `0` for the zero character.
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Term {
    mult: u64,
    partition: Partition,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Terms {
    terms: Vec<Term>,
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Terms {
            terms: self
                .iter()
                .map(|(p, m)| Term {
                    mult: m,
                    partition: p.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Terms::deserialize(deserializer)?;
        let mut d = Decomposition::new();
        for term in raw.terms {
            if term.mult == 0 {
                return Err(serde::de::Error::custom("multiplicities must be positive"));
            }
            if d.terms.insert(term.partition, term.mult).is_some() {
                return Err(serde::de::Error::custom("duplicate partition"));
            }
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use proptest::prelude::*;

    #[test]
    fn display_and_json() {
        let d: Decomposition = [(partition![2, 1], 2), (partition![1], 1), (partition![], 1)]
            .into_iter()
            .collect();
        assert_eq!(d.to_string(), "[]+[1]+2[2,1]");
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"terms":[{"mult":1,"partition":[]},{"mult":1,"partition":[1]},{"mult":2,"partition":[2,1]}]}"#
        );
        assert_eq!(Decomposition::new().to_string(), "0");
        assert_eq!((d.len(), d.constituents()), (3, 4));
    }

    #[test]
    fn json_rejects_bad_terms() {
        assert!(
            serde_json::from_str::<Decomposition>(r#"{"terms":[{"mult":0,"partition":[1]}]}"#)
                .is_err()
        );
        assert!(serde_json::from_str::<Decomposition>(
            r#"{"terms":[{"mult":1,"partition":[1,2]}]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<Decomposition>(
            r#"{"terms":[{"mult":1,"partition":[1]},{"mult":1,"partition":[1]}]}"#
        )
        .is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..6, 0..5).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in prop::collection::vec((arb_partition(), 0u64..5), 0..8)) {
            let d: Decomposition = terms.into_iter().collect();
            let text = serde_json::to_string(&d).unwrap();
            let back: Decomposition = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, d);
        }
    }
}
