//! Monotonicity of Kronecker, reduced Kronecker and Littlewood–Richardson
//! coefficients under `+` and `∪`, checked on explicit witnesses.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::cc_type;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, is_larger, Partition};
use crate::products::{lr_coeff, outer_product, stable_level, Decomposition, Kernel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotonicityKind {
    KronAdd,
    KronUnion,
    ReducedAdd,
    ReducedUnion,
    LrAdd,
    CcMonotone,
}

impl MonotonicityKind {
    pub const ALL: [MonotonicityKind; 6] = [
        MonotonicityKind::KronAdd,
        MonotonicityKind::KronUnion,
        MonotonicityKind::ReducedAdd,
        MonotonicityKind::ReducedUnion,
        MonotonicityKind::LrAdd,
        MonotonicityKind::CcMonotone,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MonotonicityKind::KronAdd => "kron_add",
            MonotonicityKind::KronUnion => "kron_union",
            MonotonicityKind::ReducedAdd => "reduced_add",
            MonotonicityKind::ReducedUnion => "reduced_union",
            MonotonicityKind::LrAdd => "lr_add",
            MonotonicityKind::CcMonotone => "cc_monotone",
        }
    }
}

impl fmt::Display for MonotonicityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Three partitions `(λ, μ, ν)`. For LR witnesses the first entry is the
/// outer shape: `c(λ; μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple(pub Partition, pub Partition, pub Partition);

impl Triple {
    pub fn plus(&self, other: &Triple) -> Triple {
        Triple(
            self.0.plus(&other.0),
            self.1.plus(&other.1),
            self.2.plus(&other.2),
        )
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0, self.1, self.2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// `g(λ+λ', μ+μ', ν+ν') ≥ g(λ,μ,ν)` when both `g` are nonzero.
    KronAdd { base: Triple, step: Triple },
    /// `g(λ∪λ', μ+μ', ν∪ν') ≥ g(λ,μ,ν)` when both `g` are nonzero.
    KronUnion { base: Triple, step: Triple },
    /// `ḡ(λ+λ', μ+μ', ν+ν') ≥ ḡ(λ,μ,ν)` when `ḡ(λ',μ',ν') ≠ 0`.
    ReducedAdd { base: Triple, step: Triple },
    /// `ḡ(λ∪λ'[m], μ+μ', ν∪ν'[m]) ≥ ḡ(λ,μ,ν)` when
    /// `g(λ'[m], μ'[m], ν'[m]) ≠ 0`.
    ReducedUnion {
        base: Triple,
        step: Triple,
        level: usize,
    },
    /// `c(λ+λ'; μ+μ', ν+ν') ≥ c(λ; μ, ν)` when both are nonzero.
    LrAdd { base: Triple, step: Triple },
    /// With `λ` larger than `λ'` and `μ` larger than `μ'`, the cc-type of
    /// `[λ]•⋆[μ]•` dominates that of `[λ']•⋆[μ']•`.
    CcMonotone {
        small: (Partition, Partition),
        large: (Partition, Partition),
    },
}

impl Witness {
    pub fn kind(&self) -> MonotonicityKind {
        match self {
            Witness::KronAdd { .. } => MonotonicityKind::KronAdd,
            Witness::KronUnion { .. } => MonotonicityKind::KronUnion,
            Witness::ReducedAdd { .. } => MonotonicityKind::ReducedAdd,
            Witness::ReducedUnion { .. } => MonotonicityKind::ReducedUnion,
            Witness::LrAdd { .. } => MonotonicityKind::LrAdd,
            Witness::CcMonotone { .. } => MonotonicityKind::CcMonotone,
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedWitness(msg.into())
}

fn padded(p: &Partition, level: usize) -> Result<Partition> {
    p.at_level(level)
        .ok_or_else(|| malformed(format!("{p}[{level}] is not a partition")))
}

fn kron(kernel: &Kernel, t: &Triple) -> Result<u64> {
    kernel.kron_coeff(&t.0, &t.1, &t.2).map_err(|e| match e {
        Error::SizeMismatch { context } => malformed(context),
        other => other,
    })
}

/// Evaluates the inequality carried by `witness`. Fails with
/// [`Error::MalformedWitness`] when the witness does not meet the
/// hypotheses of the inequality.
pub fn monotonicity_check(kernel: &Kernel, witness: &Witness) -> Result<bool> {
    match witness {
        Witness::KronAdd { base, step } | Witness::KronUnion { base, step } => {
            let before = kron(kernel, base)?;
            if before == 0 || kron(kernel, step)? == 0 {
                return Err(malformed("Kronecker coefficients must be nonzero"));
            }
            let grown = if matches!(witness, Witness::KronAdd { .. }) {
                base.plus(step)
            } else {
                Triple(
                    base.0.union(&step.0),
                    base.1.plus(&step.1),
                    base.2.union(&step.2),
                )
            };
            Ok(kron(kernel, &grown)? >= before)
        }
        Witness::ReducedAdd { base, step } => {
            if kernel.reduced_coeff(&step.0, &step.1, &step.2)? == 0 {
                return Err(malformed("ḡ of the step must be nonzero"));
            }
            let before = kernel.reduced_coeff(&base.0, &base.1, &base.2)?;
            let grown = base.plus(step);
            Ok(kernel.reduced_coeff(&grown.0, &grown.1, &grown.2)? >= before)
        }
        Witness::ReducedUnion { base, step, level } => {
            let padded_step = Triple(
                padded(&step.0, *level)?,
                padded(&step.1, *level)?,
                padded(&step.2, *level)?,
            );
            if kron(kernel, &padded_step)? == 0 {
                return Err(malformed("g of the padded step must be nonzero"));
            }
            let before = kernel.reduced_coeff(&base.0, &base.1, &base.2)?;
            let grown = Triple(
                base.0.union(&padded_step.0),
                base.1.plus(&step.1),
                base.2.union(&padded_step.2),
            );
            Ok(kernel.reduced_coeff(&grown.0, &grown.1, &grown.2)? >= before)
        }
        Witness::LrAdd { base, step } => {
            let before = lr_coeff(&base.0, &base.1, &base.2);
            if before == 0 || lr_coeff(&step.0, &step.1, &step.2) == 0 {
                return Err(malformed("LR coefficients must be nonzero"));
            }
            let grown = base.plus(step);
            Ok(lr_coeff(&grown.0, &grown.1, &grown.2) >= before)
        }
        Witness::CcMonotone { small, large } => {
            if !is_larger(&large.0, &small.0) || !is_larger(&large.1, &small.1) {
                return Err(malformed("factors are not larger than the witnesses"));
            }
            let a = cc_type(&kernel.reduced_product(&small.0, &small.1)?);
            let b = cc_type(&kernel.reduced_product(&large.0, &large.1)?);
            Ok(b.dominates(&a))
        }
    }
}

fn random_partition<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> Partition {
    let n = rng.gen_range(0..=max_size);
    enumerate_partitions(n)
        .choose(rng)
        .cloned()
        .expect("at least one partition")
}

fn random_term<R: Rng + ?Sized>(rng: &mut R, d: &Decomposition) -> Option<Partition> {
    let terms: Vec<&Partition> = d.partitions().collect();
    terms.choose(rng).map(|p| (*p).clone())
}

/// A random triple with nonzero Kronecker coefficient, of size `1..=max`.
fn kron_triple<R: Rng + ?Sized>(kernel: &Kernel, rng: &mut R, max: usize) -> Result<Triple> {
    let n = rng.gen_range(1..=max);
    let ps = enumerate_partitions(n);
    let a = ps.choose(rng).unwrap().clone();
    let b = ps.choose(rng).unwrap().clone();
    let c = random_term(rng, &kernel.kron_product(&a, &b)?).expect("products are nonzero");
    Ok(Triple(a, b, c))
}

fn reduced_triple<R: Rng + ?Sized>(kernel: &Kernel, rng: &mut R, max: usize) -> Result<Triple> {
    let a = random_partition(rng, max);
    let b = random_partition(rng, max);
    let c = random_term(rng, &kernel.reduced_product(&a, &b)?).expect("products are nonzero");
    Ok(Triple(a, b, c))
}

fn lr_triple<R: Rng + ?Sized>(rng: &mut R, max: usize) -> Triple {
    let b = random_partition(rng, max);
    let c = random_partition(rng, max);
    let a = random_term(rng, &outer_product(&b, &c)).expect("products are nonzero");
    Triple(a, b, c)
}

fn grow<R: Rng + ?Sized>(rng: &mut R, p: &Partition) -> Partition {
    let mut out = p.clone();
    for _ in 0..rng.gen_range(0..=2) {
        let n = rng.gen_range(1..=2);
        let tau = enumerate_partitions(n).choose(rng).unwrap().clone();
        out = if rng.gen_bool(0.5) {
            out.plus(&tau)
        } else {
            out.union(&tau)
        };
    }
    out
}

/// Draws a witness of the given kind that satisfies its hypotheses and keeps
/// every product within the kernel's level ceiling.
pub fn random_witness<R: Rng + ?Sized>(
    kernel: &Kernel,
    kind: MonotonicityKind,
    rng: &mut R,
) -> Result<Witness> {
    let limit = kernel.max_level();
    loop {
        let witness = match kind {
            MonotonicityKind::KronAdd => Witness::KronAdd {
                base: kron_triple(kernel, rng, 4)?,
                step: kron_triple(kernel, rng, 4)?,
            },
            MonotonicityKind::KronUnion => Witness::KronUnion {
                base: kron_triple(kernel, rng, 4)?,
                step: kron_triple(kernel, rng, 4)?,
            },
            MonotonicityKind::ReducedAdd => {
                let base = reduced_triple(kernel, rng, 3)?;
                let step = reduced_triple(kernel, rng, 2)?;
                let grown = base.plus(&step);
                if stable_level(&grown.0, &grown.1) > limit {
                    continue;
                }
                Witness::ReducedAdd { base, step }
            }
            MonotonicityKind::ReducedUnion => {
                let a = random_partition(rng, 2);
                let b = random_partition(rng, 2);
                let level = a.pad_threshold().max(b.pad_threshold()) + rng.gen_range(0..=1);
                let padded_product = kernel.product_at_level(&a, &b, level)?;
                let c = random_term(rng, &padded_product).expect("products are nonzero");
                let step = Triple(a, b, c.strip_first_row());
                let base = reduced_triple(kernel, rng, 2)?;
                let grown_0 = base.0.union(&step.0.at_level(level).unwrap());
                let grown_1 = base.1.plus(&step.1);
                if stable_level(&grown_0, &grown_1) > limit {
                    continue;
                }
                Witness::ReducedUnion { base, step, level }
            }
            MonotonicityKind::LrAdd => Witness::LrAdd {
                base: lr_triple(rng, 3),
                step: lr_triple(rng, 3),
            },
            MonotonicityKind::CcMonotone => {
                let small = (random_partition(rng, 3), random_partition(rng, 3));
                let large = (grow(rng, &small.0), grow(rng, &small.1));
                if stable_level(&large.0, &large.1) > limit {
                    continue;
                }
                Witness::CcMonotone { small, large }
            }
        };
        return Ok(witness);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reduced_add_example() {
        let k = Kernel::new();
        let w = Witness::ReducedAdd {
            base: Triple(partition![1, 1], partition![2], partition![1, 1]),
            step: Triple(partition![1], partition![], partition![1]),
        };
        assert!(monotonicity_check(&k, &w).unwrap());
        assert!(
            k.reduced_coeff(&partition![2, 1], &partition![2], &partition![2, 1])
                .unwrap()
                >= 2
        );
    }

    #[test]
    fn trivial_kron_add() {
        let k = Kernel::new();
        let t = Triple(partition![2, 1], partition![2, 1], partition![3]);
        let w = Witness::KronAdd {
            base: t.clone(),
            step: t,
        };
        assert!(monotonicity_check(&k, &w).unwrap());
    }

    #[test]
    fn cc_monotone_example() {
        let k = Kernel::new();
        let w = Witness::CcMonotone {
            small: (partition![1], partition![2, 1]),
            large: (partition![2, 1], partition![2, 1]),
        };
        assert!(monotonicity_check(&k, &w).unwrap());
    }

    #[test]
    fn malformed_witnesses() {
        let k = Kernel::new();
        // g((2),(2),(1,1)) = 0
        let w = Witness::KronAdd {
            base: Triple(partition![2], partition![2], partition![1, 1]),
            step: Triple(partition![1], partition![1], partition![1]),
        };
        assert!(matches!(
            monotonicity_check(&k, &w),
            Err(Error::MalformedWitness(_))
        ));
        let w = Witness::KronAdd {
            base: Triple(partition![2], partition![1], partition![1]),
            step: Triple(partition![1], partition![1], partition![1]),
        };
        assert!(matches!(
            monotonicity_check(&k, &w),
            Err(Error::MalformedWitness(_))
        ));
        let w = Witness::CcMonotone {
            small: (partition![2], partition![1]),
            large: (partition![1, 1], partition![1]),
        };
        assert!(matches!(
            monotonicity_check(&k, &w),
            Err(Error::MalformedWitness(_))
        ));
        let w = Witness::ReducedUnion {
            base: Triple(partition![1], partition![1], partition![1]),
            step: Triple(partition![2], partition![1], partition![1]),
            level: 3,
        };
        assert!(matches!(
            monotonicity_check(&k, &w),
            Err(Error::MalformedWitness(_))
        ));
    }

    #[test]
    fn random_witnesses_hold() {
        let k = Kernel::new();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kind in MonotonicityKind::ALL {
            for _ in 0..20 {
                let w = random_witness(&k, kind, &mut rng).unwrap();
                assert_eq!(w.kind(), kind);
                assert!(monotonicity_check(&k, &w).unwrap(), "{w:?}");
            }
        }
    }
}
