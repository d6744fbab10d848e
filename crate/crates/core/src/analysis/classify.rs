use std::fmt;

use serde::{Deserialize, Serialize};

use super::CcType;
use crate::partition::Partition;

/// Shape patterns for which `[λ]• ⋆ [μ]•` has fewer than ten components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// One factor is `∅`.
    Empty,
    /// `(1)` with a rectangle `(α^a)`.
    OneTimesRectangle,
    /// `(1)` with `(2,1)`.
    OneTimesFatHook21,
    /// `(1)` with a fat hook `(α^a, β^b)` where exactly three of
    /// `α−β, β, a, b` equal 1.
    OneTimesFatHook3Ones,
    /// `(1,1)` with `(2)`.
    ColTwoRowTwo,
    General,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassificationCase {
    pub tag: CaseTag,
    pub expected_cc: Option<CcType>,
}

impl ClassificationCase {
    fn new(tag: CaseTag, expected_cc: Option<CcType>) -> Self {
        ClassificationCase { tag, expected_cc }
    }

    pub fn multiplicity_free(&self) -> bool {
        matches!(self.tag, CaseTag::Empty | CaseTag::OneTimesRectangle)
    }

    pub fn few_components(&self) -> bool {
        self.tag != CaseTag::General
    }
}

/// Classifies the pair by the shapes alone; no product is computed.
pub fn classify_product(lambda: &Partition, mu: &Partition) -> ClassificationCase {
    if lambda.is_empty() || mu.is_empty() {
        return ClassificationCase::new(CaseTag::Empty, Some(CcType::new(1, 1)));
    }
    let one = Partition::new(vec![1]).unwrap();
    let other = if *lambda == one {
        Some(mu)
    } else if *mu == one {
        Some(lambda)
    } else {
        None
    };
    if let Some(shape) = other {
        let blocks = shape.blocks();
        match blocks.as_slice() {
            [(width, height)] => {
                let cc = match (width, height) {
                    (1, 1) => CcType::new(4, 4),
                    (1, _) | (_, 1) => CcType::new(5, 5),
                    _ => CcType::new(6, 6),
                };
                return ClassificationCase::new(CaseTag::OneTimesRectangle, Some(cc));
            }
            [(alpha, a), (beta, b)] => {
                let ones = [alpha - beta, *beta, *a, *b]
                    .iter()
                    .filter(|&&v| v == 1)
                    .count();
                if ones == 4 {
                    return ClassificationCase::new(
                        CaseTag::OneTimesFatHook21,
                        Some(CcType::new(8, 9)),
                    );
                }
                if ones == 3 {
                    return ClassificationCase::new(
                        CaseTag::OneTimesFatHook3Ones,
                        Some(CcType::new(9, 10)),
                    );
                }
            }
            _ => {}
        }
        return ClassificationCase::new(CaseTag::General, None);
    }
    let col = Partition::new(vec![1, 1]).unwrap();
    let row = Partition::new(vec![2]).unwrap();
    if (*lambda == col && *mu == row) || (*lambda == row && *mu == col) {
        return ClassificationCase::new(CaseTag::ColTwoRowTwo, Some(CcType::new(8, 10)));
    }
    ClassificationCase::new(CaseTag::General, None)
}
