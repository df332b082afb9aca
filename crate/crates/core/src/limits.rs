use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MAX_ORDER;

/// Hard ceiling for the unlabeled census.
pub const MAX_ENUMERATION: usize = 10;

/// Size bounds for the exponential algorithms.
///
/// Every operation that enumerates partitions, subsets or graphs checks its
/// input against one of these and fails with [`Error::Capacity`] instead of
/// running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest order for which the unlabeled census is generated.
    pub enumeration: usize,
    /// Largest order for general set-partition counting.
    pub partition: usize,
    /// Largest order for the brute-force permutation canonical form.
    pub canonical_exhaustive: usize,
    /// Largest order for subset scans (independence, domination, ...).
    pub subset: usize,
    /// Largest order for characteristic polynomials.
    pub spectral: usize,
    /// Largest order for deletion-contraction.
    pub chromatic: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: 8,
            partition: 12,
            canonical_exhaustive: 12,
            subset: 24,
            spectral: 16,
            chromatic: 16,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        if self.enumeration > MAX_ENUMERATION {
            return Err(Error::capacity(
                "enumeration limit",
                self.enumeration,
                MAX_ENUMERATION,
            ));
        }
        for (what, v) in [
            ("partition limit", self.partition),
            ("subset limit", self.subset),
            ("spectral limit", self.spectral),
            ("chromatic limit", self.chromatic),
            ("canonicalization limit", self.canonical_exhaustive),
        ] {
            if v > MAX_ORDER {
                return Err(Error::capacity(what, v, MAX_ORDER));
            }
        }
        Ok(())
    }

    pub(crate) fn check(what: &'static str, got: usize, limit: usize) -> Result<()> {
        if got > limit {
            Err(Error::capacity(what, got, limit))
        } else {
            Ok(())
        }
    }
}
