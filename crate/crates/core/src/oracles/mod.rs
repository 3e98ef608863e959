//! Exact ground-truth solvers.
//!
//! Everything here is exhaustive or a textbook exponential-time dynamic
//! program. The oracles are the yardstick the reductions are measured
//! against, so they favor obviousness over speed. Every oracle refuses
//! inputs beyond its configured cap instead of truncating.

mod circuit;
mod graphs;
mod sat;
mod sets;
mod subset_sum;

pub use circuit::circuit_count_sat;
pub use graphs::{
    count_bipartite_independent_sets_grouped, count_cvc_by_size, count_independent_sets,
    count_steiner_sets_by_size, is_connected_mask, parity_bipartite_independent_sets,
};
pub use sat::{count_nae_assignments, count_satisfying, exists_nae_assignment};
pub use sets::{
    count_covers_exact_size, count_hitting_sets_by_size, count_set_covers_by_size,
    count_set_partitionings_by_size, count_set_splittings, min_set_cover_dp, min_set_partition_dp,
};
pub use subset_sum::{subset_sum_decide, SubsetSumMode};

use crate::error::{Error, Result};

/// Environment variable that overrides [`Caps::DEFAULT_BRUTE`].
pub const CAP_ENV_VAR: &str = "SETHEQ_CAP";

/// Size limits for the exhaustive oracles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Caps {
    /// Maximum number of enumerated items (variables, elements, sets,
    /// vertices, inputs). Values above 62 are clamped since enumeration
    /// indices are machine words.
    pub brute: usize,
    /// Maximum subset-sum target for the table-based algorithm.
    pub subset_sum_table: usize,
}

impl Caps {
    pub const DEFAULT_BRUTE: usize = 24;
    pub const DEFAULT_SUBSET_SUM_TABLE: usize = 1 << 26;

    pub fn with_brute(brute: usize) -> Self {
        Caps {
            brute,
            ..Caps::default()
        }
    }

    /// Defaults, with the brute-force cap taken from `SETHEQ_CAP` if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Caps::with_brute)
                .map_err(|_| Error::param(format!("{CAP_ENV_VAR}={v} is not a count"))),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub(crate) fn check(&self, what: &'static str, size: usize) -> Result<()> {
        let cap = self.brute.min(62);
        if size > cap {
            return Err(Error::Capacity { what, size, cap });
        }
        Ok(())
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            brute: Self::DEFAULT_BRUTE,
            subset_sum_table: Self::DEFAULT_SUBSET_SUM_TABLE,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_clamp() {
        assert!(Caps::with_brute(100).check("x", 62).is_ok());
        assert!(Caps::with_brute(100).check("x", 63).is_err());
        assert!(matches!(
            Caps::default().check("variables", 25),
            Err(Error::Capacity { size: 25, cap: 24, .. })
        ));
    }
}
