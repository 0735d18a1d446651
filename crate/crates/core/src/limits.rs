//! Enumeration guards.
//!
//! Every operation whose cost is exponential in its input checks the relevant
//! count against one of these limits before starting.

/// Environment variable that overrides every guard with a single integer.
pub const GUARD_ENV: &str = "LAPCODE_GUARD_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum size of an enumerated `Λ` set or kernel.
    pub lambda: u64,
    /// Maximum number of codewords visited by exhaustive code scans.
    pub codewords: u64,
    /// Maximum normalized volume accepted by the geometric oracle.
    pub oracle_volume: u64,
    /// Maximum number of lattice points in the oracle's bounding box.
    pub oracle_box: u64,
    /// Maximum size of the dual `Λ` in the duality check.
    pub dual_volume: u64,
    /// Maximum number of column subsets / combinations in combinatorial searches.
    pub search: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            lambda: 10_000_000,
            codewords: 10_000_000,
            oracle_volume: 100_000,
            oracle_box: 2_000_000_000,
            dual_volume: 1_000_000,
            search: 10_000_000,
        }
    }
}

impl Limits {
    /// Same limit for every guard.
    pub fn uniform(limit: u64) -> Self {
        Limits {
            lambda: limit,
            codewords: limit,
            oracle_volume: limit,
            oracle_box: limit,
            dual_volume: limit,
            search: limit,
        }
    }

    /// Defaults, overridden by `LAPCODE_GUARD_LIMIT` when it holds an integer.
    pub fn from_env() -> Self {
        match std::env::var(GUARD_ENV) {
            Ok(v) => match v.trim().parse::<u64>() {
                Ok(limit) => Limits::uniform(limit),
                Err(_) => {
                    log::warn!("ignoring non-integer {GUARD_ENV}={v:?}");
                    Limits::default()
                }
            },
            Err(_) => Limits::default(),
        }
    }
}
