//! Resource caps for exhaustive enumerations.

/// Environment variable overriding [`Limits::enum_cap`].
pub const MAX_ENUM_ENV: &str = "SKEWRANK_MAX_ENUM";

pub const DEFAULT_ENUM_CAP: u64 = 1 << 12;
pub const DEFAULT_SCAN_CAP: u64 = 1 << 20;
pub const DEFAULT_CENTER_CAP: u64 = 1 << 16;
pub const DEFAULT_DIM_CAP: usize = 256;

/// Caps on the sizes of sets that are walked element by element.
///
/// * `enum_cap` bounds brute-force oracles: submodule and ideal-lattice
///   enumeration, the backtracking uniform-dimension oracle.
/// * `scan_cap` bounds production scans: peeling a socle or a semisimple
///   algebra into simple pieces.
/// * `center_cap` bounds the idempotent search in a center.
/// * `dim_cap` bounds the dimension of a truncation ring `B_N`.
///
/// `oracles` turns the brute-force cross-checks on or off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enum_cap: u64,
    pub scan_cap: u64,
    pub center_cap: u64,
    pub dim_cap: usize,
    pub oracles: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enum_cap: DEFAULT_ENUM_CAP,
            scan_cap: DEFAULT_SCAN_CAP,
            center_cap: DEFAULT_CENTER_CAP,
            dim_cap: DEFAULT_DIM_CAP,
            oracles: true,
        }
    }
}

impl Limits {
    /// Whether a brute-force oracle should run on a set of `size` elements.
    pub fn oracle_applies(&self, size: u64) -> bool {
        self.oracles && size <= self.enum_cap
    }

    /// Defaults, with `enum_cap` taken from `SKEWRANK_MAX_ENUM` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = std::env::var(MAX_ENUM_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
        {
            limits.enum_cap = cap;
        }
        limits
    }
}
