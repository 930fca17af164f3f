use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime in 2..=97")]
    BadField(u32),
    #[error("malformed input: {0}")]
    BadSpec(String),
    #[error("multiplication is not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("the given unit is not a two-sided identity")]
    NoUnit,
    #[error("elements or ideals belong to different algebras")]
    AlgebraMismatch,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("{what} has size {size}, above the cap {cap}")]
    TooLarge { what: String, size: u64, cap: u64 },
    #[error("the algebra is not semiprime")]
    NotSemiprime,
    #[error("the ideal is not stable under the automorphism")]
    NotAlphaIdeal,
    #[error("the ideal is the whole algebra")]
    NotProper,
    #[error("series belong to different skew contexts")]
    ContextMismatch,
    #[error("series vanishes modulo y^{0}")]
    ZeroToPrecision(i64),
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("precision {have} is too small; need at least {need}")]
    PrecisionTooSmall { need: usize, have: usize },
    #[error("series is not in the induced ideal")]
    NotInIdeal,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn too_large(what: impl Into<String>, size: u64, cap: u64) -> Self {
        Error::TooLarge {
            what: what.into(),
            size,
            cap,
        }
    }
}
