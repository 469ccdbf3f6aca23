//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, budget checks, and the verification pipeline.
///
/// Internal consistency violations (inexact divisions, method disagreements)
/// are asserted, not returned: they signal bugs, never bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed partition, ideal, or polynomial text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input that violates a precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The ideal is not of the form I(x) for any module element.
    #[error("ideal with boundary ({0}) is not realized by any element")]
    UnrealizedIdeal(String),

    /// The closed-form engine only covers principal height-zero ideals.
    #[error(
        "height-zero ideal with boundary ({0}) is not principal; \
         no closed form applies, use the interpolation route"
    )]
    NonPrincipalHeightZero(String),

    /// An enumeration would exceed the configured element budget.
    #[error("enumeration budget exceeded: need {needed} elements, cap is {cap}")]
    BudgetExceeded { needed: u128, cap: u64 },

    /// The raw tier would exceed the endomorphism cap.
    #[error("endomorphism cap exceeded: need {needed}, cap is {cap}")]
    EndomorphismCapExceeded { needed: u128, cap: u64 },

    /// Exact polynomial recovery failed even after escalating the degree bound.
    #[error("interpolation failed: {0}")]
    Interpolation(String),

    /// A cross-check between two independent computations failed.
    #[error("verification failed: {0}")]
    Verification(String),

    /// A cached record disagrees with a newly computed value.
    #[error("cache conflict for key `{key}`: stored [{stored}], new [{new}]")]
    CacheConflict {
        key: String,
        stored: String,
        new: String,
    },

    /// A cache or reference file contains an unparseable line.
    #[error("malformed record at {path}:{line}: {message}")]
    MalformedRecord {
        path: String,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
