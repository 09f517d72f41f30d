use thiserror::Error;

/// Errors shared by the exact-arithmetic modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomial division left a remainder or needed a fractional
    /// coefficient.
    #[error("polynomial division is not exact")]
    NonExactDivision,
    /// Two cyclotomic elements with different conductors were combined.
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),
    /// A coin pair requires coprime parameters.
    #[error("parameters {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    /// Two symmetric polynomials in different numbers of variables were
    /// combined.
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    /// A partition sum that must clear to an integer did not.
    #[error("rational partition sum is not an integer")]
    NonIntegerResult,
    /// A root-of-unity coefficient that must be a rational integer was not
    /// constant.
    #[error("specialized coefficient is not a rational integer")]
    NonIntegerCoefficient,
}
