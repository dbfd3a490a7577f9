//! Error types shared by every module.
//!
//! Display strings always lead with the variant name so that command-line
//! diagnostics identify the failing contract precisely.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A document could not be tokenized or has malformed syntax.
    #[error("ParseError: line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A structural invariant of an input object is violated.
    #[error("ValidationError: {0}")]
    Validation(String),

    /// A chain complex fails a contract required by a homology operation.
    #[error("InvalidComplex: {0}")]
    InvalidComplex(String),

    /// The selected generators do not span a subcomplex.
    #[error("NotASubcomplex: boundary of '{src}' leaves the span through '{dst}'")]
    NotASubcomplex { src: String, dst: String },

    /// A surgery coefficient lies below the proven validity gate.
    #[error("SlopeTooSmall: n = {n} is below the validity gate 2*genus = {gate}")]
    SlopeTooSmall { n: i64, gate: i64 },

    /// The top filtration slice does not have rank one.
    #[error("NotFibered: {0}")]
    NotFibered(String),

    /// Every filtration slice of the complex is acyclic.
    #[error("EmptyHomology: every filtration slice is acyclic")]
    EmptyHomology,

    /// A slope was supplied in non-reduced form.
    #[error("NonCoprime: {p}/{q} is not in lowest terms")]
    NonCoprime { p: i64, q: i64 },

    /// A slope that must be positive is not.
    #[error("NonPositiveSlope: {0}")]
    NonPositiveSlope(String),

    /// The target of a surgery path does not lie strictly above the start.
    #[error("SlopeNotAbove: target {target} does not lie strictly above {from}/1")]
    SlopeNotAbove { target: String, from: i64 },

    /// The slam-dunk denominator vanishes.
    #[error("Indeterminate: q*n - p = 0 at slope {p}/{q}, n = {n}")]
    Indeterminate { p: i64, q: i64, n: i64 },

    /// A generator label does not exist in the given object.
    #[error("UnknownGenerator: '{0}'")]
    UnknownGenerator(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::Validation(_) => "ValidationError",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::NotASubcomplex { .. } => "NotASubcomplex",
            Error::SlopeTooSmall { .. } => "SlopeTooSmall",
            Error::NotFibered(_) => "NotFibered",
            Error::EmptyHomology => "EmptyHomology",
            Error::NonCoprime { .. } => "NonCoprime",
            Error::NonPositiveSlope(_) => "NonPositiveSlope",
            Error::SlopeNotAbove { .. } => "SlopeNotAbove",
            Error::Indeterminate { .. } => "Indeterminate",
            Error::UnknownGenerator(_) => "UnknownGenerator",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
