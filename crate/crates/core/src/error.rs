use std::fmt;

use thiserror::Error;

use crate::number::GrossNumber;

/// Failures of the arithmetic on [`GrossNumber`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// The long division did not terminate within the term budget.
    /// `quotient * divisor + remainder` equals the dividend exactly.
    #[error("inexact division: quotient {quotient} + ... (remainder {remainder})")]
    InexactDivision {
        quotient: GrossNumber,
        remainder: GrossNumber,
    },
    #[error("result is not representable as a finite sum of grossone terms: {0}")]
    NotRepresentable(String),
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("0^0 is indeterminate")]
    Indeterminate,
    #[error("integer exponent {0} exceeds the supported magnitude")]
    ExponentTooLarge(String),
}

impl ArithError {
    /// Stable machine-readable name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            ArithError::DivisionByZero => "DivisionByZero",
            ArithError::InexactDivision { .. } => "InexactDivision",
            ArithError::NotRepresentable(_) => "NotRepresentable",
            ArithError::ZeroToNegativePower => "ZeroToNegativePower",
            ArithError::Indeterminate => "Indeterminate",
            ArithError::ExponentTooLarge(_) => "ExponentTooLarge",
        }
    }
}

/// A parse failure at a character offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    /// Character (not byte) offset of the offending token.
    pub position: usize,
    /// What the parser would have accepted at `position`.
    pub expected: Vec<String>,
    /// The text actually found, or `end of input`.
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unexpected {} at position {}", self.found, self.position)?;
        if !self.expected.is_empty() {
            write!(f, ", expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeasureError {
    #[error("invalid set descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("comparison depends on floor rounding: {0}")]
    AmbiguousComparison(String),
    #[error("not an admissible sequence length: {0}")]
    NotAnAdmissibleLength(String),
    #[error("exact comparison needs an oversized power: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

impl MeasureError {
    pub fn name(&self) -> &'static str {
        match self {
            MeasureError::InvalidDescriptor(_) => "InvalidDescriptor",
            MeasureError::AmbiguousComparison(_) => "AmbiguousComparison",
            MeasureError::NotAnAdmissibleLength(_) => "NotAnAdmissibleLength",
            MeasureError::TooLarge(_) => "TooLarge",
            MeasureError::Syntax(_) => "SyntaxError",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("score vectors have different lengths ({0} and {1})")]
    DimensionMismatch(usize, usize),
    #[error("score #{index} ({value}) is not an integer")]
    NonIntegerScore { index: usize, value: String },
    #[error("score #{index} ({value}) is negative")]
    NegativeScore { index: usize, value: String },
    #[error("a score vector needs at least one score")]
    EmptyScores,
    #[error("binary rank would need {0} bits")]
    TooManyBits(String),
    #[error("{0}")]
    InvalidScore(String),
}

impl RankError {
    pub fn name(&self) -> &'static str {
        match self {
            RankError::DimensionMismatch(..) => "DimensionMismatch",
            RankError::NonIntegerScore { .. } => "NonIntegerScore",
            RankError::NegativeScore { .. } => "NegativeScore",
            RankError::EmptyScores => "EmptyScores",
            RankError::TooManyBits(_) => "TooManyBits",
            RankError::InvalidScore(_) => "InvalidScore",
        }
    }
}

/// Union of every error the library produces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Rank(#[from] RankError),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::Arith(e) => e.name(),
            Error::Syntax(_) => "SyntaxError",
            Error::Measure(e) => e.name(),
            Error::Rank(e) => e.name(),
        }
    }

    /// Character offset for syntax errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Syntax(e) | Error::Measure(MeasureError::Syntax(e)) => Some(e.position),
            _ => None,
        }
    }
}
