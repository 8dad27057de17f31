use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("only nonzero constant polynomials are invertible")]
    NonConstantInverse,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("indeterminate `{0}` must have weight at least 1")]
    ZeroWeight(String),
    #[error("indeterminate `{0}` declared twice")]
    DuplicateVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("exponent must be >= 1")]
    BadExponent,
    #[error("operator is missing its operand")]
    DanglingOperator,
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("integer literal out of range")]
    Overflow,
    #[error("factors must be separated by `*`")]
    MissingStar,
    #[error("denominator is not invertible")]
    BadDenominator,
    #[error("constant terms are not allowed in an algebra without unity")]
    ConstantTerm,
    #[error("expected a single monic word")]
    NotAWord,
}

/// An expression parse failure; `pos` is the byte offset of the offending
/// token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("presentation declares no generators")]
    NoGenerators,
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("generator `{0}` is not declared")]
    ForeignGenerator(String),
    #[error("characteristic {0} is neither 0 nor prime")]
    BadCharacteristic(u64),
    #[error("unbounded presentation: no degree_cap clause")]
    Unbounded,
    #[error("polynomial relation `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("invalid clause: {0}")]
    InvalidClause(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("field of characteristic {field} does not match presentation characteristic {spec}")]
    CharacteristicMismatch { spec: u64, field: u64 },
    #[error("requires characteristic 0 (or above {bound}), got {found}")]
    PositiveCharacteristic { found: u64, bound: u64 },
    #[error("only defined in characteristic 0, got {0}")]
    CharacteristicZeroOnly(u64),
    #[error("element is not a unit: its constant term is zero")]
    NotUnit,
    #[error("logarithm needs constant term 1")]
    ConstantNotOne,
    #[error("not applicable to this algebra: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}
