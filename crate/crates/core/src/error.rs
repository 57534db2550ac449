use thiserror::Error;

use crate::exactpoly::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("radical expressions built over different surfaces cannot be combined")]
    IncompatibleDelta,
    #[error("generator {name} must depend on {expected} only but depends on {found}")]
    WrongVariable {
        name: &'static str,
        expected: Var,
        found: Var,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("domain error in `{expr}`: {reason}")]
    Domain { expr: String, reason: String },
    #[error("a linear Weingarten fit needs at least 3 samples, got {0}")]
    TooFewSamples(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("`{0}` is not a polynomial with rational coefficients")]
    NotPolynomial(String),
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
    #[error("{0} is not the square of a rational number")]
    NotRationalSquare(String),
    #[error("Jacobian vanishes for degrees ({m}, {n}), contradicting the polynomial case table")]
    CaseTableViolation { m: u32, n: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
}
