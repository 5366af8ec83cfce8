use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("not a quadratic irrational: {0}")]
    NotQuadraticIrrational(String),
    #[error("invalid partial quotient {0}: every coefficient after b0 must be at least 1")]
    InvalidPartialQuotient(String),
    #[error("coefficient stream ended; finite expansions must be given as rationals")]
    StreamEnded,
    #[error("refinement limit of {0} coefficient pulls exhausted")]
    RefinementExhausted(usize),
    #[error("expansion exhausted")]
    ExpansionExhausted,
    #[error("no finite value")]
    NoFiniteValue,
    #[error("identical circles")]
    IdenticalCircles,
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("not a between-tangent configuration")]
    NotBetweenTangent,
    #[error("configuration mismatch")]
    ConfigurationMismatch,
    #[error("cannot compare quantities anchored at two different irrational points")]
    Incomparable,
    #[error("statement (v) fails for this pair")]
    StatementVFails,
    #[error("invalid render spec: {0}")]
    InvalidRenderSpec(String),
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
