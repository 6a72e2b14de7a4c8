use thiserror::Error;

/// Errors raised by monomial and ideal arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("variable contexts differ")]
    ContextMismatch,

    #[error("monomial has {found} exponents but {expected} were expected")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("variable index {index} is out of range for {dimension} variables")]
    VariableOutOfRange { index: usize, dimension: usize },

    #[error("exponent of variable {index} in an irreducible component must be >= 1")]
    ZeroComponentExponent { index: usize },

    #[error("variable {index} appears twice in an irreducible component")]
    RepeatedComponentVariable { index: usize },

    #[error("bracket power exponent must be >= 1")]
    InvalidBracketPower,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("unit ideal has no irreducible decomposition")]
    UnitIdeal,

    #[error("empty decomposition")]
    EmptyDecomposition,

    #[error("decomposition exceeded the cap of {cap} components")]
    ComponentCapExceeded { cap: usize },
}
