use alloc::boxed::Box;
use alloc::string::String;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{a} is not a unit modulo {modulus}")]
    InvalidAutomorphism { a: u64, modulus: u64 },

    #[error("element is not a root of unity")]
    NotARootOfUnity,

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("table dimensions do not match a group of order {order}")]
    ShapeMismatch { order: usize },

    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    CocycleInvalid(usize, usize, usize),

    #[error("cocycle is not normalized at ({0}, {1})")]
    NotNormalized(usize, usize),

    #[error("value {0} is not supported by the declared coefficient basis")]
    CoefficientBasisTooSmall(String),

    #[error("class order {0} is not supported (only 1 and 2)")]
    UnsupportedClassOrder(u64),

    #[error("conductor {requested} cannot host a value that needs conductor {required}")]
    InsufficientCoefficients { required: u64, requested: u64 },

    #[error("map is not a character: {0}")]
    NotACharacter(String),

    #[error("search exceeded its bound of {cap}")]
    SearchBoundExceeded { cap: u64 },

    #[error("invalid local constraint: {0}")]
    InvalidConstraint(String),

    #[error("odd number of ramified places for ({a}, {b})")]
    InternalReciprocityViolation { a: String, b: String },

    #[error("polynomial has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("polynomial is reducible over Q (rational root {0})")]
    Reducible(String),

    #[error("no invertible conjugator within coordinate bound {bound}")]
    NoConjugatorFound { bound: i64 },

    #[error("embedding has no image for {0}")]
    EmbeddingIncomplete(String),

    #[error("Schur index {t} does not divide {n}")]
    IndivisibleMultiplicity { t: u64, n: u64 },

    #[error("matrices live in different ambient algebras")]
    AmbientMismatch,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("inconsistent datum: {0}")]
    InconsistentDatum(String),

    #[error("pipeline invariant violated at stage {stage}: {detail}")]
    PipelineInvariantViolation { stage: &'static str, detail: String },

    #[error("stage {stage}: {source}")]
    Stage { stage: &'static str, source: Box<Error> },
}

impl Error {
    /// The error underneath any stage tags.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            e => e,
        }
    }

    pub(crate) fn at(stage: &'static str) -> impl FnOnce(Error) -> Error {
        move |e| Error::Stage { stage, source: Box::new(e) }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
