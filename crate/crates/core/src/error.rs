use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("cannot invert the zero element")]
    ZeroElement,
    #[error("no inverse found within the search bound")]
    NoInverseFound,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("image of denominator `{denominator}` is not a verified unit")]
    DenominatorNotUnit { denominator: String },
    #[error("generator `{0}` has no assigned image")]
    UnboundGenerator(String),
    #[error("relation `{0}` is not preserved by the assignment")]
    RelationNotPreserved(String),
    #[error("rings are incompatible: {0}")]
    IncompatibleRings(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("carrier is not finite free over its base")]
    NotFiniteFree,
    #[error("regular representation has zero determinant")]
    DeterminantZero,
    #[error("convolution inverse does not exist: leading coefficient {0} is not a unit")]
    NotConvolutionInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not a supported prime")]
    InvalidPrime(u32),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("hypothesis not verified: {0}")]
    HypothesisUnverified(String),
    #[error("unsupported scheme for this operation: {0}")]
    UnsupportedScheme(String),
    #[error("denominator did not clear: {0}")]
    ClearingFailed(String),
    #[error("axiom failure while constructing {0}")]
    AxiomFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
