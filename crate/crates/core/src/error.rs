use thiserror::Error;

/// Errors surfaced by the exact kernel.
///
/// Precision errors are retryable (raise the working precision and rebuild);
/// everything else indicates a violated precondition or an input outside the
/// certified catalog.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("ambient ranks differ: {0} vs {1}")]
    MismatchedAmbientRank(usize, usize),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("convex subgroup is not attached to this group")]
    DetachedConvexSubgroup,

    #[error("known coefficients exhausted at precision {prec}; raise the working precision")]
    PrecisionExhausted { prec: i64 },

    #[error("working precision cap {cap} exceeded")]
    PrecisionCapExceeded { cap: i64 },

    #[error("exponent {0} not divisible by {1}")]
    NonDivisibleExponent(i64, u64),

    #[error("polynomial is reducible: {0}")]
    ReduciblePolynomial(String),

    #[error("irreducibility test unsupported in this configuration: {0}")]
    UnsupportedIrreducibility(String),

    #[error("inseparable polynomial where a separable one is required: {0}")]
    InseparablePolynomial(String),

    #[error("duplicate label {0}")]
    DuplicateLabel(String),

    #[error("no embedding of residue fields: {0}")]
    NoEmbedding(String),

    #[error("zero polynomial has no value")]
    ZeroPolynomial,

    #[error("ratio has nonzero value; residue undefined")]
    NonzeroValue,

    #[error("zero input")]
    ZeroInput,

    #[error("element lies in the base field")]
    ElementInBaseField,

    #[error("witness search did not terminate within {0} reductions")]
    WitnessSearchOverflow(usize),

    #[error("descriptor outside the certified catalog: {0}")]
    OutsideCatalog(String),

    #[error("step precondition could not be verified: {0}")]
    UnverifiableStep(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("generator does not lie in the declared subfield: {0}")]
    GeneratorOutsideSubfield(String),

    #[error("unsupported field configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("unknown suite lemma id {0:?}")]
    UnknownLemmaId(String),

    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, KernelError>;
