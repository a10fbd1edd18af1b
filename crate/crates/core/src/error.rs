use thiserror::Error;

/// Errors raised by field construction, polynomial algebra, code
/// construction, and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("extension degree m must be positive")]
    ZeroDegree,
    #[error("field size q = {q} exceeds the configured cap {cap}")]
    SizeBound { q: u64, cap: u64 },
    #[error("cannot factor {0} within the configured bounds; field too large")]
    FactorizationFailed(u64),
    #[error("coefficient vector is not a valid element of this field")]
    BadCoefficients,
    #[error("zero has no quadratic character")]
    ZeroCharacter,
    #[error("element is not a square")]
    NonSquare,
    #[error("division by zero field element")]
    DivisionByZero,

    #[error("set contains duplicate elements")]
    DuplicateElements,
    #[error("element is not a member of the set")]
    NotInSet,
    #[error("sets are not disjoint")]
    OverlappingSets,
    #[error("e * f = {e} * {f} does not equal q - 1 = {q1}")]
    SubgroupOrder { e: u64, f: u64, q1: u64 },
    #[error("representatives {0} and {1} generate the same coset")]
    RepeatedCoset(usize, usize),

    #[error("evaluation set size must be even, got {0}")]
    OddEvaluationSet(usize),
    #[error("evaluation set size must be odd, got {0}")]
    EvenEvaluationSet(usize),
    #[error("criterion violated: points {i} and {j} have different characters")]
    MixedCharacter { i: usize, j: usize },
    #[error("criterion violated at evaluation point {index}")]
    CharacterViolation { index: usize },
    #[error("omega vanishes at evaluation point {index}")]
    OmegaRoot { index: usize },
    #[error("omega has degree {got:?} but the bound is {bound}")]
    OmegaDegree { got: Option<usize>, bound: usize },
    #[error("omega must have leading coefficient -1 at degree {expected}")]
    OmegaShape { expected: usize },
    #[error("dimension k = {k} is out of range 1..={max}")]
    DimensionRange { k: usize, max: usize },
    #[error("evaluation set must not contain zero")]
    ZeroInSet,
    #[error("operation is not defined for extended codes")]
    ExtendedUnsupported,
    #[error("invalid code definition: {0}")]
    BadCode(&'static str),
    #[error("exported field does not match the canonical construction for (p, m)")]
    FieldMismatch,

    #[error("invalid parameters: {}", issues.join("; "))]
    InvalidParams { issues: Vec<String> },
    #[error("variant {variant} does not apply: {reason}")]
    VariantNotApplicable { variant: String, reason: String },

    #[error("q = {0} is not the square of an odd prime power")]
    NotOddSquare(u64),
    #[error("work bound exceeded (cap {cap})")]
    CapExceeded { cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
