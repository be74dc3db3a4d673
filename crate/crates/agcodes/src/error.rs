use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("field size {q} exceeds the supported limit of 2^20")]
    FieldTooLarge { q: u64 },

    #[error("invalid modulus: {0}")]
    BadModulus(String),

    #[error("no monic irreducible of degree {e} over GF({p}) has x as a primitive root")]
    NoPrimitiveModulus { p: u32, e: u32 },

    #[error("element index {index} out of range for a field with {q} elements")]
    ElementOutOfRange { index: u64, q: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid curve: {0}")]
    BadCurve(String),

    #[error("point {0} does not lie on the curve")]
    PointOffCurve(String),

    #[error("invalid support: {0}")]
    BadSupport(String),

    #[error("m = {m} is outside the valid range {lo}..={hi}")]
    MOutOfRange { m: usize, lo: usize, hi: usize },

    #[error("no basis function has pole order exactly {0}; pick m avoiding gap orders")]
    GapOrder(usize),

    #[error("support is not fiber-complete: {0}")]
    FiberIncomplete(String),

    #[error("construction not available: {0}")]
    Unsupported(String),

    #[error("computed dual rows are not orthogonal to the code; construction inputs are inconsistent")]
    NotOrthogonal,

    #[error("enumeration of {count} vectors exceeds the limit of {limit}")]
    EnumerationTooLarge { count: u128, limit: u128 },

    #[error("syndrome space needs {needed} bytes (two bitmaps), over the budget of {budget} bytes; raise --bitmap-budget")]
    BitmapBudget { needed: u128, budget: u64 },

    #[error("coset enumeration stopped at weight cap {cap} with {covered} of {total} syndromes covered")]
    CoverageIncomplete { cap: usize, covered: u64, total: u64 },

    #[error("the zero code has no minimum distance")]
    ZeroCode,

    #[error("MacWilliams transform produced a non-integer count; input was not a weight distribution")]
    NonIntegerTransform,

    #[error("unknown example id {0:?}; run `agcodes reproduce --list` for the catalog")]
    UnknownExample(String),

    #[error("invalid artifact: {0}")]
    Artifact(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
