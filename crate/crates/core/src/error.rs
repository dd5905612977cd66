use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial is not a valid input")]
    ZeroPolynomial,
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be squarefree")]
    NotSquarefree,
    #[error("polynomial must be primitive (content 1)")]
    NotPrimitive,
    #[error("degree {0} exceeds the supported limit {1}")]
    DegreeLimit(usize, usize),
    #[error("matrix must be square, got {0}x{1}")]
    NonSquareMatrix(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension g must satisfy 1 <= g <= {max}, got {got}")]
    BadDimension { got: usize, max: usize },
    #[error("coefficient vector has length {got}, expected {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("polynomial violates the functional-equation symmetry for p={0}")]
    SymmetryViolated(u64),
    #[error("polynomial is not a Weil polynomial for p={0}")]
    NotWeil(u64),
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("ordinary input required: gcd(a_g, p) must be 1")]
    NotOrdinary,
    #[error("discriminant must be negative and congruent to 0 or 1 mod 4, got {0}")]
    BadDiscriminant(i64),
    #[error("trace a={a} is not an ordinary trace for p={p}")]
    BadTrace { p: u64, a: i64 },
    #[error("p must be a prime >= 5 for the curve census, got {0}")]
    UnsupportedPrime(u64),
    #[error("enumeration budget exceeded: |Y_g| = {size} > {budget}")]
    BudgetExceeded { size: String, budget: u64 },
    #[error("interval endpoints must satisfy lo < hi")]
    EmptyInterval,
    #[error("at least two points are required")]
    TooFewPoints,
    #[error("parameter {name}={got} outside supported range [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        got: usize,
        lo: usize,
        hi: usize,
    },
    #[error("epsilon must be a positive rational u/v with v dividing 4")]
    BadEpsilon,
    #[error("interpolated discriminant has degree above the expected bound")]
    InterpolationDegree,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
