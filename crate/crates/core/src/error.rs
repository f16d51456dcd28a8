//! Crate-wide error type.

use crate::verify::CoverageReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("symbol {value} out of range for alphabet of size {q}")]
    SymbolOutOfRange { value: u32, q: u32 },
    #[error("sequence must contain at least one symbol")]
    EmptySequence,
    #[error("sequence code must contain at least one member")]
    EmptyCode,
    #[error("code members must share one alphabet (found q={0} and q={1})")]
    MixedAlphabets(u32, u32),
    #[error("radius {r} exceeds tuple length {n}")]
    RadiusExceedsLength { r: u32, n: u32 },
    #[error("exact integer arithmetic overflowed")]
    ArithmeticOverflow,
    #[error("tuple space of {required} states exceeds the verification budget of {budget} (override with a larger budget)")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("codeword set is empty")]
    EmptyCodewordSet,
    #[error("field `{field}` is malformed: {detail}")]
    Parse { field: String, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("polynomial {0} is reducible")]
    ReduciblePolynomial(String),
    #[error("polynomial {0} is irreducible but not primitive")]
    NotPrimitive(String),
    #[error("polynomial must have degree at least 1")]
    DegreeZero,
    #[error("polynomial must satisfy c_0 = c_n = 1, got {0}")]
    BadPolynomialShape(String),
    #[error("initial state must be a nonzero {0}-tuple")]
    ZeroInitState(u32),
    #[error("initial state length {got} does not match polynomial degree {degree}")]
    InitLengthMismatch { got: usize, degree: u32 },
    #[error("coefficient c_{index} must be 0 for radius {r} (requires c_i = 0 for 1 <= i <= {span})")]
    CoefficientNotZero { index: u32, r: u32, span: u32 },
    #[error("generator {g} does not divide x^{n} + 1")]
    NotADivisor { g: String, n: u32 },
    #[error("seed words must have equal length, got {0} and {1}")]
    SeedLengthMismatch(usize, usize),
    #[error("seed words must differ exactly in the last bit")]
    SeedDifference,
    #[error("sequence lengths {0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("window lengths must satisfy |n1 - n2| <= 1, got n1={0}, n2={1}")]
    WindowLengthConstraint(u32, u32),
    #[error("window area {m}x{n} does not match the sequence's declared window length {declared}")]
    WindowAreaMismatch { m: u32, n: u32, declared: u32 },
    #[error("constructed object failed verification at its declared parameters: R*={rstar}, {uncovered} tuple(s) uncovered", rstar = .0.achieved_radius, uncovered = .0.uncovered_count)]
    VerificationFailed(Box<CoverageReport>),
    #[error("no catalog sequence for (n={n}, R={r}, variant {variant})")]
    UnknownSeed { n: u32, r: u32, variant: u32 },
    #[error("{0}")]
    Unsupported(String),
}
