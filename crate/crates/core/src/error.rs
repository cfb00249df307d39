use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field construction
    #[error("{0} is not a prime")]
    NonPrime(u64),
    #[error("characteristic 2 is not supported, p must be odd")]
    EvenCharacteristic,
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus must be monic")]
    NotMonic,
    #[error("field order {0} is larger than this library supports")]
    FieldTooLarge(u64),
    #[error("value {value} is out of range (must be below {bound})")]
    ValueOutOfRange { value: u64, bound: u64 },
    #[error("Frobenius exponent t={t} must satisfy 1 <= t <= m={m}")]
    InvalidExponent { t: u32, m: usize },

    // arithmetic
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a unit of R")]
    NotAUnit(String),

    // skew polynomials
    #[error("polynomials belong to different skew polynomial rings")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeadingCoeff,
    #[error("length {0} is even, the substitution map needs odd length")]
    EvenLength(usize),
    #[error("unit does not satisfy alpha^2 = 1")]
    AlphaNotSelfInverse,
    #[error("unit is not fixed by the automorphism")]
    AlphaNotFixed,
    #[error("polynomial of degree {degree} is not reduced modulo a length-{n} modulus")]
    DegreeTooLarge { degree: usize, n: usize },

    // codes
    #[error("polynomial is not a right divisor of x^{n} - ({beta})")]
    NotARightDivisor { n: usize, beta: String },
    #[error(
        "{0} is not a valid constacyclic unit (must be a nonzero unit fixed by the automorphism)"
    )]
    BadUnit(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("component {0} carries a generator for a different unit")]
    UnitMismatch(usize),
    #[error("vector length {len} is not compatible with index {index}")]
    IndexMismatch { len: usize, index: usize },
    #[error("code is not skew constacyclic for its unit")]
    NotSkewConstacyclic,
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("distance enumeration exceeds the limit of {limit} codewords")]
    EnumerationTooLarge { limit: u64 },
    #[error("automorphism order {k} does not divide the length {n}")]
    OrderDoesNotDivideLength { k: usize, n: usize },
    #[error("component {0} has no generator polynomial")]
    MissingComponentGenerator(usize),
    #[error("idempotent generator needs gcd(n,k) = 1 and gcd(n,q) = 1 (n={n}, k={k}, q={q})")]
    GcdPrecondFailed { n: usize, k: usize, q: u32 },
    #[error("x^n - beta is not squarefree for this component")]
    NotSquarefree,

    // catalog
    #[error("beta must be nonzero")]
    BetaZero,
    #[error("search bound exceeded: {0}")]
    SearchBound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("consistency check failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::EnumerationTooLarge { .. } => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
