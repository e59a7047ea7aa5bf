use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad class of a failure, used to pick a process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed configuration or structurally invalid input.
    Config,
    /// Input is well formed but mathematically inadmissible.
    Validation,
    /// Two computations that must agree did not.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // field construction
    #[error("characteristic {0} is not prime")]
    NonPrimeP(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u128),
    #[error("a modulus of degree {0} is required")]
    MissingModulus(u32),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("{0} is not the order of a finite field of odd characteristic")]
    NotAFieldOrder(u64),

    // element / polynomial arithmetic
    #[error("field element encoding {0} out of range")]
    ElementOutOfRange(u64),
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("operation requires a nonconstant polynomial")]
    ConstantInput,
    #[error("enumeration bound must be positive")]
    NonpositiveBound,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolyParse { input: String, reason: String },

    // residue symbols
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("lower entry {0} is not a monic irreducible polynomial")]
    NotPrimeModulus(String),
    #[error("claimed factorization does not multiply to the modulus")]
    BadFactorization,
    #[error("reciprocity needs two distinct primes")]
    EqualPrimes,

    // conductor
    #[error("conductor {0} is not monic")]
    NotMonic(String),
    #[error("conductor must be nonconstant")]
    ConstantConductor,
    #[error("claimed prime {0} is reducible")]
    ReducibleClaimedPrime(String),
    #[error("prime {0} listed more than once")]
    DuplicatePrime(String),
    #[error("exponent of {0} must be at least 1")]
    ZeroExponent(String),

    // pair sets
    #[error("pair set is empty")]
    EmptyPairSet,
    #[error("{0} is not a prime of the conductor")]
    PrimeNotInConductor(String),
    #[error("pair members are equal: {0}")]
    PairMembersEqual(String),
    #[error("duplicate pair ({0}, {1})")]
    DuplicatePair(String, String),
    #[error("wrong orientation: expected P < Q but got ({0}, {1})")]
    WrongOrientation(String, String),
    #[error("bad pair: {0}")]
    BadPair(String),
    #[error("parity consistency needs exactly one pair")]
    OnlySinglePairSupported,

    // consistency
    #[error("genus computation produced a non-integer or negative value: {0}")]
    NonIntegerGenus(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    // config / io
    #[error("config error: {0}")]
    Config(String),
    #[error("a_PQ listing would have {count} raw terms, above the cap {cap}")]
    OutputTooLarge { count: u128, cap: u128 },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NonIntegerGenus(_) | Inconsistent(_) => ErrorKind::Internal,
            NonPrimeP(_)
            | EvenCharacteristic
            | ZeroExtensionDegree
            | FieldTooLarge(_)
            | MissingModulus(_)
            | InvalidModulus(_)
            | NotAFieldOrder(_)
            | ElementOutOfRange(_)
            | PolyParse { .. }
            | EmptyPairSet
            | PrimeNotInConductor(_)
            | PairMembersEqual(_)
            | DuplicatePair(..)
            | WrongOrientation(..)
            | Config(_)
            | OutputTooLarge { .. }
            | Io(_) => ErrorKind::Config,
            _ => ErrorKind::Validation,
        }
    }

    /// Process exit code for the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::Config => 2,
            ErrorKind::Validation => 3,
            ErrorKind::Internal => 4,
        }
    }
}
