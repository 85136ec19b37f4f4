use thiserror::Error;

/// Errors produced by the semigroup routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a numerical semigroup: gcd of {gens:?} is {gcd}, not 1")]
    NotNumericalSemigroup { gens: Vec<u64>, gcd: u64 },

    #[error("empty generator set")]
    EmptyGenerators,

    #[error("generators must be positive")]
    ZeroGenerator,

    #[error("{0} is not a nonzero element of the semigroup")]
    NotNonzeroMember(u64),

    #[error("{0} is not an element of the semigroup")]
    NotMember(u64),

    #[error("minimal SAT-system defined for saturated semigroups only")]
    NotSaturated,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("conductor below multiplicity impossible (multiplicity {multiplicity}, conductor {conductor})")]
    ConductorBelowMultiplicity { multiplicity: u64, conductor: u64 },

    #[error("conductor {conductor} is congruent to 1 modulo the multiplicity {multiplicity}; c - 1 would be a multiple of the multiplicity")]
    ResidueOne { multiplicity: u64, conductor: u64 },

    #[error("multiplicity must be at least 2, got {0}")]
    MultiplicityTooSmall(u64),

    #[error("{what} = {value} exceeds the configured limit {limit}")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("factorization dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("generator index {index} out of range 1..={embedding_dimension}")]
    IndexOutOfRange {
        index: usize,
        embedding_dimension: usize,
    },

    #[error("empty factorization set")]
    EmptyFactorizationSet,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
