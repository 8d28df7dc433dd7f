use thiserror::Error;

/// Everything that can go wrong before a verification report is produced.
///
/// Verification *failures* (an axiom that does not hold, an overlap that does
/// not resolve) are not errors; they are entries in the corresponding report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic 2 is not supported: the sign rule degenerates and 1/2 is needed")]
    CharacteristicTwo,

    #[error("{0} is not an odd prime")]
    NotPrime(u64),

    #[error("characteristic {p} is not supported for {what}; need characteristic 0 or p > {bound}")]
    UnsupportedCharacteristic { p: u64, bound: usize, what: String },

    #[error("invalid scalar literal {literal:?}: {reason}")]
    InvalidScalar { literal: String, reason: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unknown basis symbol {0:?}")]
    UnknownSymbol(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("not a Hopf superalgebra: {0}")]
    NotHopf(String),

    #[error("not super-cocommutative: {0}")]
    NotCocommutative(String),

    #[error("not super-commutative: {0}")]
    NotCommutative(String),

    #[error("invalid pair: {0}")]
    InvalidPair(String),

    #[error("characteristic 3 is rejected for Lie superalgebra input: there the cyclic identity no longer implies v ◁ [v,v] = 0")]
    CharacteristicThreeLie,

    #[error("Lie superalgebra axiom fails: {0}")]
    LieAxiom(String),

    #[error("rewriting step did not decrease the word order: {0}")]
    OrderViolation(String),

    #[error("structure map does not restrict to the subspace: {0}")]
    RestrictionFailure(String),

    #[error("morphism is not injective: {0}")]
    NotInjective(String),

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
