use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),

    #[error("a pomset needs at least one point")]
    EmptyPomset,

    #[error("block structure: {0}")]
    InvalidBlocks(String),

    #[error("invalid pomset relation: {0}")]
    InvalidRelation(String),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("not a submset of the pomset carrier: {0}")]
    NotSubmset(String),

    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u32, modulus: u32 },

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("degenerate code: need at least two codewords")]
    DegenerateCode,

    #[error("instance too large: {size} exceeds enumeration budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },

    #[error("pomset is not a chain")]
    NotAChain,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("expected a rational integer, got {0}")]
    NonInteger(String),

    #[error("sum identity: {0}")]
    InvalidParts(String),
}

pub type Result<T> = std::result::Result<T, Error>;
