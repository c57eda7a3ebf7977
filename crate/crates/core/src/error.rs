use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {allowed}")]
    InvalidRank {
        family: char,
        rank: usize,
        allowed: &'static str,
    },

    #[error("unknown group name {0:?}")]
    UnknownGroup(String),

    #[error("unknown subgroup {name:?} for {group}; valid names: {valid}")]
    UnknownSubgroup {
        group: String,
        name: String,
        valid: String,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not in the coweight lattice")]
    NotInCoweightLattice,

    #[error("weight {labels:?} is not in the level {level} alcove")]
    OutsideAlcove { labels: Vec<i64>, level: u32 },

    #[error("central element {0} is not in the subgroup")]
    NotInSubgroup(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("structurally invalid commutator table: {0}")]
    StructurallyInvalid(String),

    #[error("level {level} is not a multiple of the basic level {basic}")]
    NotMultipleOfBasicLevel { level: u32, basic: u32 },

    #[error("inapplicable: {0}")]
    Inapplicable(String),

    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
