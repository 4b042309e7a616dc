use thiserror::Error;

use crate::presentation::parser::ParseError;

/// Errors raised by the algebra, module and mutation machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid modulus {0}: must be a prime below 2^31")]
    InvalidPrime(u64),

    #[error("field of order {prime} is too small for a module of dimension {dim}")]
    FieldTooSmall { prime: u32, dim: usize },

    #[error("algebra `{algebra}`: ideal not admissible, paths of length {length} survive")]
    NotAdmissible { algebra: String, length: usize },

    #[error("algebra `{algebra}`: path space exceeds {limit} paths before the ideal closes")]
    PathSpaceTooLarge { algebra: String, limit: usize },

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("failed to split a module with non-local endomorphism ring (dimension {dim})")]
    DecompositionFailure { dim: usize },

    #[error("module is not projective: {0}")]
    NotProjective(String),

    #[error("mutation produced {0} exchange summands, expected at most one")]
    MutationAmbiguous(usize),

    #[error("Hasse quiver exceeds the node cap of {0}")]
    NodeCapExceeded(usize),

    #[error("not a split extension: {0}")]
    NotSplit(String),

    #[error("bad embedding: {0}")]
    BadEmbedding(String),

    #[error("arrow correspondence broken: {0}")]
    MismatchedArrow(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
