use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("set is not invariant under the group")]
    NotInvariant,

    #[error("group is not transitive on the domain")]
    NotTransitive,

    #[error("generator does not permute the given cells")]
    CellsNotPermuted,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("required edges contain a cycle")]
    CycleInRequiredEdges,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("cover would have {vertices} vertices, above the cap of {cap}")]
    CoverTooLarge { vertices: u128, cap: usize },

    #[error("induced voltage map is not invertible")]
    NotInvertible,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
