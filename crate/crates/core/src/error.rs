use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("wedge product degree {0} exceeds 6")]
    DegreeOverflow(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("rank-{0} tensor is not totally antisymmetric")]
    NotAntisymmetric(usize),
    #[error("axis {axis} out of range for rank {rank}")]
    AxisOutOfRange { axis: usize, rank: usize },
    #[error("axis paired twice in contraction")]
    RepeatedAxis,
    #[error("orientation tuple {0:?} is not a permutation of 1..6")]
    BadOrientation(Vec<usize>),
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid SU(3)-structure: {0}")]
    InvalidStructure(String),
    #[error("no characteristic connection: Nijenhuis tensor is not totally skew-symmetric")]
    NoCharacteristicConnection,
    #[error("almost complex structure is not integrable (N != 0)")]
    NotIntegrable,
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
}

impl Error {
    /// Internal-consistency and theorem errors indicate a bug, not bad input.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::InternalConsistency(_) | Error::TheoremViolation(_))
    }
}
