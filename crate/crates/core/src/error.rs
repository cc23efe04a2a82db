use alloc::string::String;

/// Errors raised by the constructions in this crate.
///
/// `InvalidShape`, `InvalidDegrees`, `PartitionSizeMismatch`, `NotInCone`,
/// `NotARoofEdge` and `NotFeasible` signal bad input. The remaining variants
/// mean a certificate did not verify, which points at a construction bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid flag shape: {0}")]
    InvalidShape(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("edge {0} is not a roof edge")]
    NotARoofEdge(usize),
    #[error("functional is not in the dual cone: {0}")]
    NotInCone(String),
    #[error("reflexivity certificate failed: {0}")]
    ReflexivityFailure(String),
    #[error("cone is not unimodular: {0}")]
    UnimodularityFailure(String),
    #[error("cone is not contained in its facet cone: {0}")]
    ContainmentFailure(String),
    #[error("conifold normal form failed for box {0}")]
    NormalFormFailure(usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("functional identity failed: {0}")]
    FunctionalMismatch(String),
    #[error("truncation order {given} is below the required {required}")]
    TruncationTooSmall { given: u32, required: u32 },
    #[error("invalid degree vectors: {0}")]
    InvalidDegrees(String),
    #[error("roof {roof} has {actual} edges but the degrees ask for {expected}")]
    PartitionSizeMismatch {
        roof: usize,
        expected: usize,
        actual: usize,
    },
    #[error("no Calabi-Yau complete intersection 3-fold: {0}")]
    NotFeasible(String),
}

impl Error {
    /// True for failures of internal certificates, as opposed to bad input.
    pub fn is_certificate_failure(&self) -> bool {
        matches!(
            self,
            Error::Consistency(_)
                | Error::ReflexivityFailure(_)
                | Error::UnimodularityFailure(_)
                | Error::ContainmentFailure(_)
                | Error::NormalFormFailure(_)
                | Error::FunctionalMismatch(_)
        )
    }
}

pub type Result<T> = core::result::Result<T, Error>;
