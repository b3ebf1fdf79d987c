use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unsupported algebra kind: {0}")]
    UnsupportedKind(String),

    #[error("invalid size {size} for {kind}")]
    InvalidSize { kind: &'static str, size: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("function undefined at eigenvalue {eigenvalue}")]
    DomainViolation { eigenvalue: f64 },

    #[error("element is not in the cone interior (minimum eigenvalue {min_eigenvalue})")]
    NotInterior { min_eigenvalue: f64 },

    #[error("invalid Jordan frame (residual {residual})")]
    InvalidFrame { residual: f64 },

    #[error("coefficient {index} = {value} lies outside [0, 1]")]
    CoefficientOutOfRange { index: usize, value: f64 },

    #[error("test {index} has {found} outcomes, expected {expected}")]
    NonUniformTests {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("malformed test space: {0}")]
    MalformedTests(String),

    #[error("vertex {index} is not a probability weight (violation {violation})")]
    InvalidVertex { index: usize, violation: f64 },

    #[error("outcome {index} receives zero probability from every state")]
    UnsupportedOutcome { index: usize },

    #[error("conditioning on an outcome of probability {probability}")]
    ZeroProbability { probability: f64 },

    #[error("objects belong to different models")]
    ModelMismatch,

    #[error("operation needs a Jordan backend")]
    NotJordan,

    #[error("operation needs a complex Hermitian backend")]
    UnsupportedBackend,

    #[error("bit classification needs rank 2, found rank {rank}")]
    RankNotTwo { rank: usize },

    #[error("distinguished state for outcome {outcome} gives it probability {value}, not 1")]
    InvalidDistinguishedState { outcome: usize, value: f64 },

    #[error("no self-dualizing inner product supplied for {0}")]
    MissingEtaForm(String),

    #[error("spectral decomposition failed: {0}")]
    SpectralFailure(String),
}

pub type Result<T> = core::result::Result<T, Error>;
