use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("SchemaError: {0}")]
    Schema(String),
    #[error("InhomogeneousRelation: relation {relation} mixes {detail}")]
    InhomogeneousRelation { relation: usize, detail: String },
    #[error("NotAdmissible: relation {relation} has a term of length < 2")]
    NotAdmissible { relation: usize },
    #[error("NotLocallyBounded: {0}")]
    NotLocallyBounded(String),
    #[error("WindowTooSmall: {0}")]
    WindowTooSmall(String),
    #[error("NotFreeAction: {0}")]
    NotFreeAction(String),
    #[error("RelationViolated: relation {relation} at vertex {vertex}")]
    RelationViolated { relation: String, vertex: String },
    #[error("DecompositionInconclusive: {0}")]
    DecompositionInconclusive(String),
    #[error("IsoInconclusive: {0}")]
    IsoInconclusive(String),
    #[error("CapExceeded: {0}")]
    CapExceeded(String),
    #[error("ApproximationNotSurjective: {0}")]
    ApproximationNotSurjective(String),
    #[error("HypothesisUnverified: {0}")]
    HypothesisUnverified(String),
    #[error("NotSquareFree: {0}")]
    NotSquareFree(String),
    #[error("AmbientNotClusterTilting: {0}")]
    AmbientNotClusterTilting(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("CarrierMismatch: {0}")]
    CarrierMismatch(String),
    #[error("InvalidArgument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// The typed name surfaced by the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Schema(_) => "SchemaError",
            Error::InhomogeneousRelation { .. } => "InhomogeneousRelation",
            Error::NotAdmissible { .. } => "NotAdmissible",
            Error::NotLocallyBounded(_) => "NotLocallyBounded",
            Error::WindowTooSmall(_) => "WindowTooSmall",
            Error::NotFreeAction(_) => "NotFreeAction",
            Error::RelationViolated { .. } => "RelationViolated",
            Error::DecompositionInconclusive(_) => "DecompositionInconclusive",
            Error::IsoInconclusive(_) => "IsoInconclusive",
            Error::CapExceeded(_) => "CapExceeded",
            Error::ApproximationNotSurjective(_) => "ApproximationNotSurjective",
            Error::HypothesisUnverified(_) => "HypothesisUnverified",
            Error::NotSquareFree(_) => "NotSquareFree",
            Error::AmbientNotClusterTilting(_) => "AmbientNotClusterTilting",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::CarrierMismatch(_) => "CarrierMismatch",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
