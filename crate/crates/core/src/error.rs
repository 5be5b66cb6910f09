use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),

    #[error("Cartan matrix is decomposable; only simple (connected) diagrams are supported")]
    Reducible,

    #[error("unknown algebra type `{0}`")]
    UnknownType(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("set of roots is not a positive system: {0}")]
    NotPositiveSystem(String),

    #[error("positive system does not contain the compact positive roots")]
    DoesNotContainCompactPositive,

    #[error("root {0} does not decompose integrally in the given simple system")]
    BasisDecompositionFailure(String),

    #[error("subset Γ is not contained in the simple system")]
    GammaNotSubset,

    #[error("functional is not dominant for the compact positive roots: {0}")]
    NotDominant(String),

    #[error("class is not a discrete series class")]
    NotDiscreteSeries,

    #[error("unrecognized Dynkin diagram")]
    UnrecognizedDiagram,

    #[error("Weyl group exceeds the configured bound of {0} elements")]
    WeylGroupTooLarge(usize),

    #[error("noncompact simple root list is empty")]
    EmptyColoring,
}

pub type Result<T> = std::result::Result<T, Error>;
