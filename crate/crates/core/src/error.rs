use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LsError {
    #[error("order relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point `{label}` in {field}")]
    UnknownPoint { field: String, label: String },
    #[error("point index {index} out of range for a space with {len} points")]
    PointOutOfRange { index: usize, len: usize },
    #[error("space has {0} points; at most {max} are supported", max = crate::finspace::MAX_POINTS)]
    TooManyPoints(usize),
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not open")]
    NotOpen,
    #[error("map is not order preserving: {0}")]
    NotContinuous(String),
    #[error("maps do not share domain and codomain")]
    MapMismatch,
    #[error("homotopy search undecided after exploring {explored} maps")]
    Undecided { explored: usize },
    #[error("oracle bound exceeded: {candidates} candidate maps, bound {bound}")]
    OracleBound { candidates: f64, bound: u64 },
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for LsError {
    fn from(err: serde_json::Error) -> Self {
        LsError::Json {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = LsError> = std::result::Result<T, E>;
