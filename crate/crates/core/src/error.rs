use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("dimension {requested} outside the admissible range {min}..={max}")]
    Dimension { requested: i64, min: i64, max: i64 },
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("complex is not pure")]
    Purity,
    #[error("two facets share more than one vertex")]
    NotIncidenceLike,
    #[error("{0} is not a prime modulus")]
    InvalidModulus(u64),
    #[error("polynomial `{0}` is not homogeneous")]
    Homogeneity(String),
    #[error("generator `{0}` is not a monomial")]
    NotMonomial(String),
    #[error("ideal is not generated in a single degree")]
    Equigeneration,
    #[error("expected {expected} forms, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("ideal is not artinian (quotient nonzero through degree {0})")]
    NotArtinian(u32),
    #[error("improper coloring: {0}")]
    Coloring(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("value out of range: {0}")]
    Range(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidComplex(_) => "invalid_complex",
            Error::Dimension { .. } => "dimension",
            Error::NotAFace(_) => "not_a_face",
            Error::Purity => "purity",
            Error::NotIncidenceLike => "not_incidence_like",
            Error::InvalidModulus(_) => "invalid_modulus",
            Error::Homogeneity(_) => "homogeneity",
            Error::NotMonomial(_) => "not_monomial",
            Error::Equigeneration => "equigeneration",
            Error::Arity { .. } => "arity",
            Error::NotArtinian(_) => "not_artinian",
            Error::Coloring(_) => "coloring",
            Error::Hypothesis(_) => "hypothesis",
            Error::Range(_) => "range",
            Error::Input(_) => "input",
            Error::Parse(_) => "parse",
        }
    }
}
