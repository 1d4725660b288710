use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not an extended rational")]
    ZeroOverZero,
    #[error("{0} is infinite; a finite value is required")]
    Infinite(String),
    #[error("{0} and {1} do not form a Farey pair")]
    NotFareyPair(String, String),
    #[error("matrix {0} is singular")]
    SingularMatrix(String),
    #[error("a continued fraction needs at least one term")]
    EmptySequence,
    #[error("terms must be positive, found {0}")]
    NonPositiveTerm(String),
    #[error("sequence {0} is not standard")]
    NotStandard(String),
    #[error("slot {slot} is outside 1..={n}")]
    SlotOutOfRange { slot: usize, n: usize },
    #[error("{0} is an integer; its funnel is degenerate")]
    DegenerateFunnel(String),
    #[error("{vertex} is not a vertex of the funnel over {base}")]
    NotInFunnel { vertex: String, base: String },
    #[error("empty window: {0}")]
    EmptyWindow(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Parse failures are caller mistakes in syntax; invariant failures are bugs here.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
