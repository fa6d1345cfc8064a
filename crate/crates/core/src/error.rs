use crate::quiver::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow {0:?}")]
    DuplicateArrow(String),
    #[error("path does not compose: {0}")]
    NotComposable(String),
    #[error("a truncation exponent is required for quivers with oriented cycles")]
    MissingTruncation,
    #[error("invalid bound quiver: {0}")]
    Invalid(ValidationReport),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parallel class ({from}, {to}) has {count} paths in play, above the cap of {cap}")]
    ClassTooLarge { from: String, to: String, count: usize, cap: usize },
    #[error("generator {index} vanishes modulo {modulus}")]
    DegenerateModP { index: usize, modulus: u64 },
    #[error("invalid substitution: {0}")]
    Substitution(String),
    #[error("glue-safety violated: {0}")]
    GlueSafety(String),
    #[error("invalid group action: {0}")]
    Action(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("malformed group expression: {0}")]
    Expression(String),
}
