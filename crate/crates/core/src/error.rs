use thiserror::Error;

use crate::coloring::ColorId;
use crate::grid::Vec2;
use crate::perfect::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("degenerate lattice: {0}")]
    DegenerateLattice(String),

    #[error("coloring is not perfect: {0}")]
    NotPerfect(Box<Violation>),

    #[error("colors {a} and {b} are not twins: rows differ in column {column}")]
    NotTwins { a: ColorId, b: ColorId, column: ColorId },

    #[error("unknown color {0}")]
    UnknownColor(String),

    #[error("modulus {modulus} is incompatible with period {vector}")]
    IncompatibleModulus { modulus: i64, vector: Vec2 },

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
