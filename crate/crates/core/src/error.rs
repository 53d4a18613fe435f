use thiserror::Error;

use crate::dg::ValidationReport;
use crate::field::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: String, expected: usize, found: usize },

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("map is not homogeneous of degree {degree}: entry ({row}, {col}) crosses degrees")]
    NotHomogeneous { degree: i64, row: usize, col: usize },

    #[error("inclusion is not injective")]
    NotInjective,

    #[error("{0}")]
    Axioms(ValidationReport),

    #[error("inner differential element must be homogeneous of degree 1")]
    BadInnerElement,

    #[error("inner differential does not square to zero: d^2(b{witness}) = z^2 b - b z^2 = {value}")]
    NotSquareZero { witness: usize, value: String },

    #[error("good grading for {n}x{n} matrices needs {expected} entries, got {found}")]
    BadGradingLength { n: usize, expected: usize, found: usize },

    #[error("matrix size must be at least 1")]
    EmptyMatrixAlgebra,

    #[error("the complex is zero")]
    ZeroComplex,

    #[error("algebra is not central simple")]
    NotCentralSimple,

    #[error("no diagonal idempotent e with Ae not contained in Ad(e): {0:?}")]
    NoSuitableIdempotent(Vec<crate::brauer::Containment>),

    #[error("semisimplicity is undecidable by the available methods for this algebra")]
    Indeterminate,

    #[error("quaternion algebras need characteristic different from 2")]
    CharacteristicTwo,

    #[error("quaternion parameters must be nonzero")]
    ZeroParameter,

    #[error("modules are over different algebras")]
    AlgebraMismatch,

    #[error("construction failed verification: {0}")]
    VerificationFailed(String),
}
