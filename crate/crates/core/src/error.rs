use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid field spec {0:?}: expected `q` or `gf:p`")]
    InvalidFieldSpec(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("index must be a positive integer, got {0}")]
    ZeroIndex(u64),

    #[error("fusion law parameters are invalid: {0}")]
    InvalidLawParameters(String),

    #[error("fusion law is malformed: {0}")]
    MalformedLaw(String),

    #[error("{value} is not in the spectrum of the fusion law")]
    NotInSpectrum { value: String },

    #[error("{which} input is not an eigenvector for eigenvalue {eigenvalue} of the axis")]
    NotAnEigenvector { which: &'static str, eigenvalue: String },

    #[error("element does not lie in the uv-part V")]
    NotInV,

    #[error("operation requires characteristic 3, field is {0}")]
    RequiresCharacteristicThree(Field),

    #[error("input has a nonzero sigma-part")]
    HasSigmaPart,

    #[error("sigma form is not symmetric at ({0}, {1})")]
    AsymmetricSigmaForm(usize, usize),

    #[error("baric algebra spec is malformed: {0}")]
    MalformedBaricSpec(String),

    #[error("generator list is empty")]
    NoGenerators,

    #[error("identity failed: {0}")]
    IdentityViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
