use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different structures, or a value is not in its carrier.
    #[error("structural error: {0}")]
    Structural(String),

    /// Inputs outside the domain of an operation (non-positive unit, inverse of -inf, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive mode was requested on an infinite carrier.
    #[error("mode error: {0}")]
    Mode(String),

    /// The construction is only defined on representations this crate does not model.
    #[error("unsupported representation: {0}")]
    Unsupported(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    /// A candidate morphism fails to preserve the operations.
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    /// Restriction to theta left the target set.
    #[error("broken homomorphism: {0}")]
    BrokenHom(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("no witness found: {0}")]
    WitnessNotFound(String),

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
