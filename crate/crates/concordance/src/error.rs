use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors across the computation chain.
///
/// Everything except [`Error::Consistency`] reports invalid input;
/// `Consistency` means an internal cross-check failed and signals a bug, never
/// a bad argument.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates an operation precondition.
    #[error("invalid input: {0}")]
    Precondition(String),

    /// `a` is not invertible modulo `modulus`, so the congruence has no solution.
    #[error("no solution: {a} is not invertible modulo {modulus}")]
    NoInverse { a: i128, modulus: u64 },

    /// Continued-fraction evaluation hit a zero intermediate denominator.
    #[error("continued-fraction evaluation hit a zero intermediate denominator")]
    ZeroDenominator,

    /// The intersection form has even determinant, so no unique Wu class exists.
    #[error("no unique Wu class: intersection form has even determinant")]
    EvenDeterminant,

    /// An internal consistency check failed.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit status the command-line interface maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 3,
            _ => 2,
        }
    }
}
