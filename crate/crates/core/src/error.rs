//! Error type shared by all modules.

/// Errors raised by the library.
///
/// Precondition failures carry enough context to identify the offending
/// value; a few variants (e.g. [`Error::DegenerateSolutionSpace`],
/// [`Error::NotFound`]) signal that a mathematical claim failed on inputs
/// where it must hold, which indicates a bug rather than a bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("{0} is not an odd prime")]
    NotPrime(u64),

    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("modulus must be odd, got {0}")]
    EvenModulus(u64),

    #[error("matrix has determinant != 1 modulo {0}")]
    NotUnimodular(u64),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("intertwiner space has dimension {0}, expected 1")]
    DegenerateSolutionSpace(usize),

    #[error("g - I is not invertible")]
    Singular,

    #[error("enumeration of SL2(Z/{0}Z) exceeds the size bound")]
    TooLarge(u64),

    #[error("exhaustive conjugator search failed")]
    NotFound,

    #[error("element is not regular semisimple modulo {0}")]
    NotRegularSemisimple(u64),

    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimMismatch(usize, usize, usize, usize),
}
