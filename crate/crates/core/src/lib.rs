//! Exact construction of the finite Weil representation of SL2(ℤ/nℤ) on
//! ℂ(ℤ/nℤ), together with machine checks of the identities that connect it to
//! the discrete Fourier transform: the proportionality F_n = C_n·ρ_n(w), the
//! determinant and character formulas, CRT tensor factorizations, Gauss-sum
//! evaluations, and quadratic reciprocity.
//!
//! Everything runs on one of two scalar backends: [`CycloNum`], an exact
//! element of the cyclotomic field ℚ(ζ_N), or `Complex64` floating pairs.
//! Identities checked on the exact backend are decided by canonical-form
//! equality; the floating backend reports residuals against a tolerance.

pub mod arithmetic;
pub mod cyclo;
pub mod error;
pub mod group_checks;
pub mod heisenberg;
pub mod matrix;
pub mod residue;
pub mod scalar;
pub mod sl2;
pub(crate) mod solve;
pub mod weil;

pub use cyclo::CycloNum;
pub use error::Error;
pub use heisenberg::HeisPoint;
pub use matrix::OpMatrix;
pub use residue::{Factorization, Residue};
pub use scalar::Scalar;
pub use sl2::{Mat2, Sl2Elem};
pub use weil::WeilRep;

/// Convenience alias used throughout: `Result` with this crate's [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
