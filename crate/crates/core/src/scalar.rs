//! The scalar abstraction shared by the exact and floating backends.
//!
//! Every operator matrix is generic over a [`Scalar`]; the identities under
//! test are decided by exact equality on [`CycloNum`] and by residuals on
//! `Complex64`.

use num_complex::Complex64;

use crate::cyclo::CycloNum;

pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    /// Whether equality of values is decidable (exact backend).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    /// ζ_order^exponent, the basic phase every operator entry is built from.
    fn root_of_unity(order: u64, exponent: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation (ζ ↦ ζ⁻¹ on the exact backend).
    fn conj(&self) -> Self;

    fn is_zero(&self) -> bool;
    /// Numerical value, used for reports and floating comparisons.
    fn embed(&self) -> Complex64;

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }
}

impl Scalar for CycloNum {
    const EXACT: bool = true;

    fn zero() -> Self {
        CycloNum::zero()
    }
    fn one() -> Self {
        CycloNum::one()
    }
    fn from_int(v: i64) -> Self {
        CycloNum::from_int(v)
    }
    fn root_of_unity(order: u64, exponent: i64) -> Self {
        CycloNum::root_of_unity(order, exponent)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        CycloNum::inv(self)
    }
    fn conj(&self) -> Self {
        CycloNum::conj(self)
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn embed(&self) -> Complex64 {
        CycloNum::embed(self)
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn root_of_unity(order: u64, exponent: i64) -> Self {
        let k = exponent.rem_euclid(order as i64);
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / order as f64)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn embed(&self) -> Complex64 {
        *self
    }
}
