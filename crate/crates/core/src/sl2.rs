//! 2×2 matrices over ℤ/nℤ: the general linear kind ([`Mat2`]) and the
//! determinant-one kind ([`Sl2Elem`]), plus the Cayley transform.

use std::fmt;

use crate::error::Error;
use crate::residue::Residue;
use crate::Result;

/// A 2×2 matrix over ℤ/nℤ, row-major [[a, b], [c, d]].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: Residue,
    pub b: Residue,
    pub c: Residue,
    pub d: Residue,
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]] mod {}",
            self.a, self.b, self.c, self.d,
            self.a.modulus()
        )
    }
}

impl Mat2 {
    pub fn new(a: Residue, b: Residue, c: Residue, d: Residue) -> Self {
        assert!(
            a.modulus() == b.modulus() && a.modulus() == c.modulus() && a.modulus() == d.modulus(),
            "entries must share a modulus"
        );
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, n: u64) -> Self {
        Mat2 {
            a: Residue::new(a, n),
            b: Residue::new(b, n),
            c: Residue::new(c, n),
            d: Residue::new(d, n),
        }
    }

    pub fn identity(n: u64) -> Self {
        Mat2::from_ints(1, 0, 0, 1, n)
    }

    pub fn modulus(&self) -> u64 {
        self.a.modulus()
    }

    pub fn det(&self) -> Residue {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Residue {
        self.a + self.d
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            c: self.c + rhs.c,
            d: self.d + rhs.d,
        }
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            c: self.c - rhs.c,
            d: self.d - rhs.d,
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    /// Inverse by the adjugate formula; requires det to be a unit.
    pub fn inv(&self) -> Result<Mat2> {
        let det_inv = self.det().inv().map_err(|_| Error::Singular)?;
        Ok(Mat2 {
            a: self.d * det_inv,
            b: -self.b * det_inv,
            c: -self.c * det_inv,
            d: self.a * det_inv,
        })
    }

    /// Matrix–column-vector action on (t, w).
    pub fn apply(&self, t: Residue, w: Residue) -> (Residue, Residue) {
        (self.a * t + self.b * w, self.c * t + self.d * w)
    }
}

/// An element of SL₂(ℤ/nℤ): a [`Mat2`] with determinant 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sl2Elem(Mat2);

impl fmt::Debug for Sl2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Sl2Elem {
    pub fn new(m: Mat2) -> Result<Self> {
        if m.det() != Residue::one(m.modulus()) {
            return Err(Error::NotUnimodular(m.modulus()));
        }
        Ok(Sl2Elem(m))
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, n: u64) -> Result<Self> {
        Sl2Elem::new(Mat2::from_ints(a, b, c, d, n))
    }

    pub fn identity(n: u64) -> Self {
        Sl2Elem(Mat2::identity(n))
    }

    /// The Weyl element w = [[0, 1], [−1, 0]].
    pub fn weyl(n: u64) -> Self {
        Sl2Elem(Mat2::from_ints(0, 1, -1, 0, n))
    }

    /// Upper unipotent [[1, b], [0, 1]].
    pub fn upper(b: Residue) -> Self {
        let n = b.modulus();
        Sl2Elem(Mat2::new(Residue::one(n), b, Residue::zero(n), Residue::one(n)))
    }

    /// Lower unipotent [[1, 0], [c, 1]].
    pub fn lower(c: Residue) -> Self {
        let n = c.modulus();
        Sl2Elem(Mat2::new(Residue::one(n), Residue::zero(n), c, Residue::one(n)))
    }

    /// diag(a, a⁻¹); requires a to be a unit.
    pub fn torus(a: Residue) -> Result<Self> {
        let n = a.modulus();
        Ok(Sl2Elem(Mat2::new(a, Residue::zero(n), Residue::zero(n), a.inv()?)))
    }

    pub fn mat(&self) -> &Mat2 {
        &self.0
    }

    pub fn modulus(&self) -> u64 {
        self.0.modulus()
    }

    pub fn a(&self) -> Residue {
        self.0.a
    }
    pub fn b(&self) -> Residue {
        self.0.b
    }
    pub fn c(&self) -> Residue {
        self.0.c
    }
    pub fn d(&self) -> Residue {
        self.0.d
    }

    pub fn mul(&self, rhs: &Sl2Elem) -> Sl2Elem {
        Sl2Elem(self.0.mul(&rhs.0))
    }

    /// Inverse [[d, −b], [−c, a]] (adjugate; determinant is 1).
    pub fn inv(&self) -> Sl2Elem {
        Sl2Elem(Mat2 { a: self.0.d, b: -self.0.b, c: -self.0.c, d: self.0.a })
    }

    pub fn neg(&self) -> Sl2Elem {
        Sl2Elem(self.0.neg())
    }

    pub fn pow(&self, e: u32) -> Sl2Elem {
        let mut acc = Sl2Elem::identity(self.modulus());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Componentwise reduction mod m | n (the CRT projection on SL₂).
    pub fn reduce(&self, m: u64) -> Sl2Elem {
        Sl2Elem(Mat2 {
            a: self.0.a.reduce(m),
            b: self.0.b.reduce(m),
            c: self.0.c.reduce(m),
            d: self.0.d.reduce(m),
        })
    }
}

/// Cayley transform κ(g) = (g + I)·(g − I)⁻¹, defined when g − I is
/// invertible. Satisfies κ(g) + I = 2g·(g − I)⁻¹.
pub fn cayley(g: &Sl2Elem) -> Result<Mat2> {
    let n = g.modulus();
    let id = Mat2::identity(n);
    let gm = g.mat();
    let num = gm.add(&id);
    let den = gm.sub(&id);
    if !den.det().is_unit() {
        return Err(Error::Singular);
    }
    Ok(num.mul(&den.inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_element_has_order_four() {
        for n in [3u64, 5, 15] {
            let w = Sl2Elem::weyl(n);
            assert_eq!(w.pow(2), Sl2Elem::identity(n).neg());
            assert_eq!(w.pow(4), Sl2Elem::identity(n));
            assert_eq!(w.mul(&w.inv()), Sl2Elem::identity(n));
        }
    }

    #[test]
    fn determinant_is_enforced() {
        assert!(Sl2Elem::from_ints(1, 1, 1, 1, 5).is_err());
        assert!(Sl2Elem::from_ints(2, 1, 1, 1, 5).is_ok()); // det = 2·1 − 1·1 = 1
        assert!(Sl2Elem::from_ints(2, 1, 1, 3, 5).is_err()); // det = 5 ≡ 0
    }

    #[test]
    fn cayley_examples() {
        // κ(w) = −w
        let w = Sl2Elem::weyl(7);
        let k = cayley(&w).unwrap();
        assert_eq!(k, Mat2::from_ints(0, -1, 1, 0, 7));
        // g = −I gives the zero matrix
        let minus_i = Sl2Elem::identity(7).neg();
        let k0 = cayley(&minus_i).unwrap();
        assert_eq!(k0, Mat2::from_ints(0, 0, 0, 0, 7));
        // identity is singular for the transform
        assert_eq!(cayley(&Sl2Elem::identity(7)), Err(Error::Singular));
    }

    #[test]
    fn cayley_identity_two_g_over_g_minus_i() {
        // κ(g) + I = 2g·(g−I)⁻¹ wherever defined
        let p = 7u64;
        let id = Mat2::identity(p);
        let two = Residue::new(2, p);
        let mut checked = 0;
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                for c in 0..p as i64 {
                    for d in 0..p as i64 {
                        let Ok(g) = Sl2Elem::from_ints(a, b, c, d, p) else { continue };
                        let Ok(k) = cayley(&g) else { continue };
                        let lhs = k.add(&id);
                        let gmi_inv = g.mat().sub(&id).inv().unwrap();
                        let two_g = Mat2 {
                            a: g.a() * two,
                            b: g.b() * two,
                            c: g.c() * two,
                            d: g.d() * two,
                        };
                        assert_eq!(lhs, two_g.mul(&gmi_inv));
                        checked += 1;
                        if checked >= 50 {
                            return;
                        }
                    }
                }
            }
        }
    }
}
