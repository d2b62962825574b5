//! The Heisenberg group H = V × ℤ/nℤ over ℤ/nℤ (n odd), V = (ℤ/nℤ)² with
//! the standard symplectic form ω((t,w),(t′,w′)) = tw′ − wt′, together with
//! its standard realization π on functions on ℤ/nℤ and a commutant-dimension
//! oracle for irreducibility.
//!
//! Multiplication is the central extension law
//! (v, z)·(v′, z′) = (v + v′, z + z′ + ½ω(v, v′)), with ½ = inv(2 mod n).
//!
//! In the delta basis the generator operators are
//!   π(t,0,0): cyclic shift, π(0,w,0) = diag(ψ(wx)), π(0,0,z) = ψ(z)·Id,
//! and the closed form for a general point follows from the group law
//! (t,0,0)·(0,w,0) = (t,w,½tw):
//!   π(t,w,z) f(x) = ψ(wx + ½tw + z) · f(x + t).
//! Operators act on column vectors; composition π(a)π(b) applies π(b) first.

use std::fmt;

use crate::matrix::OpMatrix;
use crate::residue::Residue;
use crate::scalar::Scalar;
use crate::sl2::Sl2Elem;
use crate::solve::monomial_intertwiner_solve;
use crate::Result;

/// A point (t, w, z) of the Heisenberg group over ℤ/nℤ.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeisPoint {
    pub t: Residue,
    pub w: Residue,
    pub z: Residue,
}

impl fmt::Debug for HeisPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}) mod {}", self.t, self.w, self.z, self.modulus())
    }
}

impl HeisPoint {
    pub fn new(t: Residue, w: Residue, z: Residue) -> Self {
        assert!(
            t.modulus() == w.modulus() && t.modulus() == z.modulus(),
            "coordinates must share a modulus"
        );
        HeisPoint { t, w, z }
    }

    pub fn from_ints(t: i64, w: i64, z: i64, n: u64) -> Self {
        HeisPoint::new(Residue::new(t, n), Residue::new(w, n), Residue::new(z, n))
    }

    pub fn identity(n: u64) -> Self {
        HeisPoint::from_ints(0, 0, 0, n)
    }

    pub fn modulus(&self) -> u64 {
        self.t.modulus()
    }

    pub fn is_central(&self) -> bool {
        self.t.is_zero() && self.w.is_zero()
    }

    /// Group inverse (−v, −z).
    pub fn inv(&self) -> HeisPoint {
        HeisPoint { t: -self.t, w: -self.w, z: -self.z }
    }
}

/// The symplectic form ω((t,w),(t′,w′)) = tw′ − wt′.
pub fn omega(v1: (Residue, Residue), v2: (Residue, Residue)) -> Residue {
    v1.0 * v2.1 - v1.1 * v2.0
}

/// Heisenberg multiplication (v,z)·(v′,z′) = (v+v′, z+z′+½ω(v,v′)).
pub fn h_mul(h1: &HeisPoint, h2: &HeisPoint) -> Result<HeisPoint> {
    if h1.modulus() != h2.modulus() {
        return Err(crate::Error::ModulusMismatch(h1.modulus(), h2.modulus()));
    }
    let half = Residue::half(h1.modulus());
    let twist = half * omega((h1.t, h1.w), (h2.t, h2.w));
    Ok(HeisPoint {
        t: h1.t + h2.t,
        w: h1.w + h2.w,
        z: h1.z + h2.z + twist,
    })
}

/// SL₂ acts on the V-coordinate as a column vector; the center is fixed.
/// This is an action by group automorphisms.
pub fn sl2_act(g: &Sl2Elem, h: &HeisPoint) -> Result<HeisPoint> {
    if g.modulus() != h.modulus() {
        return Err(crate::Error::ModulusMismatch(g.modulus(), h.modulus()));
    }
    let (t, w) = g.mat().apply(h.t, h.w);
    Ok(HeisPoint { t, w, z: h.z })
}

/// The matrix of π(t,w,z) in the delta basis for the central character ψ_a:
/// entries M[x′][x] = ψ_a(w·x′ + ½tw + z) at x = x′ + t, zero elsewhere.
pub(crate) fn pi_matrix_with_character<S: Scalar>(h: &HeisPoint, a: u64) -> OpMatrix<S> {
    let n = h.modulus();
    let half = Residue::half(n);
    let constant = half * h.t * h.w + h.z;
    let mut m = OpMatrix::zeros(n as usize, n as usize);
    for xp in 0..n {
        let xprime = Residue::new(xp as i64, n);
        let x = (xprime + h.t).value() as usize;
        let phase = h.w * xprime + constant;
        m.set(
            xp as usize,
            x,
            S::root_of_unity(n, (a % n * phase.value() % n) as i64),
        );
    }
    m
}

/// The matrix of π(t,w,z) for the standard character ψ₁.
pub fn pi_matrix<S: Scalar>(h: &HeisPoint) -> OpMatrix<S> {
    pi_matrix_with_character(h, 1)
}

/// Dimension of the commutant of {π(1,0,0), π(0,1,0), π(0,0,1)}, computed by
/// solving the linear system M·π(h) = π(h)·M exactly. A 1-dimensional
/// commutant is irreducibility in operator form.
pub fn commutant_dim(n: u64) -> Result<usize> {
    assert!(n >= 3 && n % 2 == 1, "commutant_dim requires odd n >= 3");
    let gens = [
        HeisPoint::from_ints(1, 0, 0, n),
        HeisPoint::from_ints(0, 1, 0, n),
        HeisPoint::from_ints(0, 0, 1, n),
    ];
    let constraints: Vec<_> = gens
        .iter()
        .map(|h| {
            let m = pi_matrix::<crate::cyclo::CycloNum>(h);
            (m.clone(), m)
        })
        .collect();
    let (dim, _) = monomial_intertwiner_solve(n as usize, &constraints)?;
    Ok(dim)
}
