//! The Weil representation of SL₂(ℤ/nℤ) on ℂ(ℤ/nℤ) and its relation to the
//! discrete Fourier transform.
//!
//! A [`WeilRep`] fixes a modulus n and a central character ψ_a and owns the
//! non-normalized DFT F_n[ψ_a] together with its proportionality constant
//! C_n[ψ_a], recovered from det(F) through the pair C⁴ = n², Cⁿ = det(F).
//! The representation is assembled on unipotent generators:
//!
//!   ρ(lower c) = diag(ψ(−½cx²)),            ρ(w) = C⁻¹·F,
//!   ρ(upper b) = ρ(w)·ρ(lower −b)·ρ(w)⁻¹    (since w·u₊(b)·w⁻¹ = u₋(−b)),
//!
//! and a general g is the product over a short unipotent word. The lower
//! operator is forced by the intertwining identity on π(t,0,0): conjugating
//! the shift by diag(ψ(−½cx²)) produces ψ(ctx + ½ct²)·f(x+t), which is
//! π(t, ct, 0) — exactly the twist by g = [[1,0],[c,1]]. The suites verify
//! this characterization rather than assume it.
//!
//! An independent oracle ([`WeilRep::intertwiner`]) solves the intertwining
//! equations directly and is compared against the generator construction.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::cyclo::{solve_proportionality_constant, vandermonde_det_product_twisted, CycloNum};
use crate::error::Error;
use crate::heisenberg::{pi_matrix_with_character, sl2_act, HeisPoint};
use crate::matrix::OpMatrix;
use crate::residue::{crt_combine_natural, factorize, gcd, legendre, Residue};
use crate::scalar::Scalar;
use crate::sl2::{cayley, Sl2Elem};
use crate::solve::monomial_intertwiner_solve;
use crate::Result;

/// The non-normalized DFT operator F_n[ψ_a] with entries M[y][x] = ζ_n^(ayx).
/// Symmetric, with F² = n·(flip) and F⁴ = n²·Id.
pub fn dft_matrix<S: Scalar>(n: u64, a: u64) -> Result<OpMatrix<S>> {
    if n > 1 && gcd(a % n, n) != 1 {
        return Err(Error::NotAUnit { value: a % n, modulus: n });
    }
    let nn = n as usize;
    Ok(OpMatrix::from_fn(nn, nn, |y, x| {
        S::root_of_unity(n, ((a % n) * ((y as u64 * x as u64) % n) % n) as i64)
    }))
}

/// The flip permutation f(x) ↦ f(−x).
pub fn flip_matrix<S: Scalar>(n: u64) -> OpMatrix<S> {
    let nn = n as usize;
    OpMatrix::from_fn(nn, nn, |x, y| if (x + y) % nn == 0 { S::one() } else { S::zero() })
}

/// One factor of a unipotent word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordFactor {
    /// [[1, b], [0, 1]]
    Upper(Residue),
    /// [[1, 0], [c, 1]]
    Lower(Residue),
}

impl WordFactor {
    pub fn matrix(&self) -> Sl2Elem {
        match self {
            WordFactor::Upper(b) => Sl2Elem::upper(*b),
            WordFactor::Lower(c) => Sl2Elem::lower(*c),
        }
    }
}

/// An ordered unipotent word whose product reproduces the source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemWord {
    modulus: u64,
    factors: Vec<WordFactor>,
}

impl ElemWord {
    pub fn factors(&self) -> &[WordFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factors in order.
    pub fn product(&self) -> Sl2Elem {
        self.factors
            .iter()
            .fold(Sl2Elem::identity(self.modulus), |acc, f| acc.mul(&f.matrix()))
    }
}

fn push_nonzero(factors: &mut Vec<WordFactor>, f: WordFactor) {
    let zero = match f {
        WordFactor::Upper(b) => b.is_zero(),
        WordFactor::Lower(c) => c.is_zero(),
    };
    if !zero {
        factors.push(f);
    }
}

/// Word for an element with unit lower-left entry:
/// g = u₊((a−1)/c) · u₋(c) · u₊((d−1)/c).
fn unit_c_word(g: &Sl2Elem, factors: &mut Vec<WordFactor>) {
    let c_inv = g.c().inv().expect("caller ensures c is a unit");
    let x = (g.a() - Residue::one(g.modulus())) * c_inv;
    let y = (g.d() - Residue::one(g.modulus())) * c_inv;
    push_nonzero(factors, WordFactor::Upper(x));
    push_nonzero(factors, WordFactor::Lower(g.c()));
    push_nonzero(factors, WordFactor::Upper(y));
}

/// Combine prescribed values modulo the distinct primes of n into one
/// residue mod n (any lift works: only the values mod p matter).
fn crt_over_primes(n: u64, value_at: impl Fn(u64) -> i64) -> Residue {
    let mut acc: Option<Residue> = None;
    for p in factorize(n).primes() {
        let r = Residue::new(value_at(p), p);
        acc = Some(match acc {
            None => r,
            Some(prev) => crt_combine_natural(prev, r).expect("distinct primes are coprime"),
        });
    }
    match acc {
        // any lift from the radical to n preserves the values mod p
        Some(r) => Residue::new(r.value() as i64, n),
        None => Residue::zero(n), // n = 1
    }
}

/// Decomposes g into a word of ≤ 4 unipotent factors. If c is a unit the
/// word is u₊·u₋·u₊ directly; otherwise a prefix u₋(−t) is split off, with
/// t ≡ 0 or 1 per prime p | n chosen so that c + ta is a unit (possible
/// because gcd(a, c, n) = 1 from det g = 1).
pub fn decompose(g: &Sl2Elem) -> ElemWord {
    let n = g.modulus();
    let mut factors = Vec::new();
    if *g == Sl2Elem::identity(n) {
        return ElemWord { modulus: n, factors };
    }
    if *g == Sl2Elem::lower(g.c()) {
        // bare lower unipotent: single factor whether or not c is a unit
        factors.push(WordFactor::Lower(g.c()));
        return ElemWord { modulus: n, factors };
    }
    if g.c().is_unit() {
        unit_c_word(g, &mut factors);
        return ElemWord { modulus: n, factors };
    }
    let t = crt_over_primes(n, |p| if g.c().value() % p == 0 { 1 } else { 0 });
    let shifted = Sl2Elem::lower(t).mul(g);
    debug_assert!(shifted.c().is_unit());
    push_nonzero(&mut factors, WordFactor::Lower(-t));
    unit_c_word(&shifted, &mut factors);
    ElemWord { modulus: n, factors }
}

/// A second valid decomposition, used to exercise word-independence: the
/// unit-making shift is taken as t ≡ (1−c)/a per prime not dividing a
/// (driving c + ta to 1 there) and 0 at primes dividing a.
pub fn decompose_shifted(g: &Sl2Elem) -> ElemWord {
    let n = g.modulus();
    let mut factors = Vec::new();
    if *g == Sl2Elem::identity(n) {
        return ElemWord { modulus: n, factors };
    }
    let t = crt_over_primes(n, |p| {
        if g.a().value() % p == 0 {
            0
        } else {
            let a_inv = Residue::new(g.a().value() as i64, p).inv().expect("unit mod p");
            ((Residue::one(p) - Residue::new(g.c().value() as i64, p)) * a_inv).value() as i64
        }
    });
    let shifted = Sl2Elem::lower(t).mul(g);
    if !shifted.c().is_unit() {
        return decompose(g);
    }
    push_nonzero(&mut factors, WordFactor::Lower(-t));
    unit_c_word(&shifted, &mut factors);
    ElemWord { modulus: n, factors }
}

/// A Weil operator: the group element together with its realized matrix.
#[derive(Clone, Debug)]
pub struct WeilOp<S: Scalar> {
    pub g: Sl2Elem,
    pub matrix: OpMatrix<S>,
}

/// Backend-specific recovery of the proportionality constant C_n[ψ_a].
pub trait WeilScalar: Scalar {
    fn weil_constant(n: u64, a: u64) -> Result<Self>;
}

impl WeilScalar for CycloNum {
    /// det F via the factored Vandermonde product (exact, and fast enough
    /// for composite moduli where elimination is hopeless), then the Bézout
    /// solve of C⁴ = n², Cⁿ = det F.
    fn weil_constant(n: u64, a: u64) -> Result<Self> {
        let d = vandermonde_det_product_twisted(n, a.max(1));
        solve_proportionality_constant(n, &d)
    }
}

impl WeilScalar for Complex64 {
    /// |det F_n| = n^(n/2) overflows f64 for large n, so the determinant is
    /// taken of the unitary F/√n instead: with 4u + nv = 1,
    /// C = (n²)^u·(det F)^v = √n · det(F/√n)^v.
    fn weil_constant(n: u64, a: u64) -> Result<Self> {
        if n == 1 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        let sqrt_n = (n as f64).sqrt();
        let f: OpMatrix<Complex64> = dft_matrix(n, a)?;
        let delta = f.scale(&Complex64::new(1.0 / sqrt_n, 0.0)).det();
        let v: i32 = if n % 4 == 1 { 1 } else { 3 };
        let c = sqrt_n * delta.powi(v);
        debug_assert!((c.powi(4) - (n * n) as f64).norm() < 1e-6 * (n * n) as f64);
        Ok(c)
    }
}

/// The Weil representation of SL₂(ℤ/nℤ) for a central character ψ_a,
/// realized on n×n operator matrices over the chosen scalar backend.
pub struct WeilRep<S: Scalar> {
    n: u64,
    char_a: u64,
    dft: OpMatrix<S>,
    constant: S,
    constant_inv: S,
    weyl: OnceLock<OpMatrix<S>>,
}

impl<S: WeilScalar> WeilRep<S> {
    /// The representation for the standard character ψ₁.
    pub fn new(n: u64) -> Result<Self> {
        WeilRep::with_character(n, 1)
    }

    /// The representation ρ_n[ψ_a]; a must be a unit mod n.
    pub fn with_character(n: u64, a: u64) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::EvenModulus(n));
        }
        let a = if n == 1 { 1 } else { a % n };
        if n > 1 && gcd(a, n) != 1 {
            return Err(Error::NotAUnit { value: a, modulus: n });
        }
        let dft = dft_matrix(n, a)?;
        let constant = S::weil_constant(n, a)?;
        let constant_inv = constant.inv().expect("C is nonzero");
        Ok(WeilRep { n, char_a: a, dft, constant, constant_inv, weyl: OnceLock::new() })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn character(&self) -> u64 {
        self.char_a
    }

    /// F_n[ψ_a].
    pub fn dft(&self) -> &OpMatrix<S> {
        &self.dft
    }

    /// C_n[ψ_a], the scalar with F = C·ρ(w).
    pub fn constant(&self) -> &S {
        &self.constant
    }

    /// ρ(w) = C⁻¹·F; its fourth power is the identity.
    pub fn weyl_op(&self) -> &OpMatrix<S> {
        self.weyl.get_or_init(|| self.dft.scale(&self.constant_inv))
    }

    /// ψ_a-phase ζ_n^(a·e).
    fn phase(&self, e: Residue) -> S {
        S::root_of_unity(self.n, (self.char_a * e.value() % self.n) as i64)
    }

    /// Diagonal of ρ(lower c): x ↦ ψ(−½cx²).
    fn lower_diag(&self, c: Residue) -> Vec<S> {
        let n = self.n;
        let half = Residue::half(n);
        (0..n)
            .map(|x| {
                let xr = Residue::new(x as i64, n);
                self.phase(-(half * c * xr * xr))
            })
            .collect()
    }

    /// ρ of the lower unipotent [[1,0],[c,1]]: diag(ψ(−½cx²)).
    pub fn lower_op(&self, c: Residue) -> OpMatrix<S> {
        assert_eq!(c.modulus(), self.n);
        let d = self.lower_diag(c);
        let nn = self.n as usize;
        OpMatrix::from_fn(nn, nn, |i, j| if i == j { d[i].clone() } else { S::zero() })
    }

    /// ρ of the upper unipotent [[1,b],[0,1]] = ρ(w)·ρ(lower −b)·ρ(w)⁻¹.
    /// Expanding with ρ(w)⁻¹ = (C/n)·(flip)·F collapses the triple product
    /// into the Toeplitz form   n⁻¹·τ(u−v),  τ(k) = Σ_s ψ(½bs² + sk),
    /// so forming it costs O(n²) phase additions, not a matrix product.
    pub fn upper_op(&self, b: Residue) -> OpMatrix<S> {
        assert_eq!(b.modulus(), self.n);
        let n = self.n;
        let nn = n as usize;
        let half = Residue::half(n);
        let mut tau: Vec<S> = Vec::with_capacity(nn);
        for k in 0..n {
            let kr = Residue::new(k as i64, n);
            let mut acc = S::zero();
            for s in 0..n {
                let sr = Residue::new(s as i64, n);
                acc.add_assign(&self.phase(half * b * sr * sr + sr * kr));
            }
            tau.push(acc);
        }
        let n_inv = S::from_int(n as i64).inv().expect("n is nonzero");
        OpMatrix::from_fn(nn, nn, |u, v| tau[(u + nn - v) % nn].mul(&n_inv))
    }

    /// The realized operator for an explicit unipotent word. Lower factors
    /// are absorbed as column scalings, so a standard ≤4-factor word costs
    /// one dense matrix product.
    pub fn rho_from_word(&self, word: &ElemWord) -> OpMatrix<S> {
        assert_eq!(word.modulus, self.n);
        let mut acc: Option<OpMatrix<S>> = None;
        for factor in &word.factors {
            match factor {
                WordFactor::Lower(c) => {
                    let d = self.lower_diag(*c);
                    match &mut acc {
                        Some(m) => m.scale_cols(&d),
                        None => acc = Some(self.lower_op(*c)),
                    }
                }
                WordFactor::Upper(b) => {
                    let u = self.upper_op(*b);
                    acc = Some(match acc {
                        Some(m) => m.mul(&u).expect("square matrices"),
                        None => u,
                    });
                }
            }
        }
        acc.unwrap_or_else(|| OpMatrix::identity(self.n as usize))
    }

    /// ρ(g), built from the standard decomposition of g.
    pub fn rho(&self, g: &Sl2Elem) -> Result<WeilOp<S>> {
        if g.modulus() != self.n {
            return Err(Error::ModulusMismatch(g.modulus(), self.n));
        }
        let word = decompose(g);
        Ok(WeilOp { g: *g, matrix: self.rho_from_word(&word) })
    }

    /// π(h) for this representation's central character.
    pub fn pi(&self, h: &HeisPoint) -> Result<OpMatrix<S>> {
        if h.modulus() != self.n {
            return Err(Error::ModulusMismatch(h.modulus(), self.n));
        }
        Ok(pi_matrix_with_character(h, self.char_a))
    }

    /// The two sides of the intertwining identity for a realized operator:
    /// ρ(g)·π(h) and π(g·h)·ρ(g). They agree exactly on the exact backend.
    pub fn egorov_sides(
        &self,
        op: &WeilOp<S>,
        h: &HeisPoint,
    ) -> Result<(OpMatrix<S>, OpMatrix<S>)> {
        let lhs = op.matrix.mul(&self.pi(h)?)?;
        let rhs = self.pi(&sl2_act(&op.g, h)?)?.mul(&op.matrix)?;
        Ok((lhs, rhs))
    }

    /// Independent construction of ρ(g) up to scale: solves
    /// M·π(h) = π(g·h)·M for h in the generating set {(1,0,0), (0,1,0)}
    /// exactly, checks the solution space is one-dimensional, and returns
    /// the solution normalized so its first nonzero entry is 1.
    pub fn intertwiner(&self, g: &Sl2Elem) -> Result<OpMatrix<S>> {
        if g.modulus() != self.n {
            return Err(Error::ModulusMismatch(g.modulus(), self.n));
        }
        let n = self.n;
        let gens = [HeisPoint::from_ints(1, 0, 0, n), HeisPoint::from_ints(0, 1, 0, n)];
        let mut constraints = Vec::new();
        for h in &gens {
            constraints.push((self.pi(h)?, self.pi(&sl2_act(g, h)?)?));
        }
        let (dim, sol) = monomial_intertwiner_solve(n as usize, &constraints)?;
        if dim != 1 {
            return Err(Error::DegenerateSolutionSpace(dim));
        }
        Ok(sol.expect("dim = 1 yields a solution"))
    }

    /// Computed character value Tr ρ(g) next to the closed-form prediction
    /// (−det(g−I)/p); defined for prime modulus with g − I invertible.
    pub fn character_formula(&self, g: &Sl2Elem) -> Result<(S, i64)> {
        let p = self.n;
        if !crate::residue::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let id = crate::sl2::Mat2::identity(p);
        let gmi = g.mat().sub(&id);
        if !gmi.det().is_unit() {
            return Err(Error::Singular);
        }
        let computed = self.rho(g)?.matrix.trace();
        let predicted = legendre(-(gmi.det().value() as i64), p)?;
        Ok((computed, predicted))
    }

    /// The extended character value Tr(ρ(g)·π(h)). Pass the realized
    /// operator so sweeps over h reuse it.
    pub fn extended_character(&self, op: &WeilOp<S>, h: &HeisPoint) -> Result<S> {
        Ok(op.matrix.mul(&self.pi(h)?)?.trace())
    }

    /// Closed form Tr(ρ(g))·ψ(¼·ω(κ(g)v, v) + z) for v = (t, w); requires
    /// g − I invertible so the Cayley transform κ exists.
    pub fn extended_character_closed_form(&self, g: &Sl2Elem, h: &HeisPoint) -> Result<S> {
        let p = self.n;
        let (_, predicted) = self.character_formula(g)?;
        let kappa = cayley(g)?;
        let quarter = Residue::new(4, p).inv().expect("4 is a unit for odd p");
        let kv = kappa.apply(h.t, h.w);
        let w_val = crate::heisenberg::omega(kv, (h.t, h.w));
        let phase = self.phase(quarter * w_val + h.z);
        Ok(S::from_int(predicted).mul(&phase))
    }
}

/// Both sides of the multiplicativity identity for the extended character:
///
///   ch_τ(g₁·g₂)(h)  =  (1/n) · Σ_(v′) ch_τ(g₁)((v′,0)) · ch_τ(g₂)(g₂⁻¹((v′,0)⁻¹)·h)
///
/// — the convolution twisted by the SL₂ action on H, as dictated by the
/// semidirect-product multiplication (g,h)·(g′,h′) = (gg′, g′⁻¹(h)·h′.
/// Functions ch_τ(g)(·) transform by ψ under the center, so the convolution
/// variable runs over a transversal (v′, 0) of the center and the
/// normalization is 1/dim = 1/n. An untwisted convolution computes
/// ch_τ(g₂·g₁) instead and the identity fails for non-commuting pairs.
pub fn convolution_identity<S: WeilScalar>(
    rep: &WeilRep<S>,
    g1: &Sl2Elem,
    g2: &Sl2Elem,
    h: &HeisPoint,
) -> Result<(S, S)> {
    let n = rep.n();
    let op12 = rep.rho(&g1.mul(g2))?;
    let lhs = rep.extended_character(&op12, h)?;
    let op1 = rep.rho(g1)?;
    let op2 = rep.rho(g2)?;
    let g2_inv = g2.inv();
    let mut acc = S::zero();
    for t in 0..n {
        for w in 0..n {
            let hp = HeisPoint::from_ints(t as i64, w as i64, 0, n);
            let twisted = sl2_act(&g2_inv, &hp.inv())?;
            let shifted = crate::heisenberg::h_mul(&twisted, h)?;
            let term = rep
                .extended_character(&op1, &hp)?
                .mul(&rep.extended_character(&op2, &shifted)?);
            acc.add_assign(&term);
        }
    }
    let rhs = acc.mul(&S::from_int(n as i64).inv().expect("n nonzero"));
    Ok((lhs, rhs))
}

/// The permutation matrix of δ_x ↦ δ_(x mod n₁) ⊗ δ_(x mod n₂) under the
/// row-major pairing (i₁, i₂) ↦ i₁·n₂ + i₂.
pub fn crt_perm_matrix<S: Scalar>(n1: u64, n2: u64) -> Result<OpMatrix<S>> {
    if gcd(n1, n2) != 1 {
        return Err(Error::NotCoprime(n1, n2));
    }
    let n = (n1 * n2) as usize;
    let mut m = OpMatrix::zeros(n, n);
    for x in 0..n1 * n2 {
        let row = (x % n1) * n2 + (x % n2);
        m.set(row as usize, x as usize, S::one());
    }
    Ok(m)
}

/// Checks F_(n₁) ⊗ F_(n₂) = P · F_(n₁n₂)[ψ_(n₁+n₂)] · P⁻¹ and returns the
/// comparison (exact equality flag plus the max entrywise residual).
pub fn tensor_dft_check<S: Scalar>(n1: u64, n2: u64) -> Result<(bool, f64)> {
    let p: OpMatrix<S> = crt_perm_matrix(n1, n2)?;
    let lhs = dft_matrix::<S>(n1, 1)?.kron(&dft_matrix::<S>(n2, 1)?);
    let big = dft_matrix::<S>(n1 * n2, n1 + n2)?;
    let rhs = p.mul(&big)?.mul(&p.transpose())?;
    Ok((lhs == rhs, lhs.residual(&rhs)))
}

/// The scalar λ with P·ρ_(n₁n₂)[ψ_(n₁+n₂)](g)·P⁻¹ = λ·(ρ_(n₁)(g₁)⊗ρ_(n₂)(g₂)),
/// where (g₁, g₂) are the CRT components of g. Errors if the two sides are
/// not proportional.
pub fn tensor_weil_scalar<S: WeilScalar>(
    rep_big: &WeilRep<S>,
    rep1: &WeilRep<S>,
    rep2: &WeilRep<S>,
    g: &Sl2Elem,
) -> Result<S> {
    let (n1, n2) = (rep1.n(), rep2.n());
    let p: OpMatrix<S> = crt_perm_matrix(n1, n2)?;
    let conj = p.mul(&rep_big.rho(g)?.matrix)?.mul(&p.transpose())?;
    let g1 = g.reduce(n1);
    let g2 = g.reduce(n2);
    let tensor = rep1.rho(&g1)?.matrix.kron(&rep2.rho(&g2)?.matrix);
    let (i, j, base) =
        tensor.first_nonzero().ok_or_else(|| Error::NoSolution("zero operator".into()))?;
    let lambda = conj.at(i, j).mul(&base.inv().expect("nonzero"));
    let scaled = tensor.scale(&lambda);
    let proportional =
        if S::EXACT { scaled == conj } else { scaled.residual(&conj) <= 1e-6 };
    if !proportional {
        return Err(Error::NoSolution("operators are not proportional".into()));
    }
    Ok(lambda)
}
