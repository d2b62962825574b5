//! Arithmetic in ℤ/nℤ for odd n: units and inverses, the half element,
//! Legendre and Jacobi symbols, trial-division factorization, and the two
//! Chinese-remainder identifications (componentwise reduction and the
//! (x, y) ↦ xq + yp map).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::Result;

/// An element of ℤ/nℤ carrying its modulus. The modulus is odd and ≥ 1;
/// arithmetic between residues requires equal moduli (enforced by panic,
/// since a mismatch is a programming error, not an input condition).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Residue {
    /// Reduces `value` into [0, modulus). Panics if the modulus is even or 0.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1 && modulus % 2 == 1, "modulus must be odd and >= 1");
        let m = modulus as i64;
        let v = value.rem_euclid(m) as u64;
        Residue { value: v, modulus }
    }

    pub fn zero(modulus: u64) -> Self {
        Residue::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        Residue::new(1, modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    fn check_same(&self, other: &Residue) -> (u64, u64) {
        assert_eq!(
            self.modulus, other.modulus,
            "modulus mismatch: {} vs {}",
            self.modulus, other.modulus
        );
        (self.value, other.value)
    }

    /// Multiplicative inverse. Errors with [`Error::NotAUnit`] unless
    /// gcd(value, modulus) = 1.
    pub fn inv(&self) -> Result<Residue> {
        let (g, s, _) = egcd(self.value as i64, self.modulus as i64);
        if g != 1 {
            return Err(Error::NotAUnit { value: self.value, modulus: self.modulus });
        }
        Ok(Residue::new(s, self.modulus))
    }

    /// The element ½ = inv(2), which exists for every odd modulus.
    pub fn half(modulus: u64) -> Residue {
        Residue::new(2, modulus).inv().expect("2 is a unit for odd modulus")
    }

    pub fn pow(&self, mut e: u64) -> Residue {
        let mut base = *self;
        let mut acc = Residue::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Reduction into ℤ/mℤ for m dividing the modulus.
    pub fn reduce(&self, m: u64) -> Residue {
        debug_assert!(self.modulus % m == 0);
        Residue::new((self.value % m) as i64, m)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        let (a, b) = self.check_same(&rhs);
        Residue { value: (a + b) % self.modulus, modulus: self.modulus }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        let (a, b) = self.check_same(&rhs);
        Residue { value: (a + self.modulus - b) % self.modulus, modulus: self.modulus }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        let (a, b) = self.check_same(&rhs);
        // moduli stay far below 2^32 at desk scale, so u64 products cannot overflow
        Residue { value: (a * b) % self.modulus, modulus: self.modulus }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
}

/// Sorted prime factorization with multiplicities; the empty list for n = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, k)| p.pow(k)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }
}

/// Trial-division factorization; sufficient for the desk-scale moduli here.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut k = 0u32;
            while m % d == 0 {
                m /= d;
                k += 1;
            }
            factors.push((d, k));
        }
        d += 1;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Factorization { factors }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Extended Euclid: returns (g, s, t) with a·s + b·t = g = gcd(a, b).
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .factors()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Legendre symbol (a/p) ∈ {+1, 0, −1} for an odd prime p, by the Euler
/// criterion a^((p−1)/2) mod p.
pub fn legendre(a: i64, p: u64) -> Result<i64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let a = Residue::new(a, p);
    if a.is_zero() {
        return Ok(0);
    }
    let e = a.pow((p - 1) / 2);
    Ok(if e.value() == 1 { 1 } else { -1 })
}

/// Jacobi symbol (a/n) for odd n ≥ 1, as the product of Legendre symbols
/// over the factorization of n with multiplicity. Deliberately *not*
/// computed by reciprocity: reciprocity is one of the theorems under test
/// and must not enter its own verification.
pub fn jacobi(a: i64, n: u64) -> Result<i64> {
    if n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    let mut result = 1i64;
    for (p, k) in factorize(n).factors() {
        let l = legendre(a, *p)?;
        if k % 2 == 1 {
            result *= l;
        } else if l == 0 {
            result = 0;
        }
    }
    Ok(result)
}

/// Componentwise reduction ℤ/n₁n₂ℤ → ℤ/n₁ℤ × ℤ/n₂ℤ (a ring isomorphism).
pub fn crt_split(x: Residue, n1: u64, n2: u64) -> Result<(Residue, Residue)> {
    if gcd(n1, n2) != 1 {
        return Err(Error::NotCoprime(n1, n2));
    }
    assert_eq!(x.modulus(), n1 * n2, "crt_split: modulus must be n1*n2");
    Ok((x.reduce(n1), x.reduce(n2)))
}

/// The inverse of [`crt_split`]: the unique x mod n₁n₂ with x ≡ x₁ (n₁) and
/// x ≡ x₂ (n₂).
pub fn crt_combine_natural(x1: Residue, x2: Residue) -> Result<Residue> {
    let (n1, n2) = (x1.modulus(), x2.modulus());
    if gcd(n1, n2) != 1 {
        return Err(Error::NotCoprime(n1, n2));
    }
    let n = n1 * n2;
    // x = x1 + n1·k with k ≡ (x2 − x1)/n1 (mod n2)
    let n1_inv = Residue::new(n1 as i64, n2).inv()?;
    let k = (Residue::new(x2.value() as i64, n2) - Residue::new(x1.value() as i64, n2)) * n1_inv;
    Ok(Residue::new((x1.value() + n1 * k.value()) as i64, n))
}

/// The set-bijection (x, y) ↦ x·q + y·p from ℤ/pℤ × ℤ/qℤ to ℤ/pqℤ. This is
/// not the natural ring map; both identifications are needed verbatim.
pub fn crt_combine_gauss(x: Residue, y: Residue) -> Result<Residue> {
    let (p, q) = (x.modulus(), y.modulus());
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    Ok(Residue::new((x.value() * q + y.value() * p) as i64, p * q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        assert_eq!(Residue::new(2, 5).inv().unwrap(), Residue::new(3, 5));
        assert_eq!(Residue::new(1, 9).inv().unwrap(), Residue::new(1, 9));
        assert_eq!(Residue::new(4, 9).inv().unwrap(), Residue::new(7, 9));
        assert_eq!(
            Residue::new(3, 9).inv(),
            Err(Error::NotAUnit { value: 3, modulus: 9 })
        );
    }

    #[test]
    fn half_element() {
        for n in [3u64, 5, 7, 9, 15, 25] {
            let h = Residue::half(n);
            assert_eq!((h + h).value(), 1);
        }
    }

    /// Independent oracle: quadratic-residue status by enumerating squares.
    fn legendre_by_enumeration(a: i64, p: u64) -> i64 {
        let a = Residue::new(a, p);
        if a.is_zero() {
            return 0;
        }
        let squares: std::collections::HashSet<u64> =
            (1..p).map(|x| (x * x) % p).collect();
        if squares.contains(&a.value()) { 1 } else { -1 }
    }

    #[test]
    fn legendre_examples() {
        // squares mod 7 are {1, 2, 4}
        assert_eq!(legendre_by_enumeration(2, 7), 1);
        assert_eq!(legendre(2, 7).unwrap(), 1);
        // squares mod 5 are {1, 4}
        assert_eq!(legendre_by_enumeration(3, 5), -1);
        assert_eq!(legendre(3, 5).unwrap(), -1);
        for p in [3u64, 5, 7, 11, 13, 19, 23] {
            assert_eq!(legendre(1, p).unwrap(), 1);
        }
        assert_eq!(legendre(4, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn euler_criterion_matches_enumeration() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in 0..p as i64 {
                assert_eq!(
                    legendre(a, p).unwrap(),
                    legendre_by_enumeration(a, p),
                    "a={a} p={p}"
                );
            }
        }
    }

    #[test]
    fn legendre_is_multiplicative_on_units() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in 1..p as i64 {
                for b in 1..p as i64 {
                    let lhs = legendre(a * b, p).unwrap();
                    let rhs = legendre(a, p).unwrap() * legendre(b, p).unwrap();
                    assert_eq!(lhs, rhs, "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(2, 15).unwrap(), 1); // (2/3)(2/5) = (−1)(−1)
        assert_eq!(jacobi(7, 1).unwrap(), 1); // empty product
        assert_eq!(jacobi(4, 9).unwrap(), 1); // perfect square
        assert_eq!(jacobi(3, 9).unwrap(), 0);
    }

    #[test]
    fn jacobi_is_a_character_of_the_unit_group() {
        for n in (1..=25u64).step_by(2) {
            for a in 1..n.max(2) {
                if gcd(a, n) != 1 {
                    continue;
                }
                let ja = jacobi(a as i64, n).unwrap();
                assert!(ja == 1 || ja == -1);
                for b in 1..n.max(2) {
                    if gcd(b, n) != 1 {
                        continue;
                    }
                    assert_eq!(
                        jacobi((a * b) as i64, n).unwrap(),
                        ja * jacobi(b as i64, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn crt_split_examples() {
        let (x1, x2) = crt_split(Residue::new(7, 15), 3, 5).unwrap();
        assert_eq!((x1.value(), x2.value()), (1, 2));
        let (z1, z2) = crt_split(Residue::new(0, 15), 3, 5).unwrap();
        assert_eq!((z1.value(), z2.value()), (0, 0));
        assert_eq!(crt_split(Residue::new(1, 9), 3, 3), Err(Error::NotCoprime(3, 3)));
    }

    #[test]
    fn crt_roundtrip_is_identity() {
        for (n1, n2) in [(3u64, 5u64), (3, 7), (5, 7), (1, 15), (3, 35), (7, 15)] {
            let n = n1 * n2;
            assert!(n <= 105);
            for x in 0..n {
                let r = Residue::new(x as i64, n);
                let (a, b) = crt_split(r, n1, n2).unwrap();
                assert_eq!(crt_combine_natural(a, b).unwrap(), r);
            }
        }
    }

    #[test]
    fn crt_gauss_examples() {
        let p = 3;
        let q = 5;
        let combine = |x: i64, y: i64| {
            crt_combine_gauss(Residue::new(x, p), Residue::new(y, q)).unwrap().value()
        };
        assert_eq!(combine(0, 0), 0);
        assert_eq!(combine(1, 0), 5);
        assert_eq!(combine(2, 3), 4); // 10 + 9 = 19 ≡ 4 (mod 15)
    }

    #[test]
    fn crt_gauss_is_a_bijection() {
        for (p, q) in [(3u64, 5u64), (5, 7), (3, 7)] {
            let mut seen = std::collections::HashSet::new();
            for x in 0..p {
                for y in 0..q {
                    let z =
                        crt_combine_gauss(Residue::new(x as i64, p), Residue::new(y as i64, q))
                            .unwrap();
                    assert!(seen.insert(z.value()));
                }
            }
            assert_eq!(seen.len() as u64, p * q);
        }
    }

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(15).factors(), &[(3, 1), (5, 1)]);
        assert_eq!(factorize(1).factors(), &[]);
        assert_eq!(factorize(9).factors(), &[(3, 2)]);
        assert_eq!(factorize(360).product(), 360);
    }

    #[test]
    fn phi_and_primality() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(60), 16);
        assert!(is_prime(23));
        assert!(!is_prime(1));
        assert!(!is_prime(15));
    }
}
