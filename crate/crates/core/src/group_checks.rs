//! Brute-force group theory for SL₂(ℤ/nℤ) at desk scale: full enumeration,
//! the abelianization exponent (via the commutator subgroup as a normal
//! closure), regular semisimplicity, and exhaustive conjugator search.

use std::collections::{HashMap, HashSet};

use crate::error::Error;
use crate::residue::{factorize, Residue};
use crate::sl2::{Mat2, Sl2Elem};
use crate::Result;

const ENUMERATION_BOUND: u64 = 100_000;

type Key = (u64, u64, u64, u64);

fn key_of(g: &Sl2Elem) -> Key {
    (g.a().value(), g.b().value(), g.c().value(), g.d().value())
}

/// The fully enumerated group SL₂(ℤ/nℤ) with an element→position index.
pub struct GroupTable {
    n: u64,
    elements: Vec<Sl2Elem>,
    index: HashMap<Key, usize>,
}

impl GroupTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Sl2Elem] {
        &self.elements
    }

    pub fn index_of(&self, g: &Sl2Elem) -> Option<usize> {
        self.index.get(&key_of(g)).copied()
    }
}

/// |SL₂(ℤ/nℤ)| = n³·∏_(p|n) (1 − p⁻²).
pub fn expected_sl2_order(n: u64) -> u64 {
    let mut order = n * n * n;
    for p in factorize(n).primes() {
        order = order / (p * p) * (p * p - 1);
    }
    order
}

/// Enumerates all 2×2 determinant-1 matrices over ℤ/nℤ. Errors with
/// [`Error::TooLarge`] when the group order exceeds the desk-scale bound.
pub fn enumerate_sl2(n: u64) -> Result<GroupTable> {
    if n % 2 == 0 {
        return Err(Error::EvenModulus(n));
    }
    if expected_sl2_order(n) > ENUMERATION_BOUND {
        return Err(Error::TooLarge(n));
    }
    let mut elements = Vec::new();
    let mut index = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if (a * d % n + n - b * c % n) % n == 1 % n {
                        let g = Sl2Elem::from_ints(a as i64, b as i64, c as i64, d as i64, n)
                            .expect("determinant checked");
                        index.insert(key_of(&g), elements.len());
                        elements.push(g);
                    }
                }
            }
        }
    }
    debug_assert_eq!(elements.len() as u64, expected_sl2_order(n));
    Ok(GroupTable { n, elements, index })
}

/// The commutator subgroup as the normal closure of [u₊(1), u₋(1)]:
/// closed under products, inverses, and conjugation by the two unipotent
/// generators (which generate the whole group, so normality follows).
fn commutator_subgroup(n: u64) -> HashSet<Key> {
    let u = Sl2Elem::upper(Residue::one(n));
    let l = Sl2Elem::lower(Residue::one(n));
    let seed = u.mul(&l).mul(&u.inv()).mul(&l.inv());
    let mut members: HashSet<Key> = HashSet::new();
    members.insert(key_of(&Sl2Elem::identity(n)));
    let mut frontier = vec![seed];
    let mut all: Vec<Sl2Elem> = vec![Sl2Elem::identity(n)];
    while let Some(x) = frontier.pop() {
        if !members.insert(key_of(&x)) {
            continue;
        }
        // close under multiplication with everything collected so far
        let mut new_items = vec![x.mul(&x), x.inv()];
        for y in &all {
            new_items.push(x.mul(y));
            new_items.push(y.mul(&x));
        }
        new_items.push(u.mul(&x).mul(&u.inv()));
        new_items.push(l.mul(&x).mul(&l.inv()));
        all.push(x);
        for item in new_items {
            if !members.contains(&key_of(&item)) {
                frontier.push(item);
            }
        }
    }
    members
}

/// The exponent of the abelianization SL₂(ℤ/nℤ) / [·,·]: the lcm of the
/// coset orders. Divides n; equals 1 exactly when the group is perfect.
pub fn abelianization_exponent(n: u64) -> Result<u64> {
    let table = enumerate_sl2(n)?;
    let commutators = commutator_subgroup(n);
    let mut exponent = 1u64;
    for g in table.elements() {
        let mut power = *g;
        let mut ord = 1u64;
        while !commutators.contains(&key_of(&power)) {
            power = power.mul(g);
            ord += 1;
            assert!(
                ord <= table.len() as u64,
                "order computation runaway: commutator subgroup is not normal?"
            );
        }
        exponent = num_integer::lcm(exponent, ord);
    }
    Ok(exponent)
}

/// True iff tr(g)² − 4 is nonzero modulo every prime dividing n, i.e. g has
/// distinct eigenvalues over the closure of each residue field.
pub fn is_regular_semisimple(g: &Sl2Elem) -> bool {
    let n = g.modulus();
    let tr = g.mat().trace();
    let disc = tr * tr - Residue::new(4, n);
    factorize(n).primes().all(|p| disc.value() % p != 0)
}

/// Exhaustive search for g ∈ SL₂ with g·g₀·g⁻¹ = S·g₀·S⁻¹, for regular
/// semisimple g₀ and invertible S. Existence for every such pair is the
/// claim under test; n is restricted to squarefree moduli where the CRT
/// reduction applies directly.
pub fn find_conjugator(g0: &Sl2Elem, s: &Mat2) -> Result<Sl2Elem> {
    let n = g0.modulus();
    assert!(
        factorize(n).is_squarefree(),
        "conjugator search is only supported for squarefree moduli"
    );
    if !is_regular_semisimple(g0) {
        return Err(Error::NotRegularSemisimple(n));
    }
    if !s.det().is_unit() {
        return Err(Error::NotAUnit { value: s.det().value(), modulus: n });
    }
    let target = s.mul(g0.mat()).mul(&s.inv()?);
    let table = enumerate_sl2(n)?;
    for g in table.elements() {
        // g·g₀ = target·g avoids inverting every candidate
        if g.mat().mul(g0.mat()) == target.mul(g.mat()) {
            return Ok(*g);
        }
    }
    Err(Error::NotFound)
}
