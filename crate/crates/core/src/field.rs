//! The multiquadratic field `K = ℚ(√p_1, √p_2, ...)` and its automorphisms.
//!
//! An element is a finite ℚ-combination of radical monomials
//! `√p_{i1}·√p_{i2}···`, one per [`RadicalMask`]. Radical monomials are
//! linearly independent over ℚ, so two elements are equal exactly when their
//! coefficient maps agree. There is no fixed level: an element lives in
//! `K_n` for `n` its largest radical index, and products grow on demand.
//!
//! Multiplication and inversion reduce `(√p_i)^2 = p_i` and therefore take
//! the [`PrimeTable`]; addition and the automorphisms do not.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::index_set::{Parity, RadicalMask};
use crate::primes::PrimeTable;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("attempted to invert zero")]
    ZeroInversion,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FieldElem {
    terms: BTreeMap<RadicalMask, Rational>,
}

impl FieldElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(r: Rational) -> Self {
        Self::monomial(RadicalMask::empty(), r)
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rational::int(n))
    }

    /// `√p_i`.
    pub fn sqrt_prime(i: u32) -> Self {
        Self::monomial(RadicalMask::singleton(i), Rational::one())
    }

    pub fn monomial(mask: RadicalMask, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mask, coeff);
        }
        FieldElem { terms }
    }

    /// Builds an element from `(mask, coeff)` pairs, summing repeated masks.
    pub fn from_terms(terms: impl IntoIterator<Item = (RadicalMask, Rational)>) -> Self {
        let mut out = FieldElem::zero();
        for (mask, c) in terms {
            out.add_term(mask, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// True iff no radical occurs, i.e. the element lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(RadicalMask::is_empty)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeff(&RadicalMask::empty()))
    }

    pub fn coeff(&self, mask: &RadicalMask) -> Rational {
        self.terms.get(mask).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest radical index present, 0 for rationals.
    pub fn level(&self) -> u32 {
        self.terms.keys().filter_map(RadicalMask::max).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RadicalMask, &Rational)> {
        self.terms.iter()
    }

    /// Number of nonzero radical terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mask: RadicalMask, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        FieldElem {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Product in `K`: masks combine by symmetric difference and every
    /// shared radical contributes its prime.
    pub fn mul(&self, other: &Self, primes: &PrimeTable) -> Self {
        let mut out = FieldElem::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut c = ca * cb;
                for i in ma.intersection(mb).iter() {
                    c *= Rational::from_integer(BigInt::from(primes.prime(i)));
                }
                out.add_term(ma.symmetric_difference(mb), c);
            }
        }
        out
    }

    /// Multiplicative inverse by conjugation descent on the largest radical.
    ///
    /// Writing `a = u + v√p_m` with `u, v ∈ K_{m-1}`, the norm
    /// `u² - p_m v²` lies in `K_{m-1}` and `a⁻¹ = (u - v√p_m)·(u² - p_m v²)⁻¹`.
    pub fn inv(&self, primes: &PrimeTable) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInversion);
        }
        let m = self.level();
        if m == 0 {
            let r = self.coeff(&RadicalMask::empty());
            return Ok(Self::rational(r.recip()));
        }
        let conj = self.apply_auto(&Parity::singleton(m));
        let norm = self.mul(&conj, primes);
        debug_assert!(norm.level() < m);
        // the norm is nonzero because radical monomials are independent
        Ok(conj.mul(&norm.inv(primes)?, primes))
    }

    /// Applies `∏_{i ∈ parity} f_i`, where `f_i` negates `√p_i` and fixes
    /// every other radical.
    pub fn apply_auto(&self, parity: &Parity) -> Self {
        if parity.is_empty() {
            return self.clone();
        }
        FieldElem {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.intersection_len(parity) % 2 == 1 {
                        -c.clone()
                    } else {
                        c.clone()
                    };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32, primes: &PrimeTable) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self, primes);
        }
        acc
    }
}

impl From<Rational> for FieldElem {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;

    fn add(self, rhs: &FieldElem) -> FieldElem {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for FieldElem {
    type Output = FieldElem;

    fn add(self, rhs: FieldElem) -> FieldElem {
        &self + &rhs
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        FieldElem {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;

    fn neg(self) -> FieldElem {
        -&self
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;

    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;

    fn sub(self, rhs: FieldElem) -> FieldElem {
        &self - &rhs
    }
}

/// Canonical text: terms in mask order, `c` or `c*s{i}*...`, joined by
/// ` + ` / ` - `. Zero renders as `0`.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (mask, c)) in self.terms.iter().enumerate() {
            let magnitude = if k == 0 {
                c.clone()
            } else if rational::is_negative(c) {
                f.write_str(" - ")?;
                -c.clone()
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            f.write_str(&rational::format_rational(&magnitude))?;
            for i in mask.iter() {
                write!(f, "*s{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn s(i: u32) -> FieldElem {
        FieldElem::sqrt_prime(i)
    }

    fn q(n: i64) -> FieldElem {
        FieldElem::int(n)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&(&q(1) + &s(1)) + &(&q(2) - &s(1)), q(3));
        let a = &q(4) + &s(2);
        assert_eq!(&a + &FieldElem::zero(), a);
        let sum = &s(2).scale(&frac(1, 2)) + &s(2).scale(&frac(1, 3));
        assert_eq!(sum, s(2).scale(&frac(5, 6)));
    }

    #[test]
    fn multiplication_examples() {
        let t = PrimeTable::default();
        assert_eq!(s(1).mul(&s(1), &t), q(2));
        assert_eq!((&q(1) + &s(1)).mul(&(&q(-1) + &s(1)), &t), q(1));
        let a = &q(3) + &s(2).scale(&frac(-1, 7));
        assert_eq!(a.mul(&FieldElem::one(), &t), a);
        // √2·√3·√2 = 2√3
        assert_eq!(s(1).mul(&s(2), &t).mul(&s(1), &t), s(2).scale(&int(2)));
    }

    #[test]
    fn inversion_examples() {
        let t = PrimeTable::default();
        assert_eq!(s(1).inv(&t).unwrap(), s(1).scale(&frac(1, 2)));
        assert_eq!(FieldElem::one().inv(&t).unwrap(), FieldElem::one());
        assert_eq!((&q(1) + &s(1)).inv(&t).unwrap(), &q(-1) + &s(1));
        assert_eq!(FieldElem::zero().inv(&t), Err(FieldError::ZeroInversion));
        let a = &(&s(1) + &s(2).mul(&s(3), &t)) + &q(5);
        assert_eq!(a.mul(&a.inv(&t).unwrap(), &t), FieldElem::one());
    }

    #[test]
    fn automorphism_examples() {
        let a = &q(3) + &s(1).scale(&int(5));
        assert_eq!(a.apply_auto(&Parity::singleton(1)), &q(3) - &s(1).scale(&int(5)));
        assert_eq!(s(1).apply_auto(&Parity::singleton(2)), s(1));
        assert_eq!(
            a.apply_auto(&Parity::singleton(1)).apply_auto(&Parity::singleton(1)),
            a
        );
    }

    #[test]
    fn rationality() {
        assert!(FieldElem::rational(frac(7, 3)).is_rational());
        assert!(!s(1).is_rational());
        assert!(FieldElem::zero().is_rational());
    }

    #[test]
    fn canonical_text() {
        let a = &q(3) - &s(1).scale(&int(5));
        assert_eq!(a.to_string(), "3 - 5*s1");
        let t = PrimeTable::default();
        let b = &s(1).mul(&s(3), &t).scale(&frac(-1, 2)) + &s(2);
        assert_eq!(b.to_string(), "-1/2*s1*s3 + 1*s2");
        assert_eq!(FieldElem::zero().to_string(), "0");
    }
}
