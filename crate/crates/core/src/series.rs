//! The twisted group algebra `K[G, Φ]`: finitely supported sums `Σ a_x x`
//! with coefficients in [`FieldElem`] and words in [`GroupWord`], multiplied
//! by the twisted convolution
//!
//! ```text
//! (Σ a_x x)(Σ b_y y) = Σ_z ( Σ_{xy = z} a_x Φ_x(b_y) ) z
//! ```
//!
//! Inverses of non-monomials are infinite Mal'cev-Neumann series. They are
//! computed to a chosen Neumann depth and the result carries that depth as a
//! truncation tag; every value derived from a truncated operand is itself
//! truncated.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use thiserror::Error;

use crate::field::{FieldElem, FieldError};
use crate::group::GroupWord;
use crate::primes::PrimeTable;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("operation requires an exact series but the input is truncated at depth {0}")]
    TruncatedInput(u32),
    #[error("cannot compare an exact series with a truncated one")]
    MixedTruncation,
    #[error("bad arguments: {0}")]
    BadArguments(String),
}

impl From<FieldError> for SeriesError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::ZeroInversion => SeriesError::ZeroInversion,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Series {
    terms: BTreeMap<GroupWord, FieldElem>,
    trunc: Option<u32>,
}

fn merge_trunc(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

impl Series {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(FieldElem::one())
    }

    pub fn scalar(a: FieldElem) -> Self {
        Self::monomial(GroupWord::identity(), a)
    }

    pub fn rational(r: Rational) -> Self {
        Self::scalar(FieldElem::rational(r))
    }

    /// `√p_i` as a series.
    pub fn sqrt_prime(i: u32) -> Self {
        Self::scalar(FieldElem::sqrt_prime(i))
    }

    /// `x_i` as a series.
    pub fn generator(i: u32) -> Self {
        Self::word(GroupWord::generator(i))
    }

    pub fn word(w: GroupWord) -> Self {
        Self::monomial(w, FieldElem::one())
    }

    /// The single term `a·x`.
    pub fn monomial(x: GroupWord, a: FieldElem) -> Self {
        let mut s = Series::zero();
        s.add_term(x, a);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupWord, FieldElem)>) -> Self {
        let mut s = Series::zero();
        for (x, a) in terms {
            s.add_term(x, a);
        }
        s
    }

    fn add_term(&mut self, x: GroupWord, a: FieldElem) {
        if a.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            Entry::Vacant(v) => {
                v.insert(a);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &a;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    /// The Neumann depth this value was truncated at, if any.
    pub fn truncation(&self) -> Option<u32> {
        self.trunc
    }

    pub fn with_truncation(mut self, depth: Option<u32>) -> Self {
        self.trunc = depth;
        self
    }

    /// Number of terms; see [`Series::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in ascending group order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &FieldElem)> {
        self.terms.iter()
    }

    /// The support in ascending group order.
    pub fn support(&self) -> impl Iterator<Item = &GroupWord> {
        self.terms.keys()
    }

    pub fn coeff(&self, x: &GroupWord) -> FieldElem {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    /// The order-minimal term.
    pub fn leading_term(&self) -> Option<(&GroupWord, &FieldElem)> {
        self.terms.iter().next()
    }

    /// Largest index of any generator or radical occurring in the series.
    pub fn window(&self) -> u32 {
        self.terms
            .iter()
            .map(|(x, a)| x.max_index().max(a.level()))
            .max()
            .unwrap_or(0)
    }

    /// Equality for values that may carry truncation tags: exact values
    /// compare with exact values, truncated with truncated at equal depth.
    pub fn try_eq(&self, other: &Self) -> Result<bool, SeriesError> {
        match (self.trunc, other.trunc) {
            (None, None) => Ok(self.terms == other.terms),
            (Some(a), Some(b)) => Ok(a == b && self.terms == other.terms),
            _ => Err(SeriesError::MixedTruncation),
        }
    }

    fn require_exact(&self) -> Result<(), SeriesError> {
        match self.trunc {
            Some(d) => Err(SeriesError::TruncatedInput(d)),
            None => Ok(()),
        }
    }

    /// Multiplies every coefficient on the left by the scalar `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            terms: self
                .terms
                .iter()
                .map(|(x, a)| (x.clone(), a.scale(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Twisted convolution: the term pair `(a_x x)(b_y y)` contributes
    /// `a_x Φ_x(b_y)` at `xy`.
    pub fn mul(&self, other: &Self, primes: &PrimeTable) -> Self {
        let mut out = Series {
            terms: BTreeMap::new(),
            trunc: merge_trunc(self.trunc, other.trunc),
        };
        for (x, ax) in &self.terms {
            let parity = x.parity();
            for (y, by) in &other.terms {
                out.add_term(x.mul(y), ax.mul(&by.apply_auto(&parity), primes));
            }
        }
        out
    }

    pub fn pow(&self, exp: u32, primes: &PrimeTable) -> Self {
        let mut acc = Series::one().with_truncation(self.trunc);
        for _ in 0..exp {
            acc = acc.mul(self, primes);
        }
        acc
    }

    /// Exact inverse of the single term `a·x`: `Φ_x(a⁻¹)·x⁻¹`.
    fn monomial_inverse(x: &GroupWord, a: &FieldElem, primes: &PrimeTable) -> Result<Self, SeriesError> {
        let c = a.inv(primes)?.apply_auto(&x.parity());
        Ok(Series::monomial(x.inv(), c))
    }

    /// Splits `a = a₀x₀(1 + ε)` at the order-minimal term `a₀x₀`, returning
    /// `((a₀x₀)⁻¹, ε)`. Every word in `supp ε` is strictly above `e`.
    pub fn neumann_split(&self, primes: &PrimeTable) -> Result<(Series, Series), SeriesError> {
        let (x0, a0) = self.leading_term().ok_or(SeriesError::ZeroInversion)?;
        let lead_inv = Self::monomial_inverse(x0, a0, primes)?;
        let mut eps = lead_inv.mul(&Series { terms: self.terms.clone(), trunc: None }, primes);
        eps = &eps - &Series::one();
        Ok((lead_inv, eps))
    }

    /// Inverse to Neumann depth `depth`: `(Σ_{k=0}^{depth} (-ε)^k)·(a₀x₀)⁻¹`.
    ///
    /// Monomials invert exactly. Otherwise the result is tagged with
    /// `depth` (or a smaller inherited tag) and `a · a⁻¹ = 1 + ρ` with
    /// `supp ρ ≥ (min supp ε)^{depth+1}`.
    pub fn inv(&self, depth: u32, primes: &PrimeTable) -> Result<Self, SeriesError> {
        if depth == 0 {
            return Err(SeriesError::BadArguments("inversion depth must be positive".into()));
        }
        let (lead_inv, eps) = self.neumann_split(primes)?;
        if eps.is_zero() {
            return Ok(lead_inv.with_truncation(self.trunc));
        }
        let minus_eps = -&eps;
        let mut sum = Series::one();
        let mut power = Series::one();
        for _ in 0..depth {
            power = power.mul(&minus_eps, primes);
            sum = &sum + &power;
        }
        let inv = sum.mul(&lead_inv, primes);
        Ok(inv.with_truncation(merge_trunc(self.trunc, Some(depth))))
    }

    /// `u·a·u⁻¹`, with `u⁻¹` at the given depth.
    pub fn conjugate(&self, u: &Series, depth: u32, primes: &PrimeTable) -> Result<Self, SeriesError> {
        let u_inv = u.inv(depth, primes)?;
        Ok(u.mul(self, primes).mul(&u_inv, primes))
    }

    /// The multiplicative commutator `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(a: &Series, b: &Series, depth: u32, primes: &PrimeTable) -> Result<Self, SeriesError> {
        let a_inv = a.inv(depth, primes)?;
        let b_inv = b.inv(depth, primes)?;
        Ok(a.mul(b, primes).mul(&a_inv, primes).mul(&b_inv, primes))
    }

    /// Membership in the center `ℚ((H))`: every word a square and every
    /// coefficient rational.
    pub fn is_central(&self) -> Result<bool, SeriesError> {
        self.require_exact()?;
        Ok(self
            .terms
            .iter()
            .all(|(x, a)| x.is_square() && a.is_rational()))
    }

    /// Decides centrality by commuting with `√p_i` and `x_i` for every `i`
    /// up to [`Series::window`]. Generators beyond the window commute with
    /// the series automatically.
    pub fn commutation_window_test(&self, primes: &PrimeTable) -> Result<bool, SeriesError> {
        self.require_exact()?;
        for i in 1..=self.window() {
            for g in [Series::sqrt_prime(i), Series::generator(i)] {
                if self.mul(&g, primes) != g.mul(self, primes) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl From<FieldElem> for Series {
    fn from(a: FieldElem) -> Self {
        Series::scalar(a)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.trunc = merge_trunc(self.trunc, rhs.trunc);
        for (x, a) in &rhs.terms {
            out.add_term(x.clone(), a.clone());
        }
        out
    }
}

impl Add for Series {
    type Output = Series;

    fn add(self, rhs: Series) -> Series {
        &self + &rhs
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            terms: self.terms.iter().map(|(x, a)| (x.clone(), -a)).collect(),
            trunc: self.trunc,
        }
    }
}

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Sub for Series {
    type Output = Series;

    fn sub(self, rhs: Series) -> Series {
        &self - &rhs
    }
}

/// Canonical text: `<coeff>*<word>` terms in ascending group order. A
/// coefficient with several radical terms is parenthesised; a negative
/// single-term coefficient after the first term is written with ` - `.
/// Truncated values render as `trunc(<terms>, <depth>)`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trunc.is_some() {
            f.write_str("trunc(")?;
        }
        if self.is_zero() {
            f.write_str("0")?;
        }
        for (k, (x, a)) in self.terms.iter().enumerate() {
            if a.len() > 1 {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "({a})*{x}")?;
                continue;
            }
            let (mask, c) = a.terms().next().expect("nonzero coefficient");
            let single = if k > 0 && crate::rational::is_negative(c) {
                f.write_str(" - ")?;
                FieldElem::monomial(mask.clone(), -c.clone())
            } else {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                a.clone()
            };
            write!(f, "{single}*{x}")?;
        }
        if let Some(d) = self.trunc {
            write!(f, ", {d})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn t() -> PrimeTable {
        PrimeTable::default()
    }

    fn s(i: u32) -> Series {
        Series::sqrt_prime(i)
    }

    fn x(i: u32) -> Series {
        Series::generator(i)
    }

    fn q(n: i64) -> Series {
        Series::rational(int(n))
    }

    #[test]
    fn addition_examples() {
        let sum = &(&x(1) + &s(1)) + &(&x(1) - &s(1));
        assert_eq!(sum, x(1).scale(&int(2)));
        let a = &x(3) + &s(2);
        assert_eq!(&a + &Series::zero(), a);
        let x1sq = Series::word(GroupWord::power(1, 2));
        assert!((&x1sq.scale(&int(3)) + &x1sq.scale(&int(-3))).is_zero());
    }

    #[test]
    fn twisted_multiplication_examples() {
        let p = t();
        // x₁√p₁ = −√p₁x₁
        assert_eq!(x(1).mul(&s(1), &p), -s(1).mul(&x(1), &p));
        assert_eq!(x(2).mul(&s(1), &p), s(1).mul(&x(2), &p));
        // (√2x₁)(√2x₁) = √2·Φ_{x₁}(√2)·x₁² = −2x₁²
        let a = s(1).mul(&x(1), &p);
        assert_eq!(a.mul(&a, &p), Series::word(GroupWord::power(1, 2)).scale(&int(-2)));
    }

    #[test]
    fn conjugation_examples() {
        let p = t();
        assert_eq!(s(1).conjugate(&x(1), 1, &p).unwrap(), -s(1));
        let a = &s(2) + &x(3);
        assert_eq!(a.conjugate(&Series::one(), 1, &p).unwrap(), a);
        assert_eq!(x(2).conjugate(&x(1), 1, &p).unwrap(), x(2));
        assert!(x(2).conjugate(&x(1), 1, &p).unwrap().is_exact());
        assert_eq!(x(2).conjugate(&Series::zero(), 1, &p), Err(SeriesError::ZeroInversion));
    }

    #[test]
    fn commutator_examples() {
        let p = t();
        assert_eq!(Series::commutator(&x(1), &s(1), 1, &p).unwrap(), q(-1));
        let a = &x(1).scale(&int(3)) + &q(0);
        assert_eq!(Series::commutator(&a, &a, 1, &p).unwrap(), q(1));
        assert_eq!(Series::commutator(&x(1), &x(2), 1, &p).unwrap(), q(1));
    }

    #[test]
    fn inversion_examples() {
        let p = t();
        let inv = x(1).inv(3, &p).unwrap();
        assert_eq!(inv, Series::word(GroupWord::power(1, -1)));
        assert!(inv.is_exact());

        let a = s(1).mul(&x(1), &p);
        let inv = a.inv(1, &p).unwrap();
        let expected = Series::monomial(
            GroupWord::power(1, -1),
            FieldElem::sqrt_prime(1).scale(&frac(-1, 2)),
        );
        assert_eq!(inv, expected);
        assert_eq!(a.mul(&inv, &p), Series::one());
        assert_eq!(inv.mul(&a, &p), Series::one());

        let b = &q(1) - &x(1);
        let inv = b.inv(2, &p).unwrap();
        let x1sq = Series::word(GroupWord::power(1, 2));
        let expected = (&(&q(1) + &x(1)) + &x1sq).with_truncation(Some(2));
        assert_eq!(inv.try_eq(&expected), Ok(true));
        let residual = &b.mul(&inv, &p) - &Series::one();
        let x1cube = Series::word(GroupWord::power(1, 3));
        assert_eq!(residual.try_eq(&(-x1cube).with_truncation(Some(2))), Ok(true));
    }

    #[test]
    fn inversion_errors() {
        let p = t();
        assert_eq!(Series::zero().inv(2, &p), Err(SeriesError::ZeroInversion));
        assert!(matches!(x(1).inv(0, &p), Err(SeriesError::BadArguments(_))));
    }

    #[test]
    fn truncation_propagates() {
        let p = t();
        let tr = (&q(1) + &x(1)).inv(3, &p).unwrap();
        assert_eq!(tr.truncation(), Some(3));
        assert_eq!((&tr + &x(2)).truncation(), Some(3));
        assert_eq!(x(2).mul(&tr, &p).truncation(), Some(3));
        assert_eq!(tr.is_central(), Err(SeriesError::TruncatedInput(3)));
        assert_eq!(tr.commutation_window_test(&p), Err(SeriesError::TruncatedInput(3)));
        assert_eq!(tr.try_eq(&x(1)), Err(SeriesError::MixedTruncation));
    }

    #[test]
    fn center_examples() {
        let p = t();
        let x1sq = Series::word(GroupWord::power(1, 2));
        let central = x1sq.scale(&int(3));
        assert_eq!(central.is_central(), Ok(true));
        assert_eq!(central.commutation_window_test(&p), Ok(true));
        let a = s(1).mul(&x1sq, &p);
        assert_eq!(a.is_central(), Ok(false));
        assert_eq!(a.commutation_window_test(&p), Ok(false));
        assert_eq!(x(1).is_central(), Ok(false));
        assert_eq!(x(1).commutation_window_test(&p), Ok(false));
        assert_eq!(s(1).commutation_window_test(&p), Ok(false));
        assert_eq!(q(5).commutation_window_test(&p), Ok(true));
    }

    #[test]
    fn canonical_text() {
        let p = t();
        let g = &Series::word(GroupWord::power(1, -1)) + &Series::word(GroupWord::power(2, -1));
        assert_eq!(g.to_string(), "1*x1^-1 + 1*x2^-1");
        let a = &(&q(3) - &s(1).mul(&x(2), &p)) + &Series::scalar(&FieldElem::int(1) + &FieldElem::sqrt_prime(2)).mul(&x(1), &p);
        assert_eq!(a.to_string(), "3*e - 1*s1*x2 + (1 + 1*s2)*x1");
        assert_eq!(Series::zero().to_string(), "0");
        let tr = (&q(1) - &x(1)).inv(2, &p).unwrap();
        assert_eq!(tr.to_string(), "trunc(1*e + 1*x1 + 1*x1^2, 2)");
    }
}
