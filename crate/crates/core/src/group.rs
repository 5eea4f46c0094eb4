//! The free abelian group `G = ⊕ℤ` on generators `x_1, x_2, ...`, written
//! multiplicatively, with its lexicographic total order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::index_set::Parity;

/// `∏ x_i^{n_i}` with finitely many nonzero exponents.
///
/// `Ord` is the group order: compare exponent sequences lexicographically
/// from index 1 upward, absent exponents reading as 0. Under it `G` is an
/// ordered group, so it doubles as the key order of series supports.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    exps: BTreeMap<u32, BigInt>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// `x_i`.
    pub fn generator(i: u32) -> Self {
        Self::power(i, 1)
    }

    /// `x_i^n`.
    pub fn power(i: u32, n: impl Into<BigInt>) -> Self {
        Self::from_exponents([(i, n.into())])
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut w = GroupWord::identity();
        for (i, n) in exps {
            assert!(i >= 1, "generator indices start at 1");
            w.bump(i, n);
        }
        w
    }

    fn bump(&mut self, i: u32, n: BigInt) {
        if n.is_zero() {
            return;
        }
        let e = self.exps.entry(i).or_insert_with(BigInt::zero);
        *e += n;
        if e.is_zero() {
            self.exps.remove(&i);
        }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: u32) -> BigInt {
        self.exps.get(&i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.exps.iter().map(|(&i, n)| (i, n))
    }

    /// Largest generator index with nonzero exponent, 0 for the identity.
    pub fn max_index(&self) -> u32 {
        self.exps.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, n) in &other.exps {
            out.bump(i, n.clone());
        }
        out
    }

    pub fn inv(&self) -> Self {
        GroupWord {
            exps: self.exps.iter().map(|(&i, n)| (i, -n)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        GroupWord {
            exps: if k.is_zero() {
                BTreeMap::new()
            } else {
                self.exps.iter().map(|(&i, n)| (i, n * &k)).collect()
            },
        }
    }

    /// Membership in the squares subgroup `H = {x² : x ∈ G}`.
    pub fn is_square(&self) -> bool {
        self.exps.values().all(Integer::is_even)
    }

    /// Indices with odd exponent. `Φ_x` acts on `K` as the product of the
    /// `f_i` over this set.
    pub fn parity(&self) -> Parity {
        self.exps
            .iter()
            .filter(|(_, n)| n.is_odd())
            .map(|(&i, _)| i)
            .collect()
    }

    /// `x_1^{-1} x_2^{-1} ··· x_n^{-1}`.
    pub fn inverse_prefix_product(n: u32) -> Self {
        Self::from_exponents((1..=n).map(|i| (i, -BigInt::one())))
    }
}

impl Ord for GroupWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let zero = BigInt::zero();
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        // walk the union of supports in index order; the first index where
        // the exponents differ decides
        loop {
            let (ea, eb) = match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(&(ia, _)), Some(&(ib, _))) if ia == ib => {
                    (a.next().unwrap().1, b.next().unwrap().1)
                }
                (Some(&(ia, _)), Some(&(ib, _))) if ia > ib => (&zero, b.next().unwrap().1),
                (Some(_), _) => (a.next().unwrap().1, &zero),
                (None, Some(_)) => (&zero, b.next().unwrap().1),
            };
            match ea.cmp(eb) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for GroupWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `e`, or `x{i}^{n}` factors in increasing index order with `^1` omitted.
impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        for (k, (i, n)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if n.is_one() {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{n}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(exps: &[i64]) -> GroupWord {
        GroupWord::from_exponents(
            exps.iter()
                .enumerate()
                .map(|(k, &n)| (k as u32 + 1, BigInt::from(n))),
        )
    }

    #[test]
    fn group_law() {
        let x1 = GroupWord::generator(1);
        assert!(x1.mul(&x1.inv()).is_identity());
        assert_eq!(x1.mul(&GroupWord::generator(2)), w(&[1, 1]));
        assert_eq!(GroupWord::power(1, 2).mul(&GroupWord::power(1, 3)), GroupWord::power(1, 5));
        assert_eq!(w(&[2, -1]).inv(), w(&[-2, 1]));
        assert!(GroupWord::identity().inv().is_identity());
    }

    #[test]
    fn lexicographic_order() {
        let a = GroupWord::power(1, -1);
        let b = GroupWord::power(2, -1);
        assert_eq!(a.cmp(&b), Ordering::Less);
        assert_eq!(GroupWord::identity().cmp(&GroupWord::identity()), Ordering::Equal);
        assert_eq!(w(&[1, -5]).cmp(&w(&[1, 0])), Ordering::Less);
        assert_eq!(w(&[0, 0, 1]).cmp(&w(&[0, 0, 0, 7])), Ordering::Greater);
        assert_eq!(w(&[0, -1]).cmp(&GroupWord::identity()), Ordering::Less);
    }

    #[test]
    fn squares_and_parity() {
        assert!(GroupWord::power(1, 2).is_square());
        assert!(!w(&[1, 1]).is_square());
        assert!(GroupWord::identity().is_square());
        assert_eq!(w(&[3, 2]).parity(), Parity::singleton(1));
        assert!(GroupWord::identity().parity().is_empty());
        assert_eq!(w(&[1, 1]).parity(), [1, 2].into_iter().collect());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(GroupWord::identity().to_string(), "e");
        assert_eq!(w(&[-1, 0, 2]).to_string(), "x1^-1*x3^2");
        assert_eq!(w(&[1, 1]).to_string(), "x1*x2");
    }
}
