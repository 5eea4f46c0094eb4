//! Rational quaternion algebras `(a, b / ℚ)` with basis `1, u, v, uv`.

use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quat(pub [Rational; 4]);

impl Quat {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        Quat([c0, c1, c2, c3])
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Quat(c.map(rational::int))
    }

    pub fn zero() -> Self {
        Quat::scalar(Rational::zero())
    }

    pub fn one() -> Self {
        Quat::scalar(Rational::one())
    }

    pub fn scalar(r: Rational) -> Self {
        Quat([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn u() -> Self {
        Quat::from_ints([0, 1, 0, 0])
    }

    pub fn v() -> Self {
        Quat::from_ints([0, 0, 1, 0])
    }

    pub fn uv() -> Self {
        Quat::from_ints([0, 0, 0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Quat(self.0.clone().map(|c| c * r))
    }

    pub fn conjugate(&self) -> Self {
        let [c0, c1, c2, c3] = self.0.clone();
        Quat([c0, -c1, -c2, -c3])
    }
}

impl Add for &Quat {
    type Output = Quat;

    fn add(self, rhs: &Quat) -> Quat {
        Quat(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub for &Quat {
    type Output = Quat;

    fn sub(self, rhs: &Quat) -> Quat {
        Quat(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Neg for &Quat {
    type Output = Quat;

    fn neg(self) -> Quat {
        Quat(std::array::from_fn(|k| -&self.0[k]))
    }
}

/// The algebra `(a, b / ℚ)`: `u² = a`, `v² = b`, `vu = -uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    a: Rational,
    b: Rational,
}

impl Default for QuaternionAlgebra {
    /// Hamilton's quaternions `(-1, -1 / ℚ)`, a division ring.
    fn default() -> Self {
        QuaternionAlgebra::new(rational::int(-1), rational::int(-1)).expect("nonzero parameters")
    }
}

impl QuaternionAlgebra {
    pub fn new(a: Rational, b: Rational) -> Option<Self> {
        (!a.is_zero() && !b.is_zero()).then_some(QuaternionAlgebra { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn mul(&self, x: &Quat, y: &Quat) -> Quat {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        let [x0, x1, x2, x3] = &x.0;
        let [y0, y1, y2, y3] = &y.0;
        Quat([
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - &ab * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ])
    }

    /// Reduced norm `x·x̄ = x0² - a x1² - b x2² + ab x3²`.
    pub fn norm(&self, x: &Quat) -> Rational {
        let [x0, x1, x2, x3] = &x.0;
        x0 * x0 - &self.a * x1 * x1 - &self.b * x2 * x2 + &self.a * &self.b * x3 * x3
    }

    pub fn is_invertible(&self, x: &Quat) -> bool {
        !self.norm(x).is_zero()
    }

    pub fn inv(&self, x: &Quat) -> Option<Quat> {
        let n = self.norm(x);
        (!n.is_zero()).then(|| x.conjugate().scale(&n.recip()))
    }

    pub fn pow(&self, x: &Quat, exp: u32) -> Quat {
        let mut acc = Quat::one();
        for _ in 0..exp {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `g x g⁻¹`.
    pub fn conjugate_by(&self, x: &Quat, g: &Quat) -> Option<Quat> {
        Some(self.mul(&self.mul(g, x), &self.inv(g)?))
    }

    pub fn commutes(&self, x: &Quat, y: &Quat) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn commutator(&self, x: &Quat, y: &Quat) -> Option<Quat> {
        let xy = self.mul(x, y);
        Some(self.mul(&self.mul(&xy, &self.inv(x)?), &self.inv(y)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn hamilton_relations() {
        let h = QuaternionAlgebra::default();
        assert_eq!(h.mul(&Quat::u(), &Quat::u()), Quat::scalar(int(-1)));
        assert_eq!(h.mul(&Quat::v(), &Quat::v()), Quat::scalar(int(-1)));
        assert_eq!(h.mul(&Quat::uv(), &Quat::uv()), Quat::scalar(int(-1)));
        assert_eq!(h.mul(&Quat::u(), &Quat::v()), Quat::uv());
        assert_eq!(h.mul(&Quat::v(), &Quat::u()), -&Quat::uv());
    }

    #[test]
    fn general_parameters() {
        let q = QuaternionAlgebra::new(int(2), int(5)).unwrap();
        let (u, v, w) = (Quat::u(), Quat::v(), Quat::uv());
        assert_eq!(q.mul(&w, &w), Quat::scalar(int(-10)));
        assert_eq!(q.mul(&u, &w), v.scale(&int(2)));
        assert_eq!(q.mul(&w, &u), v.scale(&int(-2)));
        assert_eq!(q.mul(&v, &w), u.scale(&int(-5)));
        assert_eq!(q.mul(&w, &v), u.scale(&int(5)));
    }

    #[test]
    fn inverse_and_norm() {
        let h = QuaternionAlgebra::default();
        let x = Quat::new(int(1), frac(1, 2), int(-2), int(3));
        assert_eq!(h.norm(&x), frac(57, 4));
        let xi = h.inv(&x).unwrap();
        assert_eq!(h.mul(&x, &xi), Quat::one());
        assert_eq!(h.mul(&xi, &x), Quat::one());
        assert_eq!(h.inv(&Quat::zero()), None);
        let split = QuaternionAlgebra::new(int(1), int(1)).unwrap();
        assert_eq!(split.inv(&(&Quat::one() + &Quat::u())), None);
    }
}
