//! Finite-dimensional layers `A_n`: the ℚ-algebra generated by
//! `u_1..u_n, v_1..v_n` with
//!
//! ```text
//! u_i² = a_i,  v_i² = b_i,  v_i u_i = -u_i v_i,
//! ```
//!
//! and every other pair of generators commuting. `A_n` is the tensor product
//! of the quaternion-type algebras `(a_i, b_i / ℚ)` and has dimension
//! `2^{2n}`. With `u_i = √p_i`, `v_i = x_i` and the central squares
//! specialised to rationals it is the layer `F(√p_1..√p_n, x_1..x_n)` of the
//! twisted series ring; see [`specialize_series`].
//!
//! Basis monomials are `u^ε v^μ = u_1^{ε_1}···u_n^{ε_n} v_1^{μ_1}···v_n^{μ_n}`
//! and the coordinate index of `(ε, μ)` is `ε + 2^n μ`, both bit patterns
//! little-endian by generator index.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::primes::PrimeTable;
use crate::rational::{self, Rational};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element is zero or a zero divisor")]
    SingularElement,
    #[error("invalid algebra parameters: {0}")]
    InvalidParams(String),
}

/// Largest supported number of quaternion factors (dimension `4^8`).
pub const MAX_FACTORS: usize = 8;

/// A basis monomial `u^ε v^μ` as two bit patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub eps: u32,
    pub mu: u32,
}

impl BasisIndex {
    pub fn to_index(self, n: usize) -> usize {
        self.eps as usize | ((self.mu as usize) << n)
    }

    pub fn from_index(n: usize, idx: usize) -> Self {
        let mask = (1usize << n) - 1;
        BasisIndex {
            eps: (idx & mask) as u32,
            mu: (idx >> n) as u32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraParams {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElem {
    coords: Vec<Rational>,
}

impl AlgebraElem {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlgebraElem {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.coords.len(), other.coords.len());
        AlgebraElem {
            coords: self.coords.iter().zip(&other.coords).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }
}

impl AlgebraParams {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>) -> Result<Self, AlgebraError> {
        if a.len() != b.len() {
            return Err(AlgebraError::InvalidParams(format!(
                "{} values for a but {} for b",
                a.len(),
                b.len()
            )));
        }
        if a.len() > MAX_FACTORS {
            return Err(AlgebraError::InvalidParams(format!(
                "at most {MAX_FACTORS} factors are supported"
            )));
        }
        if a.iter().chain(&b).any(Zero::is_zero) {
            return Err(AlgebraError::InvalidParams("parameters must be nonzero".into()));
        }
        Ok(AlgebraParams { a, b })
    }

    /// `a_i = p_i` and `b_i = p_{n+i}`: distinct primes throughout.
    pub fn from_primes(n: usize, primes: &PrimeTable) -> Self {
        let p = |i: usize| Rational::from_integer(BigInt::from(primes.prime(i as u32)));
        AlgebraParams::new((1..=n).map(p).collect(), (n + 1..=2 * n).map(p).collect())
            .expect("primes are nonzero")
    }

    /// `n` copies of `(a, b)`.
    pub fn uniform(n: usize, a: Rational, b: Rational) -> Result<Self, AlgebraError> {
        AlgebraParams::new(vec![a; n], vec![b; n])
    }

    pub fn factors(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn dim(&self) -> usize {
        1 << (2 * self.factors())
    }

    pub fn zero(&self) -> AlgebraElem {
        AlgebraElem {
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    pub fn basis(&self, idx: usize) -> AlgebraElem {
        let mut x = self.zero();
        x.coords[idx] = Rational::one();
        x
    }

    pub fn one(&self) -> AlgebraElem {
        self.basis(0)
    }

    pub fn scalar(&self, c: Rational) -> AlgebraElem {
        self.one().scale(&c)
    }

    /// `u_i`, for `1 <= i <= n`.
    pub fn u(&self, i: usize) -> AlgebraElem {
        self.basis(BasisIndex { eps: 1 << (i - 1), mu: 0 }.to_index(self.factors()))
    }

    /// `v_i`, for `1 <= i <= n`.
    pub fn v(&self, i: usize) -> AlgebraElem {
        self.basis(BasisIndex { eps: 0, mu: 1 << (i - 1) }.to_index(self.factors()))
    }

    /// The generators `u_1..u_n, v_1..v_n`.
    pub fn generators(&self) -> Vec<AlgebraElem> {
        let n = self.factors();
        (1..=n).map(|i| self.u(i)).chain((1..=n).map(|i| self.v(i))).collect()
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<AlgebraElem, AlgebraError> {
        self.check(&AlgebraElem { coords })
    }

    fn check(&self, x: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        if x.coords.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: x.coords.len(),
            });
        }
        Ok(x.clone())
    }

    /// Structure constant: `basis_i · basis_j = c · basis_k`.
    ///
    /// Moving `v^μ₁` past `u^ε₂` costs a sign per shared index, then the `u`
    /// and `v` parts multiply independently, squared generators giving
    /// `a_i` and `b_i`.
    pub fn basis_product(&self, i: usize, j: usize) -> (usize, Rational) {
        let n = self.factors();
        let l = BasisIndex::from_index(n, i);
        let r = BasisIndex::from_index(n, j);
        let mut c = Rational::one();
        for k in 0..n {
            let bit = 1 << k;
            if l.eps & r.eps & bit != 0 {
                c *= &self.a[k];
            }
            if l.mu & r.mu & bit != 0 {
                c *= &self.b[k];
            }
        }
        if (l.mu & r.eps).count_ones() % 2 == 1 {
            c = -c;
        }
        let out = BasisIndex {
            eps: l.eps ^ r.eps,
            mu: l.mu ^ r.mu,
        };
        (out.to_index(n), c)
    }

    pub fn mul(&self, x: &AlgebraElem, y: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let (k, c) = self.basis_product(i, j);
                out.coords[k] += xi * yj * c;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &AlgebraElem, exp: u32) -> Result<AlgebraElem, AlgebraError> {
        let mut acc = self.one();
        for _ in 0..exp {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Matrix of left multiplication by `x` in the monomial basis.
    pub fn regular_matrix(&self, x: &AlgebraElem) -> Result<Matrix, AlgebraError> {
        self.check(x)?;
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..dim {
                let (k, c) = self.basis_product(i, j);
                m[(k, j)] += xi * c;
            }
        }
        Ok(m)
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_regular_matrix(&self, x: &AlgebraElem) -> Result<Matrix, AlgebraError> {
        self.check(x)?;
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..dim {
                let (k, c) = self.basis_product(j, i);
                m[(k, j)] += xi * c;
            }
        }
        Ok(m)
    }

    /// Regular norm: the determinant of left multiplication. On a central
    /// `c·1` it equals `c^{dim}`.
    pub fn norm(&self, x: &AlgebraElem) -> Result<Rational, AlgebraError> {
        Ok(self.regular_matrix(x)?.determinant())
    }

    pub fn inv(&self, x: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        let m = self.regular_matrix(x)?;
        let coords = m
            .solve(&self.one().coords)
            .ok_or(AlgebraError::SingularElement)?;
        Ok(AlgebraElem { coords })
    }

    /// `g h g⁻¹ h⁻¹`.
    pub fn commutator(&self, g: &AlgebraElem, h: &AlgebraElem) -> Result<AlgebraElem, AlgebraError> {
        let gh = self.mul(g, h)?;
        let ghg = self.mul(&gh, &self.inv(g)?)?;
        self.mul(&ghg, &self.inv(h)?)
    }

    /// Dimension over ℚ of the center, as the nullity of the stacked
    /// systems `L_g - R_g` over all generators `g`.
    pub fn centralizer_dimension(&self) -> usize {
        let blocks: Vec<Matrix> = self
            .generators()
            .iter()
            .map(|g| {
                let l = self.regular_matrix(g).expect("generator has the right size");
                let r = self.right_regular_matrix(g).expect("generator has the right size");
                l.sub(&r)
            })
            .collect();
        if blocks.is_empty() {
            return self.dim();
        }
        Matrix::vstack(&blocks).nullity()
    }

    /// Smallest `1 <= k <= bound` with `x^k = 1`.
    pub fn torsion_order(&self, x: &AlgebraElem, bound: u32) -> Result<Option<u32>, AlgebraError> {
        self.check(x)?;
        let one = self.one();
        let mut power = one.clone();
        for k in 1..=bound {
            power = self.mul(&power, x)?;
            if power == one {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

/// Embeds `x` into the twisted series ring via `u_i ↦ √p_i`, `v_i ↦ x_i`.
pub fn embed_in_series(params: &AlgebraParams, x: &AlgebraElem) -> Series {
    use crate::field::FieldElem;
    use crate::group::GroupWord;
    use crate::index_set::IndexSet;

    let n = params.factors();
    Series::from_terms(x.coords.iter().enumerate().map(|(idx, c)| {
        let bi = BasisIndex::from_index(n, idx);
        let mask: IndexSet = (0..n as u32).filter(|k| bi.eps & (1 << k) != 0).map(|k| k + 1).collect();
        let word = GroupWord::from_exponents(
            (0..n as u32)
                .filter(|k| bi.mu & (1 << k) != 0)
                .map(|k| (k + 1, BigInt::one())),
        );
        (word, FieldElem::monomial(mask, c.clone()))
    }))
}

/// Maps a series in `√p_1..√p_n, x_1^{±1}..x_n^{±1}` onto `A_n` by
/// specialising the central squares `x_i² ↦ b_i`. Requires `a_i = p_i` so
/// that the radical reduction already done in the series agrees with
/// `u_i² = a_i`.
pub fn specialize_series(
    params: &AlgebraParams,
    primes: &PrimeTable,
    s: &Series,
) -> Result<AlgebraElem, AlgebraError> {
    let n = params.factors();
    for (k, a) in params.a.iter().enumerate() {
        if *a != Rational::from_integer(BigInt::from(primes.prime(k as u32 + 1))) {
            return Err(AlgebraError::InvalidParams(format!(
                "a_{} must equal p_{} to specialise series",
                k + 1,
                k + 1
            )));
        }
    }
    if s.window() as usize > n {
        return Err(AlgebraError::InvalidParams(format!(
            "series involves index {} beyond the {n} factors",
            s.window()
        )));
    }
    let mut out = params.zero();
    for (word, coeff) in s.terms() {
        let mut mu = 0u32;
        let mut weight = Rational::one();
        for (i, e) in word.exponents() {
            let (q, r) = e.div_mod_floor(&BigInt::from(2));
            if r.is_one() {
                mu |= 1 << (i - 1);
            }
            let b = &params.b[i as usize - 1];
            let q_abs = q.abs().to_u64().expect("exponent fits in u64");
            let factor = rational::pow(b, q_abs);
            weight *= if q.is_negative() { factor.recip() } else { factor };
        }
        for (mask, c) in coeff.terms() {
            let eps = mask.iter().fold(0u32, |acc, i| acc | 1 << (i - 1));
            let idx = BasisIndex { eps, mu }.to_index(n);
            out.coords[idx] += c * &weight;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn quat(a: i64, b: i64) -> AlgebraParams {
        AlgebraParams::uniform(1, int(a), int(b)).unwrap()
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(BasisIndex { eps: 0b01, mu: 0b10 }.to_index(2), 0b1001);
        assert_eq!(BasisIndex::from_index(2, 0b1001), BasisIndex { eps: 0b01, mu: 0b10 });
        let p = quat(2, 3);
        assert_eq!(p.u(1), p.basis(1));
        assert_eq!(p.v(1), p.basis(2));
    }

    #[test]
    fn multiplication_examples() {
        let p = quat(2, 3);
        let uv = p.basis(3);
        assert_eq!(p.mul(&p.u(1), &p.v(1)).unwrap(), uv);
        assert_eq!(p.mul(&p.v(1), &p.u(1)).unwrap(), uv.scale(&int(-1)));
        assert_eq!(p.mul(&p.u(1), &p.u(1)).unwrap(), p.scalar(int(2)));
        assert_eq!(p.mul(&p.v(1), &p.v(1)).unwrap(), p.scalar(int(3)));
        let x = p.element(vec![int(1), frac(1, 2), int(-3), int(4)]).unwrap();
        assert_eq!(p.mul(&p.one(), &x).unwrap(), x);
    }

    #[test]
    fn dimension_mismatch() {
        let p = quat(-1, -1);
        let q = AlgebraParams::from_primes(2, &PrimeTable::default());
        assert_eq!(
            p.mul(&p.one(), &q.one()),
            Err(AlgebraError::DimensionMismatch { expected: 4, found: 16 })
        );
        assert!(p.element(vec![int(1)]).is_err());
    }

    #[test]
    fn invalid_params() {
        assert!(AlgebraParams::new(vec![int(0)], vec![int(1)]).is_err());
        assert!(AlgebraParams::new(vec![int(1)], vec![]).is_err());
    }

    #[test]
    fn regular_matrix_examples() {
        let p = quat(2, 3);
        assert_eq!(p.regular_matrix(&p.one()).unwrap(), Matrix::identity(4));
        assert_eq!(p.regular_matrix(&p.zero()).unwrap(), Matrix::zeros(4, 4));
        // u·1 = u, u·u = 2, u·v = uv, u·uv = 2v: blocks [[0,2],[1,0]]
        let expected = Matrix::from_rows(vec![
            vec![int(0), int(2), int(0), int(0)],
            vec![int(1), int(0), int(0), int(0)],
            vec![int(0), int(0), int(0), int(2)],
            vec![int(0), int(0), int(1), int(0)],
        ]);
        assert_eq!(p.regular_matrix(&p.u(1)).unwrap(), expected);
    }

    #[test]
    fn norm_examples() {
        let p = quat(2, 3);
        assert_eq!(p.norm(&p.scalar(frac(3, 2))).unwrap(), frac(81, 16));
        assert_eq!(p.norm(&p.u(1)).unwrap(), int(4));
        let g = p.element(vec![int(1), int(1), int(0), int(2)]).unwrap();
        let h = p.element(vec![int(0), int(1), int(1), int(0)]).unwrap();
        let c = p.commutator(&g, &h).unwrap();
        assert_eq!(p.norm(&c).unwrap(), int(1));
    }

    #[test]
    fn inverse_examples() {
        let p = quat(2, 3);
        assert_eq!(p.inv(&p.one()).unwrap(), p.one());
        assert_eq!(p.inv(&p.u(1)).unwrap(), p.u(1).scale(&frac(1, 2)));
        assert_eq!(p.inv(&p.zero()), Err(AlgebraError::SingularElement));
        // (1, 1) is split: 1 + u is a zero divisor
        let split = quat(1, 1);
        let zd = split.one().add(&split.u(1));
        assert_eq!(split.inv(&zd), Err(AlgebraError::SingularElement));
    }

    #[test]
    fn centralizer_examples() {
        let t = PrimeTable::default();
        assert_eq!(quat(2, 3).centralizer_dimension(), 1);
        assert_eq!(AlgebraParams::from_primes(2, &t).centralizer_dimension(), 1);
        assert_eq!(AlgebraParams::new(vec![], vec![]).unwrap().centralizer_dimension(), 1);
    }

    #[test]
    fn torsion_examples() {
        let p = quat(-1, -1);
        assert_eq!(p.torsion_order(&p.scalar(int(-1)), 10).unwrap(), Some(2));
        let c = p.commutator(&p.u(1), &p.v(1)).unwrap();
        assert_eq!(c, p.scalar(int(-1)));
        assert_eq!(p.torsion_order(&c, 10).unwrap(), Some(2));
        assert_eq!(p.torsion_order(&p.scalar(int(2)), 10).unwrap(), None);
        assert_eq!(p.torsion_order(&p.u(1), 10).unwrap(), Some(4));
    }

    #[test]
    fn series_specialisation_matches_structure_constants() {
        let t = PrimeTable::default();
        let params = AlgebraParams::new(vec![int(2), int(3)], vec![int(-7), frac(5, 2)]).unwrap();
        let n = params.dim();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (params.basis(i), params.basis(j));
                let prod = embed_in_series(&params, &x).mul(&embed_in_series(&params, &y), &t);
                assert_eq!(
                    specialize_series(&params, &t, &prod).unwrap(),
                    params.mul(&x, &y).unwrap(),
                    "basis {i} * basis {j}"
                );
            }
        }
    }

    #[test]
    fn specialisation_needs_matching_primes() {
        let t = PrimeTable::default();
        let params = quat(-1, -1);
        assert!(specialize_series(&params, &t, &Series::one()).is_err());
    }
}
