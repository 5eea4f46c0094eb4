//! Exact checks of the radical-over-a-subring identities inside a rational
//! quaternion algebra.
//!
//! For a division subring `K` and elements `a, b` with `x = (a+b)a(a+b)⁻¹`,
//! `y = (b+1)a(b+1)⁻¹`, every power satisfies
//!
//! ```text
//! (x^m - y^m)·b = a^m(a - 1) + y^m - x^m·a
//! ```
//!
//! so either `x^m - y^m` is invertible and `b` is recovered from `a, x, y`,
//! or `x^m = y^m`, which forces `a^m = y^m` and `a^m b = b a^m`.

use thiserror::Error;

use crate::quaternion::{Quat, QuaternionAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("identity failed: {0}")]
    IdentityViolated(String),
}

/// The division subrings the lab can test membership in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subring {
    /// The center ℚ.
    Center,
    /// The maximal subfield `ℚ(u)`.
    FieldU,
    /// The maximal subfield `ℚ(v)`.
    FieldV,
}

impl Subring {
    pub fn contains(self, x: &Quat) -> bool {
        let [_, c1, c2, c3] = &x.0;
        use num_traits::Zero;
        match self {
            Subring::Center => c1.is_zero() && c2.is_zero() && c3.is_zero(),
            Subring::FieldU => c2.is_zero() && c3.is_zero(),
            Subring::FieldV => c1.is_zero() && c3.is_zero(),
        }
    }
}

/// Smallest `1 <= k <= bound` with `x^k ∈ K`.
pub fn radical_exponent(h: &QuaternionAlgebra, x: &Quat, k: Subring, bound: u32) -> Option<u32> {
    let mut power = Quat::one();
    for e in 1..=bound {
        power = h.mul(&power, x);
        if k.contains(&power) {
            return Some(e);
        }
    }
    None
}

struct Conjugates {
    am: Quat,
    xm: Quat,
    ym: Quat,
}

fn conjugates(h: &QuaternionAlgebra, a: &Quat, b: &Quat, m: u32) -> Result<Conjugates, LabError> {
    if m == 0 {
        return Err(LabError::BadArguments("m must be positive".into()));
    }
    let a_plus_b = a + b;
    let b_plus_1 = b + &Quat::one();
    let x = h
        .conjugate_by(a, &a_plus_b)
        .ok_or_else(|| LabError::BadArguments("a + b is not invertible".into()))?;
    let y = h
        .conjugate_by(a, &b_plus_1)
        .ok_or_else(|| LabError::BadArguments("b + 1 is not invertible".into()))?;
    let am = h.pow(a, m);
    let xm = h.pow(&x, m);
    let ym = h.pow(&y, m);
    // powers of a conjugate are conjugates of powers
    let xm_direct = h.conjugate_by(&am, &a_plus_b).expect("checked invertible");
    let ym_direct = h.conjugate_by(&am, &b_plus_1).expect("checked invertible");
    if xm != xm_direct || ym != ym_direct {
        return Err(LabError::IdentityViolated("conjugation does not commute with powers".into()));
    }
    Ok(Conjugates { am, xm, ym })
}

/// Evaluates both sides of `(x^m - y^m)b = a^m(a-1) + y^m - x^m a`.
pub fn thm35_identity_check(h: &QuaternionAlgebra, a: &Quat, b: &Quat, m: u32) -> Result<bool, LabError> {
    let Conjugates { am, xm, ym } = conjugates(h, a, b, m)?;
    let lhs = h.mul(&(&xm - &ym), b);
    let a_minus_1 = a - &Quat::one();
    let rhs = &(&h.mul(&am, &a_minus_1) + &ym) - &h.mul(&xm, a);
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conclusion {
    /// `x^m - y^m` is invertible and the identity solves for `b`.
    BSolvable,
    /// `x^m = y^m`, hence `a^m` commutes with `b`.
    Commutation,
}

/// Decides which branch of the dichotomy applies and verifies its
/// consequence exactly.
pub fn thm35_conclusion_probe(
    h: &QuaternionAlgebra,
    a: &Quat,
    b: &Quat,
    m: u32,
) -> Result<Conclusion, LabError> {
    let Conjugates { am, xm, ym } = conjugates(h, a, b, m)?;
    let diff = &xm - &ym;
    let a_minus_1 = a - &Quat::one();
    if let Some(diff_inv) = h.inv(&diff) {
        let bracket = &(&h.mul(&am, &a_minus_1) + &ym) - &h.mul(&xm, a);
        let solved = h.mul(&diff_inv, &bracket);
        if &solved != b {
            return Err(LabError::IdentityViolated(
                "(x^m - y^m)^-1 [a^m(a-1) + y^m - x^m a] does not reproduce b".into(),
            ));
        }
        return Ok(Conclusion::BSolvable);
    }
    if !diff.is_zero() {
        return Err(LabError::BadArguments(
            "x^m - y^m is a nonzero zero divisor; the algebra is split".into(),
        ));
    }
    let Some(a_minus_1_inv) = h.inv(&a_minus_1) else {
        return Err(LabError::BadArguments("a - 1 must be invertible in the commutation branch".into()));
    };
    // a^m (a - 1) = y^m (a - 1)
    let lhs = h.mul(&am, &a_minus_1);
    let rhs = h.mul(&ym, &a_minus_1);
    if lhs != rhs || h.mul(&rhs, &a_minus_1_inv) != am || am != ym {
        return Err(LabError::IdentityViolated("a^m differs from y^m".into()));
    }
    if !h.commutes(&am, b) {
        return Err(LabError::IdentityViolated("a^m does not commute with b".into()));
    }
    Ok(Conclusion::Commutation)
}

/// From `a^r x = x a^r` and `a^s y = y a^s`, checks
/// `a^{rs} = x a^{rs} x⁻¹ = y a^{rs} y⁻¹`.
pub fn lemma34_exponent_check(
    h: &QuaternionAlgebra,
    a: &Quat,
    x: &Quat,
    y: &Quat,
    r: u32,
    s: u32,
) -> Result<bool, LabError> {
    if r == 0 || s == 0 {
        return Err(LabError::BadArguments("exponents must be positive".into()));
    }
    if !h.is_invertible(x) || !h.is_invertible(y) {
        return Err(LabError::BadArguments("x and y must be invertible".into()));
    }
    let ar = h.pow(a, r);
    let as_ = h.pow(a, s);
    if !h.commutes(&ar, x) {
        return Err(LabError::BadArguments(format!("a^{r} does not commute with x")));
    }
    if !h.commutes(&as_, y) {
        return Err(LabError::BadArguments(format!("a^{s} does not commute with y")));
    }
    // a^{rs} = (a^r)^s = (x a^r x⁻¹)^s = x a^{rs} x⁻¹, and symmetrically for y
    let ars = h.pow(&ar, s);
    let via_x = h.conjugate_by(&ars, x).expect("checked invertible");
    let via_y = h.conjugate_by(&h.pow(&as_, r), y).expect("checked invertible");
    Ok(ars == via_x && ars == via_y && ars == h.pow(a, r * s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn h() -> QuaternionAlgebra {
        QuaternionAlgebra::default()
    }

    #[test]
    fn radical_exponents() {
        let h = h();
        assert_eq!(radical_exponent(&h, &Quat::u(), Subring::Center, 4), Some(2));
        assert_eq!(radical_exponent(&h, &Quat::scalar(int(7)), Subring::Center, 1), Some(1));
        assert_eq!(radical_exponent(&h, &Quat::scalar(int(7)), Subring::FieldV, 3), Some(1));
        // (1 + u)² = 2u, (1 + u)⁴ = -4
        let one_u = &Quat::one() + &Quat::u();
        assert_eq!(radical_exponent(&h, &one_u, Subring::Center, 20), Some(4));
        assert_eq!(radical_exponent(&h, &one_u, Subring::FieldU, 20), Some(1));
        // 1 + 2u corresponds to the Gaussian integer 1 + 2i, no power of
        // which is real
        let x = Quat::from_ints([1, 2, 0, 0]);
        assert_eq!(radical_exponent(&h, &x, Subring::Center, 20), None);
        assert_eq!(radical_exponent(&h, &Quat::v(), Subring::FieldU, 20), Some(2));
    }

    #[test]
    fn identity_examples() {
        let h = h();
        let a = Quat::from_ints([1, 2, -1, 3]);
        let b = Quat::from_ints([0, 1, 1, -2]);
        assert_eq!(thm35_identity_check(&h, &a, &b, 3), Ok(true));
        assert_eq!(thm35_identity_check(&h, &Quat::scalar(int(2)), &b, 5), Ok(true));
        assert_eq!(thm35_identity_check(&h, &Quat::u(), &Quat::v(), 2), Ok(true));
    }

    #[test]
    fn identity_preconditions() {
        let h = h();
        let a = Quat::u();
        assert!(matches!(thm35_identity_check(&h, &a, &-&a, 2), Err(LabError::BadArguments(_))));
        let minus_one = Quat::scalar(int(-1));
        assert!(matches!(thm35_identity_check(&h, &a, &minus_one, 2), Err(LabError::BadArguments(_))));
    }

    #[test]
    fn conclusion_examples() {
        let h = h();
        assert_eq!(thm35_conclusion_probe(&h, &Quat::u(), &Quat::v(), 2), Ok(Conclusion::Commutation));
        let a = Quat::from_ints([1, 2, -1, 3]);
        let b = Quat::from_ints([0, 1, 1, -2]);
        assert_eq!(thm35_conclusion_probe(&h, &a, &b, 1), Ok(Conclusion::BSolvable));
        assert_eq!(thm35_conclusion_probe(&h, &Quat::scalar(int(2)), &b, 3), Ok(Conclusion::Commutation));
    }

    #[test]
    fn exponent_examples() {
        let h = h();
        let (u, v, uv) = (Quat::u(), Quat::v(), Quat::uv());
        assert_eq!(lemma34_exponent_check(&h, &u, &v, &uv, 2, 2), Ok(true));
        let c = Quat::scalar(int(3));
        assert_eq!(lemma34_exponent_check(&h, &c, &v, &u, 1, 1), Ok(true));
        assert!(matches!(lemma34_exponent_check(&h, &u, &v, &v, 1, 2), Err(LabError::BadArguments(_))));
    }
}
