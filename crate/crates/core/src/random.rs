//! Seeded random elements drawn from small rational lattices.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElem, AlgebraParams};
use crate::field::FieldElem;
use crate::group::GroupWord;
use crate::index_set::IndexSet;
use crate::quaternion::Quat;
use crate::rational::{frac, Rational};
use crate::series::Series;

pub type SuiteRng = ChaCha8Rng;

/// Stream `stream` of the generator for `seed`. Independent streams keep
/// each check reproducible regardless of which other checks run.
pub fn rng_for(seed: u64, stream: u64) -> SuiteRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `p/q` with `|p| <= 5`, `1 <= q <= 4`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.random_range(-5..=5), rng.random_range(1..=4))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

pub fn mask<R: Rng>(rng: &mut R, level: u32) -> IndexSet {
    (1..=level).filter(|_| rng.random_bool(0.5)).collect()
}

/// Up to `max_terms` terms over radicals `√p_1..√p_level`.
pub fn field_elem<R: Rng>(rng: &mut R, level: u32, max_terms: usize) -> FieldElem {
    let n = rng.random_range(0..=max_terms);
    FieldElem::from_terms((0..n).map(|_| (mask(rng, level), nonzero_rational(rng))))
}

pub fn nonzero_field_elem<R: Rng>(rng: &mut R, level: u32, max_terms: usize) -> FieldElem {
    loop {
        let a = field_elem(rng, level, max_terms.max(1));
        if !a.is_zero() {
            return a;
        }
    }
}

pub fn rational_field_elem<R: Rng>(rng: &mut R) -> FieldElem {
    FieldElem::rational(nonzero_rational(rng))
}

/// Exponents in `-max_exp..=max_exp` on generators `1..=max_index`, each
/// present with probability 1/2.
pub fn group_word<R: Rng>(rng: &mut R, max_index: u32, max_exp: i64) -> GroupWord {
    let mut exps = Vec::new();
    for i in 1..=max_index {
        if rng.random_bool(0.5) {
            exps.push((i, BigInt::from(rng.random_range(-max_exp..=max_exp))));
        }
    }
    GroupWord::from_exponents(exps)
}

/// A word with all exponents even.
pub fn square_word<R: Rng>(rng: &mut R, max_index: u32, max_exp: i64) -> GroupWord {
    let half = group_word(rng, max_index, (max_exp / 2).max(1));
    half.mul(&half)
}

/// A random exact series with at most `max_terms` terms, generators and
/// radicals of index at most `level`.
pub fn series<R: Rng>(rng: &mut R, level: u32, max_terms: usize) -> Series {
    let n = rng.random_range(0..=max_terms);
    Series::from_terms((0..n).map(|_| (group_word(rng, level, 2), field_elem(rng, level, 3))))
}

pub fn nonzero_series<R: Rng>(rng: &mut R, level: u32, max_terms: usize) -> Series {
    loop {
        let s = series(rng, level, max_terms.max(1));
        if !s.is_zero() {
            return s;
        }
    }
}

/// Series biased toward the center: a third are central, a third are
/// central plus one perturbing term, the rest unconstrained.
pub fn center_probe_series<R: Rng>(rng: &mut R, level: u32, max_terms: usize) -> Series {
    let central = |rng: &mut R, n: usize| {
        Series::from_terms((0..n).map(|_| (square_word(rng, level, 4), rational_field_elem(rng))))
    };
    match rng.random_range(0..3) {
        0 => {
            let n = rng.random_range(0..=max_terms);
            central(rng, n)
        }
        1 => {
            let n = rng.random_range(0..max_terms.max(1));
            let base = central(rng, n);
            let word = group_word(rng, level, 2);
            let coeff = if rng.random_bool(0.5) {
                rational_field_elem(rng)
            } else {
                nonzero_field_elem(rng, level, 2)
            };
            let perturbed = &base + &Series::monomial(word, coeff);
            // keep within the term budget
            if perturbed.len() > max_terms {
                base
            } else {
                perturbed
            }
        }
        _ => series(rng, level, max_terms),
    }
}

pub fn quat<R: Rng>(rng: &mut R) -> Quat {
    Quat::new(rational(rng), rational(rng), rational(rng), rational(rng))
}

pub fn nonzero_quat<R: Rng>(rng: &mut R) -> Quat {
    loop {
        let q = quat(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

/// A pure quaternion `x1 u + x2 v + x3 uv`, whose square is central.
pub fn pure_quat<R: Rng>(rng: &mut R) -> Quat {
    loop {
        let q = Quat::new(Rational::from_integer(0.into()), rational(rng), rational(rng), rational(rng));
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn alg_elem<R: Rng>(rng: &mut R, params: &AlgebraParams) -> AlgebraElem {
    params
        .element((0..params.dim()).map(|_| rational(rng)).collect())
        .expect("correct dimension")
}

/// Coordinates mostly zero: keeps products of elements in large `A_n` cheap.
pub fn sparse_alg_elem<R: Rng>(rng: &mut R, params: &AlgebraParams, nonzeros: usize) -> AlgebraElem {
    let mut coords = vec![Rational::from_integer(0.into()); params.dim()];
    for _ in 0..nonzeros {
        let k = rng.random_range(0..params.dim());
        coords[k] = rational(rng);
    }
    params.element(coords).expect("correct dimension")
}
