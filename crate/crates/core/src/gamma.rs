//! Finite witnesses for the transcendence of `γ = x_1^{-1} + x_2^{-1} + ...`
//! over the center.
//!
//! `γ` has infinite support and is represented through its truncations
//! `γ_N = x_1^{-1} + ... + x_N^{-1}`. In `γ_N^n` the word
//! `X = x_1^{-1} ··· x_n^{-1}` arises once from each ordering of the `n`
//! distinct factors, so its coefficient is `n!`, while every lower power has
//! words of total degree `-k > -n` only.

use std::collections::BTreeSet;

use crate::field::FieldElem;
use crate::group::GroupWord;
use crate::linalg::Matrix;
use crate::primes::PrimeTable;
use crate::rational::Rational;
use crate::series::{Series, SeriesError};

/// `γ_N = Σ_{i=1}^{N} x_i^{-1}`.
pub fn gamma_series(n_terms: u32) -> Result<Series, SeriesError> {
    if n_terms == 0 {
        return Err(SeriesError::BadArguments("gamma truncation length must be at least 1".into()));
    }
    Ok(Series::from_terms(
        (1..=n_terms).map(|i| (GroupWord::power(i, -1), FieldElem::one())),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaWitness {
    /// Coefficient of `x_1^{-1} ··· x_n^{-1}` in `γ_N^n`.
    pub coefficient: Rational,
    /// Whether that word is absent from `γ_N^k` for every `1 <= k < n`.
    pub absent_below_degree: bool,
}

fn check_degree(n_terms: u32, degree: u32, allow_zero: bool) -> Result<(), SeriesError> {
    if n_terms == 0 || (degree == 0 && !allow_zero) || degree > n_terms {
        return Err(SeriesError::BadArguments(format!(
            "need {}1 <= N and degree <= N, got N = {n_terms}, degree = {degree}",
            if allow_zero { "" } else { "1 <= degree, " }
        )));
    }
    Ok(())
}

pub fn gamma_coefficient_witness(
    n_terms: u32,
    degree: u32,
    primes: &PrimeTable,
) -> Result<GammaWitness, SeriesError> {
    check_degree(n_terms, degree, false)?;
    let gamma = gamma_series(n_terms)?;
    let target = GroupWord::inverse_prefix_product(degree);
    let mut power = Series::one();
    let mut absent_below_degree = true;
    for k in 1..=degree {
        power = power.mul(&gamma, primes);
        if k < degree && !power.coeff(&target).is_zero() {
            absent_below_degree = false;
        }
    }
    let coefficient = power
        .coeff(&target)
        .as_rational()
        .ok_or_else(|| SeriesError::BadArguments("witness coefficient is not rational".into()))?;
    Ok(GammaWitness {
        coefficient,
        absent_below_degree,
    })
}

/// Rank over ℚ of the coefficient vectors of `1, γ_N, ..., γ_N^degree`.
/// Rank `degree + 1` certifies that the truncated powers are independent.
pub fn gamma_independence_probe(
    n_terms: u32,
    degree: u32,
    primes: &PrimeTable,
) -> Result<usize, SeriesError> {
    check_degree(n_terms, degree, true)?;
    let gamma = gamma_series(n_terms)?;
    let mut powers = vec![Series::one()];
    for _ in 0..degree {
        let next = powers.last().expect("nonempty").mul(&gamma, primes);
        powers.push(next);
    }
    let columns: Vec<GroupWord> = powers
        .iter()
        .flat_map(|p| p.support().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = powers
        .iter()
        .map(|p| {
            columns
                .iter()
                .map(|w| {
                    p.coeff(w).as_rational().ok_or_else(|| {
                        SeriesError::BadArguments("gamma powers have rational coefficients".into())
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows).rank())
}
