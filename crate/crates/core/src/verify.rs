//! Seeded, exact verification suites for every identity the library
//! implements. Each check draws from its own random stream so outcomes do
//! not depend on which other checks ran.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{embed_in_series, specialize_series, AlgebraParams};
use crate::field::FieldElem;
use crate::gamma::{gamma_coefficient_witness, gamma_independence_probe};
use crate::group::GroupWord;
use crate::herstein::{
    lemma34_exponent_check, radical_exponent, thm35_conclusion_probe, thm35_identity_check, LabError,
    Subring,
};
use crate::index_set::Parity;
use crate::primes::PrimeTable;
use crate::quaternion::{Quat, QuaternionAlgebra};
use crate::random::{self, rng_for, SuiteRng};
use crate::rational::{factorial, frac, int, Rational};
use crate::series::Series;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Overrides the trial count of every randomized check.
    pub trials: Option<usize>,
    pub primes: PrimeTable,
}

impl VerifyConfig {
    pub fn new(seed: u64) -> Self {
        VerifyConfig {
            seed,
            trials: None,
            primes: PrimeTable::default(),
        }
    }

    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    fn rng(&self, stream: u64) -> SuiteRng {
        rng_for(self.seed, stream)
    }
}

/// Result of one named property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            trials: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Field,
    Order,
    Series,
    Center,
    Gamma,
    Algebra,
    Herstein,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Field,
        Suite::Order,
        Suite::Series,
        Suite::Center,
        Suite::Gamma,
        Suite::Algebra,
        Suite::Herstein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Field => "field",
            Suite::Order => "order",
            Suite::Series => "series",
            Suite::Center => "center",
            Suite::Gamma => "gamma",
            Suite::Algebra => "algebra",
            Suite::Herstein => "herstein",
        }
    }

    pub fn run(self, cfg: &VerifyConfig) -> SuiteReport {
        let checks = match self {
            Suite::Field => vec![
                field_axioms(cfg),
                automorphism_involution(cfg),
                automorphism_commutation(cfg),
                automorphism_homomorphism(cfg),
                fixed_field(cfg),
            ],
            Suite::Order => vec![order_laws(cfg), parity_homomorphism(cfg), squares_subgroup(cfg)],
            Suite::Series => vec![
                series_ring_axioms(cfg),
                twisting_law(cfg),
                twisting_relations(cfg),
                inversion_contract(cfg, 4),
                inversion_contract_all_depths(cfg),
            ],
            Suite::Center => vec![center_equivalence(cfg)],
            Suite::Gamma => vec![gamma_witness_grid(cfg), gamma_independence_grid(cfg)],
            Suite::Algebra => vec![
                algebra_axioms(cfg),
                regular_representation(cfg),
                centralizer_grid(cfg),
                commutator_norm(cfg),
                series_consistency(cfg),
            ],
            Suite::Herstein => vec![
                quaternion_inverse(cfg),
                thm35_identity(cfg),
                lemma34_exponents(cfg),
                radical_exponent_minimality(cfg),
            ],
        };
        SuiteReport {
            suite: self,
            seed: cfg.seed,
            checks,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub schema_version: u32,
    pub suite: String,
    pub checks: usize,
    pub trials: usize,
    pub failures: usize,
    pub seed: u64,
}

impl SuiteReport {
    pub fn trials(&self) -> usize {
        self.checks.iter().map(|c| c.trials).sum()
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn summary(&self) -> SuiteSummary {
        SuiteSummary {
            schema_version: crate::export::SCHEMA_VERSION,
            suite: self.suite.name().to_string(),
            checks: self.checks.len(),
            trials: self.trials(),
            failures: self.failures(),
            seed: self.seed,
        }
    }

    /// `suite=<name> checks=<n> trials=<n> failures=<n> seed=<s>`, followed
    /// by one indented line per failing case.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite={} checks={} trials={} failures={} seed={}",
            self.suite,
            self.checks.len(),
            self.trials(),
            self.failures(),
            self.seed
        );
        for c in &self.checks {
            for f in &c.failures {
                out.push_str(&format!("\n  {}: {}", c.name, f));
            }
        }
        out
    }
}

// ---------------------------------------------------------------- field

pub fn field_axioms(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("field-axioms");
    let mut rng = cfg.rng(1);
    let p = &cfg.primes;
    for _ in 0..cfg.trials(100) {
        let level = rng.random_range(1..=6);
        let a = random::field_elem(&mut rng, level, 4);
        let b = random::field_elem(&mut rng, level, 4);
        let c = random::field_elem(&mut rng, level, 4);
        out.record(a.mul(&b, p).mul(&c, p) == a.mul(&b.mul(&c, p), p), || format!("(ab)c != a(bc) for {a}, {b}, {c}"));
        out.record((&a + &b) + c.clone() == &a + &(&b + &c), || format!("addition not associative for {a}, {b}, {c}"));
        out.record(a.mul(&b, p) == b.mul(&a, p), || format!("ab != ba for {a}, {b}"));
        out.record(&a + &b == &b + &a, || format!("a + b != b + a for {a}, {b}"));
        out.record(
            a.mul(&(&b + &c), p) == &a.mul(&b, p) + &a.mul(&c, p),
            || format!("distributivity fails for {a}, {b}, {c}"),
        );
        if !a.is_zero() {
            let ok = a.inv(p).map(|ai| a.mul(&ai, p).is_one()).unwrap_or(false);
            out.record(ok, || format!("a * a^-1 != 1 for {a}"));
        }
    }
    out
}

pub fn automorphism_involution(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("automorphism-involution");
    let mut rng = cfg.rng(2);
    for i in 1..=8 {
        for _ in 0..cfg.trials(20) {
            let a = random::field_elem(&mut rng, 8, 6);
            let f = Parity::singleton(i);
            out.record(a.apply_auto(&f).apply_auto(&f) == a, || format!("f_{i} f_{i} != id on {a}"));
        }
    }
    out
}

pub fn automorphism_commutation(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("automorphism-commutation");
    let mut rng = cfg.rng(3);
    let trials = cfg.trials(20).div_ceil(8).max(1);
    for i in 1..=8 {
        for j in 1..=8 {
            for _ in 0..trials {
                let a = random::field_elem(&mut rng, 8, 6);
                let (fi, fj) = (Parity::singleton(i), Parity::singleton(j));
                out.record(
                    a.apply_auto(&fj).apply_auto(&fi) == a.apply_auto(&fi).apply_auto(&fj),
                    || format!("f_{i} f_{j} != f_{j} f_{i} on {a}"),
                );
            }
        }
    }
    out
}

pub fn automorphism_homomorphism(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("automorphism-homomorphism");
    let mut rng = cfg.rng(4);
    let p = &cfg.primes;
    for _ in 0..cfg.trials(100) {
        let a = random::field_elem(&mut rng, 5, 4);
        let b = random::field_elem(&mut rng, 5, 4);
        let f = random::mask(&mut rng, 6);
        out.record(
            (&a + &b).apply_auto(&f) == &a.apply_auto(&f) + &b.apply_auto(&f),
            || format!("automorphism {f} does not preserve {a} + {b}"),
        );
        out.record(
            a.mul(&b, p).apply_auto(&f) == a.apply_auto(&f).mul(&b.apply_auto(&f), p),
            || format!("automorphism {f} does not preserve {a} * {b}"),
        );
    }
    out
}

/// `f_i(a) = a` for all `i <= 4` iff `a ∈ ℚ`, at level 4.
pub fn fixed_field(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("fixed-field");
    let mut rng = cfg.rng(5);
    for k in 0..cfg.trials(100) {
        let a = if k % 3 == 0 {
            random::rational_field_elem(&mut rng)
        } else {
            random::field_elem(&mut rng, 4, 4)
        };
        let fixed = (1..=4).all(|i| a.apply_auto(&Parity::singleton(i)) == a);
        out.record(fixed == a.is_rational(), || format!("fixed = {fixed} but rational = {} for {a}", a.is_rational()));
    }
    out
}

// ---------------------------------------------------------------- order

/// Lexicographic comparison over dense exponent vectors, the definition
/// read literally.
fn dense_compare(x: &GroupWord, y: &GroupWord) -> Ordering {
    let len = x.max_index().max(y.max_index());
    let dense = |w: &GroupWord| -> Vec<BigInt> { (1..=len).map(|i| w.exponent(i)).collect() };
    dense(x).cmp(&dense(y))
}

pub fn order_laws(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("order-laws");
    let mut rng = cfg.rng(6);
    for _ in 0..cfg.trials(1000) {
        let x = random::group_word(&mut rng, 5, 3);
        let y = random::group_word(&mut rng, 5, 3);
        let z = random::group_word(&mut rng, 5, 3);
        let xy = x.cmp(&y);
        out.record(xy == dense_compare(&x, &y), || format!("compare({x}, {y}) disagrees with the dense definition"));
        out.record(y.cmp(&x) == xy.reverse(), || format!("antisymmetry fails for {x}, {y}"));
        out.record((xy == Ordering::Equal) == (x == y), || format!("totality fails for {x}, {y}"));
        let ok = !(x <= y && y <= z) || x <= z;
        out.record(ok, || format!("transitivity fails for {x}, {y}, {z}"));
        out.record(x.mul(&z).cmp(&y.mul(&z)) == xy, || format!("translation by {z} changes compare({x}, {y})"));
    }
    out
}

pub fn parity_homomorphism(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("parity-homomorphism");
    let mut rng = cfg.rng(7);
    for _ in 0..cfg.trials(300) {
        let x = random::group_word(&mut rng, 6, 4);
        let y = random::group_word(&mut rng, 6, 4);
        out.record(
            x.mul(&y).parity() == x.parity().symmetric_difference(&y.parity()),
            || format!("parity({x} * {y}) is not the symmetric difference"),
        );
    }
    out
}

pub fn squares_subgroup(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("squares-subgroup");
    let mut rng = cfg.rng(8);
    for _ in 0..cfg.trials(300) {
        let x = random::group_word(&mut rng, 6, 4);
        let h1 = random::square_word(&mut rng, 6, 4);
        let h2 = random::square_word(&mut rng, 6, 4);
        out.record(x.mul(&x).is_square(), || format!("{x}^2 not in H"));
        out.record(h1.mul(&h2).is_square() && h1.inv().is_square(), || format!("H not closed at {h1}, {h2}"));
        out.record(!x.is_square() || x.parity().is_empty(), || format!("Φ nontrivial on square {x}"));
    }
    out
}

// ---------------------------------------------------------------- series

pub fn series_ring_axioms(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("series-ring-axioms");
    let mut rng = cfg.rng(9);
    let p = &cfg.primes;
    let one = Series::one();
    for _ in 0..cfg.trials(60) {
        let a = random::series(&mut rng, 4, 3);
        let b = random::series(&mut rng, 4, 3);
        let c = random::series(&mut rng, 4, 3);
        out.record(a.mul(&b, p).mul(&c, p) == a.mul(&b.mul(&c, p), p), || format!("(ab)c != a(bc) for {a}; {b}; {c}"));
        out.record(
            a.mul(&(&b + &c), p) == &a.mul(&b, p) + &a.mul(&c, p),
            || format!("left distributivity fails for {a}; {b}; {c}"),
        );
        out.record(
            (&a + &b).mul(&c, p) == &a.mul(&c, p) + &b.mul(&c, p),
            || format!("right distributivity fails for {a}; {b}; {c}"),
        );
        out.record(a.mul(&one, p) == a && one.mul(&a, p) == a, || format!("1 is not an identity for {a}"));
    }
    out
}

/// `x·a = Φ_x(a)·x` for random words and scalars.
pub fn twisting_law(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("twisting-law");
    let mut rng = cfg.rng(10);
    let p = &cfg.primes;
    for _ in 0..cfg.trials(200) {
        let x = random::group_word(&mut rng, 6, 3);
        let a = random::field_elem(&mut rng, 6, 4);
        let lhs = Series::word(x.clone()).mul(&Series::scalar(a.clone()), p);
        let rhs = Series::monomial(x.clone(), a.apply_auto(&x.parity()));
        out.record(lhs == rhs, || format!("{x} * ({a}) != Φ_x({a}) {x}"));
    }
    out
}

/// The commutation rules between generators and radicals, exhaustively for
/// `i, j <= 8` and `1 <= n <= 6`:
/// `x_i^n √p_i = (-1)^n √p_i x_i^n` and `x_j^n √p_i = √p_i x_j^n` (`i != j`).
pub fn twisting_relations(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("twisting-relations");
    let p = &cfg.primes;
    for i in 1..=8u32 {
        let s = Series::sqrt_prime(i);
        for j in 1..=8u32 {
            for n in 1..=6i64 {
                let xn = Series::word(GroupWord::power(j, n));
                let lhs = xn.mul(&s, p);
                let sign = if i == j && n % 2 == 1 { -1 } else { 1 };
                let rhs = s.mul(&xn, p).scale(&int(sign));
                out.record(lhs == rhs, || format!("x{j}^{n} s{i} != {sign} s{i} x{j}^{n}"));
                // the general rule x a = Φ_x(a) x on the same pair
                let twisted = FieldElem::sqrt_prime(i).apply_auto(&GroupWord::power(j, n).parity());
                out.record(
                    lhs == Series::monomial(GroupWord::power(j, n), twisted),
                    || format!("x{j}^{n} s{i} != Φ(s{i}) x{j}^{n}"),
                );
            }
        }
    }
    out
}

/// Checks `a · inv(a, depth) = 1 + ρ` with `supp ρ >= (min supp ε)^{depth+1}`
/// on random nonzero exact series, and exactness of monomial inverses.
pub fn inversion_contract(cfg: &VerifyConfig, depth: u32) -> CheckOutcome {
    let mut out = CheckOutcome::new("inversion-contract");
    let mut rng = cfg.rng(11 + depth as u64);
    let p = &cfg.primes;
    for _ in 0..cfg.trials(50) {
        let a = random::nonzero_series(&mut rng, 3, 4);
        out.record(inverse_residual_ok(&a, depth, p), || format!("residual bound fails for {a} at depth {depth}"));
        let (word, coeff) = (random::group_word(&mut rng, 4, 3), random::nonzero_field_elem(&mut rng, 4, 3));
        let m = Series::monomial(word, coeff);
        let ok = m
            .inv(depth, p)
            .map(|mi| mi.is_exact() && m.mul(&mi, p) == Series::one() && mi.mul(&m, p) == Series::one())
            .unwrap_or(false);
        out.record(ok, || format!("monomial {m} does not invert exactly"));
    }
    out
}

fn inverse_residual_ok(a: &Series, depth: u32, p: &PrimeTable) -> bool {
    let Ok(inv) = a.inv(depth, p) else { return false };
    let Ok((_, eps)) = a.neumann_split(p) else { return false };
    let product = a.mul(&inv, p);
    let residual = &product.with_truncation(None) - &Series::one();
    match eps.leading_term() {
        None => inv.is_exact() && residual.is_zero(),
        Some((m, _)) => {
            let bound = m.pow(depth as i64 + 1);
            inv.truncation() == Some(depth) && residual.support().all(|w| *w >= bound)
        }
    }
}

pub fn inversion_contract_all_depths(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("inversion-contract-depths");
    let mut rng = cfg.rng(20);
    let p = &cfg.primes;
    for depth in 1..=3 {
        for _ in 0..cfg.trials(30) {
            let a = random::nonzero_series(&mut rng, 3, 4);
            out.record(inverse_residual_ok(&a, depth, p), || format!("residual bound fails for {a} at depth {depth}"));
        }
    }
    out
}

// ---------------------------------------------------------------- center

pub fn center_equivalence(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("center-equivalence");
    let mut rng = cfg.rng(21);
    let p = &cfg.primes;
    for _ in 0..cfg.trials(200) {
        let a = random::center_probe_series(&mut rng, 4, 6);
        let central = a.is_central();
        let window = a.commutation_window_test(p);
        out.record(
            central.is_ok() && central == window,
            || format!("is_central = {central:?}, window test = {window:?} for {a}"),
        );
    }
    out
}

/// Counts how many series the center check saw on each side, for reports.
pub fn center_balance(cfg: &VerifyConfig) -> (usize, usize) {
    let mut rng = cfg.rng(21);
    let mut central = 0;
    let trials = cfg.trials(200);
    for _ in 0..trials {
        let a = random::center_probe_series(&mut rng, 4, 6);
        central += usize::from(a.is_central() == Ok(true));
    }
    (central, trials - central)
}

// ---------------------------------------------------------------- gamma

/// For `1 <= n <= 5` and `n <= N <= 6`: coefficient `n!` and absence below
/// degree `n`.
pub fn gamma_witness_grid(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("gamma-witness");
    for n in 1..=5 {
        for big_n in n..=6 {
            let w = gamma_coefficient_witness(big_n, n, &cfg.primes);
            out.record(
                w.as_ref().is_ok_and(|w| w.coefficient == factorial(n) && w.absent_below_degree),
                || format!("N = {big_n}, n = {n}: {w:?}"),
            );
        }
    }
    out
}

pub fn gamma_independence_grid(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("gamma-independence");
    for big_n in 1..=6 {
        for n in 0..=big_n.min(5) {
            let rank = gamma_independence_probe(big_n, n, &cfg.primes);
            out.record(rank == Ok(n as usize + 1), || format!("N = {big_n}, n = {n}: rank {rank:?}"));
        }
    }
    out
}

// ---------------------------------------------------------------- algebra

fn param_sets(n: usize, primes: &PrimeTable) -> Vec<(&'static str, AlgebraParams)> {
    let mixed_a = [frac(2, 1), frac(-3, 1), frac(5, 2)];
    let mixed_b = [frac(-1, 1), frac(7, 1), frac(1, 3)];
    vec![
        ("primes", AlgebraParams::from_primes(n, primes)),
        ("hamilton", AlgebraParams::uniform(n, int(-1), int(-1)).expect("nonzero")),
        ("split", AlgebraParams::uniform(n, int(1), int(1)).expect("nonzero")),
        (
            "mixed",
            AlgebraParams::new(mixed_a[..n].to_vec(), mixed_b[..n].to_vec()).expect("nonzero"),
        ),
    ]
}

pub fn algebra_axioms(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("algebra-axioms");
    let mut rng = cfg.rng(22);
    for (n, default_trials, nonzeros) in [(1usize, 40usize, 4usize), (2, 15, 8), (3, 4, 10)] {
        let params = AlgebraParams::from_primes(n, &cfg.primes);
        for _ in 0..cfg.trials(default_trials) {
            let x = random::sparse_alg_elem(&mut rng, &params, nonzeros);
            let y = random::sparse_alg_elem(&mut rng, &params, nonzeros);
            let z = random::sparse_alg_elem(&mut rng, &params, nonzeros);
            let m = |a, b| params.mul(a, b).expect("matching dimensions");
            let (xy, yz) = (m(&x, &y), m(&y, &z));
            out.record(m(&xy, &z) == m(&x, &yz), || format!("A_{n} not associative"));
            let (y_plus_z, xz) = (y.add(&z), m(&x, &z));
            out.record(m(&x, &y_plus_z) == xy.add(&xz), || format!("A_{n} not distributive"));
        }
    }
    out
}

pub fn regular_representation(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("regular-representation");
    let mut rng = cfg.rng(23);
    for (n, default_trials) in [(1usize, 30usize), (2, 8)] {
        for (_, params) in param_sets(n, &cfg.primes) {
            for _ in 0..cfg.trials(default_trials).div_ceil(4) {
                let x = random::alg_elem(&mut rng, &params);
                let y = random::alg_elem(&mut rng, &params);
                let lx = params.regular_matrix(&x).expect("dims");
                let ly = params.regular_matrix(&y).expect("dims");
                let lxy = params.regular_matrix(&params.mul(&x, &y).expect("dims")).expect("dims");
                out.record(lxy == lx.mul(&ly), || format!("L(xy) != L(x)L(y) in A_{n}"));
                out.record(
                    lxy.determinant() == lx.determinant() * ly.determinant(),
                    || format!("norm not multiplicative in A_{n}"),
                );
            }
        }
    }
    out
}

/// Center of `A_n` is ℚ for `n ∈ {1, 2, 3}` under four parameter sets,
/// one of them split.
pub fn centralizer_grid(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("centralizer-dimension");
    for n in 1..=3 {
        for (name, params) in param_sets(n, &cfg.primes) {
            let d = params.centralizer_dimension();
            out.record(d == 1, || format!("n = {n}, {name} parameters: center has dimension {d}"));
        }
    }
    out
}

/// Regular norm of commutators is 1, central `c` has norm `c^{dim}`, and
/// the commutator `u v u⁻¹ v⁻¹ = -1` has order 2.
pub fn commutator_norm(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("commutator-norm");
    let mut rng = cfg.rng(24);
    let params = AlgebraParams::uniform(1, int(-1), int(-1)).expect("nonzero");
    for _ in 0..cfg.trials(100) {
        let g = nonzero_alg_elem(&mut rng, &params);
        let h = nonzero_alg_elem(&mut rng, &params);
        let norm = params.commutator(&g, &h).and_then(|c| params.norm(&c));
        out.record(norm == Ok(Rational::one()), || format!("norm of commutator is {norm:?}"));
        // a product of k commutators, k independent of the dimension
        let k = rng.random_range(2..=4);
        let mut product = params.one();
        for _ in 0..k {
            let c = params
                .commutator(&nonzero_alg_elem(&mut rng, &params), &nonzero_alg_elem(&mut rng, &params))
                .expect("nonzero quaternions are invertible");
            product = params.mul(&product, &c).expect("dims");
        }
        let norm = params.norm(&product);
        out.record(norm == Ok(Rational::one()), || format!("norm of a product of {k} commutators is {norm:?}"));
        let c = random::nonzero_rational(&mut rng);
        let central = params.norm(&params.scalar(c.clone()));
        out.record(central == Ok(crate::rational::pow(&c, 4)), || format!("norm({c}) = {central:?}"));
    }
    let minus_one = params.commutator(&params.u(1), &params.v(1));
    out.record(minus_one == Ok(params.scalar(int(-1))), || format!("[u, v] = {minus_one:?}"));
    let order = params.torsion_order(&params.scalar(int(-1)), 16);
    out.record(order == Ok(Some(2)), || format!("order of -1 is {order:?}"));

    let bigger = AlgebraParams::from_primes(2, &cfg.primes);
    for _ in 0..cfg.trials(10) {
        let g = random::sparse_alg_elem(&mut rng, &bigger, 4);
        let h = random::sparse_alg_elem(&mut rng, &bigger, 4);
        let Ok(c) = bigger.commutator(&g, &h) else { continue };
        let norm = bigger.norm(&c);
        out.record(norm == Ok(Rational::one()), || format!("norm of commutator in A_2 is {norm:?}"));
    }
    out
}

fn nonzero_alg_elem(rng: &mut SuiteRng, params: &AlgebraParams) -> crate::algebra::AlgebraElem {
    loop {
        let x = random::alg_elem(rng, params);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Products in `A_n` agree with the series product followed by
/// `x_i² ↦ b_i`.
pub fn series_consistency(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("series-consistency");
    let mut rng = cfg.rng(25);
    let p = &cfg.primes;
    for n in 1..=2usize {
        let a: Vec<Rational> = (1..=n as u32).map(|i| Rational::from_integer(BigInt::from(p.prime(i)))).collect();
        let b: Vec<Rational> = (0..n).map(|_| random::nonzero_rational(&mut rng)).collect();
        let params = AlgebraParams::new(a, b).expect("nonzero");
        for _ in 0..cfg.trials(25) {
            let x = random::alg_elem(&mut rng, &params);
            let y = random::alg_elem(&mut rng, &params);
            let via_series = embed_in_series(&params, &x).mul(&embed_in_series(&params, &y), p);
            let lhs = specialize_series(&params, p, &via_series);
            let rhs = params.mul(&x, &y);
            out.record(lhs.is_ok() && lhs == rhs, || format!("A_{n} product disagrees with the series product"));
        }
    }
    out
}

// ---------------------------------------------------------------- herstein

pub fn quaternion_inverse(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("quaternion-inverse");
    let mut rng = cfg.rng(26);
    let h = QuaternionAlgebra::default();
    let n1 = AlgebraParams::uniform(1, int(-1), int(-1)).expect("nonzero");
    for _ in 0..cfg.trials(200) {
        let x = random::nonzero_quat(&mut rng);
        let ok = h.inv(&x).is_some_and(|xi| h.mul(&x, &xi) == Quat::one() && h.mul(&xi, &x) == Quat::one());
        out.record(ok, || format!("{x:?} has no two-sided inverse"));
        // closed-form product agrees with the structure constants of A_1
        let y = random::quat(&mut rng);
        let as_alg = |q: &Quat| n1.element(q.0.to_vec()).expect("four coordinates");
        let prod = n1.mul(&as_alg(&x), &as_alg(&y)).expect("dims");
        out.record(prod == as_alg(&h.mul(&x, &y)), || format!("quaternion product disagrees with A_1 for {x:?}, {y:?}"));
    }
    out
}

pub fn thm35_identity(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("radical-identity");
    let mut rng = cfg.rng(27);
    let h = QuaternionAlgebra::default();
    for m in 1..=5 {
        let mut done = 0;
        while done < cfg.trials(100) {
            let a = random::nonzero_quat(&mut rng);
            let b = random::nonzero_quat(&mut rng);
            if (&a + &b).is_zero() || (&b + &Quat::one()).is_zero() {
                continue;
            }
            done += 1;
            let id = thm35_identity_check(&h, &a, &b, m);
            out.record(id == Ok(true), || format!("identity fails for m = {m}: {id:?}"));
            if a == Quat::one() {
                continue;
            }
            let probe = thm35_conclusion_probe(&h, &a, &b, m);
            out.record(probe.is_ok(), || format!("conclusion probe fails for m = {m}: {probe:?}"));
        }
    }
    // the commutation branch is exercised by pure quaternions at even m
    for _ in 0..cfg.trials(100) / 4 {
        let a = random::pure_quat(&mut rng);
        let b = random::pure_quat(&mut rng);
        if (&a + &b).is_zero() {
            continue;
        }
        let probe = thm35_conclusion_probe(&h, &a, &b, 2);
        out.record(
            probe == Ok(crate::herstein::Conclusion::Commutation),
            || format!("pure pair at m = 2 gave {probe:?}"),
        );
    }
    out
}

pub fn lemma34_exponents(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("exponent-bookkeeping");
    let mut rng = cfg.rng(28);
    let h = QuaternionAlgebra::default();
    for k in 0..cfg.trials(100) {
        let (a, x, y, r, s) = match k % 3 {
            // a² central: r = s = 2 works for any x, y
            0 => (random::pure_quat(&mut rng), random::nonzero_quat(&mut rng), random::nonzero_quat(&mut rng), 2, 2),
            // x, y in ℚ(a): r = s = 1
            1 => {
                let a = random::nonzero_quat(&mut rng);
                let poly = |rng: &mut SuiteRng| {
                    let q = &Quat::scalar(random::nonzero_rational(rng)) + &a.scale(&random::rational(rng));
                    if q.is_zero() { Quat::one() } else { q }
                };
                let (x, y) = (poly(&mut rng), poly(&mut rng));
                (a, x, y, 1, 1)
            }
            // arbitrary: hypotheses usually fail and must be rejected
            _ => (random::nonzero_quat(&mut rng), random::nonzero_quat(&mut rng), random::nonzero_quat(&mut rng), rng.random_range(1..=3), rng.random_range(1..=3)),
        };
        let hyp = h.commutes(&h.pow(&a, r), &x) && h.commutes(&h.pow(&a, s), &y);
        let res = lemma34_exponent_check(&h, &a, &x, &y, r, s);
        let ok = match res {
            Ok(v) => hyp && v,
            Err(LabError::BadArguments(_)) => !hyp,
            Err(_) => false,
        };
        out.record(ok, || format!("hypotheses hold = {hyp}, result {res:?}"));
    }
    out
}

pub fn radical_exponent_minimality(cfg: &VerifyConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new("radical-exponent");
    let mut rng = cfg.rng(29);
    let h = QuaternionAlgebra::default();
    let bound = 12;
    for k in 0..cfg.trials(100) {
        let x = if k % 2 == 0 { random::quat(&mut rng) } else { random::pure_quat(&mut rng) };
        for sub in [Subring::Center, Subring::FieldU, Subring::FieldV] {
            let got = radical_exponent(&h, &x, sub, bound);
            let powers: Vec<Quat> = (1..=bound).map(|e| h.pow(&x, e)).collect();
            let expected = powers.iter().position(|q| sub.contains(q)).map(|p| p as u32 + 1);
            out.record(got == expected, || format!("{x:?} in {sub:?}: got {got:?}, expected {expected:?}"));
        }
    }
    out
}
