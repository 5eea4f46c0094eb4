//! Exact arithmetic in a twisted Mal'cev–Neumann series ring over a
//! multiquadratic field, together with the finite-dimensional algebras and
//! quaternion checks built on it.
//!
//! ```
//! use mnforge::{eval_str, PrimeTable, Series};
//!
//! let p = PrimeTable::default();
//! let a = eval_str("x1*s1", &p).unwrap();
//! let b = eval_str("-s1*x1", &p).unwrap();
//! assert_eq!(a, b);
//! assert!(eval_str("x1^2 + 3", &p).unwrap().is_central().unwrap());
//! assert_eq!(Series::one().to_string(), "1*e");
//! ```

pub mod algebra;
pub mod export;
pub mod expr;
pub mod field;
pub mod gamma;
pub mod group;
pub mod herstein;
pub mod index_set;
pub mod linalg;
pub mod primes;
pub mod quaternion;
pub mod random;
pub mod rational;
pub mod series;
pub mod verify;

pub use algebra::{AlgebraElem, AlgebraError, AlgebraParams, BasisIndex};
pub use expr::{eval, eval_str, eval_with_depth, parse, Expr, ExprError, ParseError};
pub use field::{FieldElem, FieldError};
pub use gamma::{gamma_coefficient_witness, gamma_independence_probe, gamma_series, GammaWitness};
pub use group::GroupWord;
pub use herstein::{Conclusion, LabError, Subring};
pub use index_set::{IndexSet, Parity, RadicalMask};
pub use linalg::Matrix;
pub use primes::{PrimeTable, PrimeTableError};
pub use quaternion::{Quat, QuaternionAlgebra};
pub use rational::Rational;
pub use series::{Series, SeriesError};
pub use verify::{Suite, SuiteReport, VerifyConfig};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/field-tower.md")]
    mod field_tower {}
    #[doc = include_str!("../../../book/src/ordered-group.md")]
    mod ordered_group {}
    #[doc = include_str!("../../../book/src/twisted-series.md")]
    mod twisted_series {}
    #[doc = include_str!("../../../book/src/gamma.md")]
    mod gamma {}
    #[doc = include_str!("../../../book/src/finite-algebras.md")]
    mod finite_algebras {}
    #[doc = include_str!("../../../book/src/identity-lab.md")]
    mod identity_lab {}
    #[doc = include_str!("../../../book/src/text-syntax.md")]
    mod text_syntax {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
