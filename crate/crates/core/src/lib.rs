//! Exact-arithmetic toolkit around the shifted-square equation
//! `a·x² + k = (a+k)·y²` and its relatives.
//!
//! The pieces fit together like this:
//!
//! * [`arith`]: integer square roots, squarefree decomposition, divisors;
//!   everything downstream runs on arbitrary-precision [`Natural`]s with no
//!   silent overflow.
//! * [`pell`]: continued-fraction solver for `u² − d·v² = 1` and the full
//!   solution stream under unit composition.
//! * [`shift_square`]: turns Pell solutions over `d = a(a+k)` into exact
//!   witnesses `(x, y)` of `a·x² + k = (a+k)·y²`, one infinite family per
//!   instance, plus the norm-form view `z² − d·x² = k(a+k)`.
//! * [`square_products`]: the finitely many `a` for which `a(a+k)` is a
//!   perfect square (the degenerate instances the solver must skip), each
//!   with a checkable certificate.
//! * [`syndetic`]: finite samples of gap-bounded sets and the dichotomy
//!   that exhibits `{a, a·x²}` subsets inside them.
//! * [`power_search`]: bounded exhaustive exploration of the generalized
//!   equation `a·x^m + k = (a+ℓ)·y^n`.

pub mod arith;
pub mod error;
pub mod pell;
pub mod power_search;
pub mod shift_square;
pub mod square_products;
pub mod syndetic;

/// Arbitrary-precision non-negative integer; the scalar type of the whole crate.
pub type Natural = num_bigint::BigUint;

/// Shorthand for building a [`Natural`] from a machine integer.
pub fn nat(n: u64) -> Natural {
    Natural::from(n)
}

pub use error::{Error, Result};
pub use pell::{ContinuedFraction, PellSolution};
pub use shift_square::{NormFormSolution, ShiftInstance, Witness};
pub use square_products::SquareProductCertificate;
pub use syndetic::{GeometricPairWitness, PairBranch, PairOutcome, SyndeticSample};
pub use power_search::{PowerEquationQuery, SearchResult, SurveyRow};
