//! Elias ideals of one-dimensional local rings.
//!
//! The crate works in two settings:
//!
//! * numerical semigroup rings k[[H]] with monomial ideals, handled exactly
//!   through value sets ([`semigroup`], [`ideal`]);
//! * subrings of products of truncated Laurent-series lines over ℚ
//!   (semigroup rings and the coordinate-axes rings), handled by exact
//!   linear algebra ([`series`]), which also covers non-monomial ideals.
//!
//! [`criteria`] turns the characterizations of Elias ideals into decision
//! procedures that are cross-checked against each other, together with the
//! Ulrich, m-full and full predicates and the Elias, Ulrich and generalized
//! Loewy indices.

pub mod criteria;
pub mod error;
pub mod ideal;
pub mod semigroup;
pub mod series;

pub use criteria::{CriteriaReport, EliasVerdict};
pub use error::{Error, Result};
pub use ideal::{hilbert_function, quotient_length, ValueIdeal};
pub use semigroup::NumericalSemigroup;
