//! Exact linear algebra over truncated Laurent-series tuples.
//!
//! Rings are modeled as subspaces of `n` Laurent lines over ℚ cut off at
//! `t^N`. This covers numerical semigroup rings (one branch, supports in
//! `H`) and the coordinate-axes rings `k[[a_1..a_n]]/(a_i a_j)` (n branches,
//! equal constant terms), and lets ideals with non-monomial generators be
//! evaluated exactly. Every verdict assumes the truncation is deep enough;
//! [`truncation_stability_check`] re-derives it at twice the depth.

mod element;
mod linalg;
mod model;
mod oracle;

pub use element::{int, SeriesElement};
pub use linalg::{add_scaled, kernel, SparseVec, SubspaceBasis, Q};
pub use model::{BranchedRingModel, RingKind};
pub use oracle::{
    colength, contains_in_principal, gll_randomized, gll_upper_bound, ideal_subspace,
    is_elias_linear, power_generators, truncation_stability_check, GllRow, GllStatus,
    LinearEliasVerdict, WitnessSource,
};
