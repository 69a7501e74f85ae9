//! Decision procedures for Elias ideals of numerical semigroup rings.
//!
//! An m-primary ideal `I` is Elias when `type(I) = type(R/I)`. With
//! `x = t^e` (a minimal reduction of m) and `K` the canonical ideal, the
//! following are equivalent and each is computed independently:
//!
//! * `type(I) = type(R/I)`;
//! * `xI : m ⊆ (x)`;
//! * `I :_Q m ⊆ R`;
//! * `K ⊆ m (K :_Q I)`.
//!
//! [`is_elias`] evaluates all four and refuses to answer if they disagree.

mod gorenstein;
mod indices;
mod predicates;
mod report;
mod sufficient;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{quotient_length, ValueIdeal};
use crate::semigroup::NumericalSemigroup;

pub use gorenstein::{gorenstein_report, GorensteinReport, PrincipalColonCheck};
pub use indices::{elias_index, frobenius_extension, gll_monomial, gr_is_cm, ulrich_index};
pub use predicates::{is_full, is_mfull_monomial_witness, is_ulrich};
pub use report::{
    Certificates, CriteriaReport, IdealSummary, Indices, Predicates, RingSummary,
};
pub use sufficient::{
    elias_via_small_mu, elias_via_ulrich_cover, ProductCertificate, SmallMuCertificate,
    SmallMuCertificates, UlrichCoverCertificate,
};

/// Rejects ideals that are not proper ideals of R.
pub(crate) fn require_m_primary(ideal: &ValueIdeal) -> Result<()> {
    if !ideal.is_integral() {
        return Err(Error::NotMPrimary(format!("{ideal} is not contained in R")));
    }
    if ideal.is_unit() {
        return Err(Error::NotMPrimary("the unit ideal".into()));
    }
    Ok(())
}

fn semigroup_of(ideal: &ValueIdeal) -> &Arc<NumericalSemigroup> {
    ideal.semigroup()
}

/// `(I : m) ∩ R`.
fn socle_lift(ideal: &ValueIdeal) -> Result<ValueIdeal> {
    let h = semigroup_of(ideal);
    ideal
        .colon(&ValueIdeal::maximal(h))?
        .intersect(&ValueIdeal::unit(h))
}

/// `type(R/I) = ℓ((I : m) / I)`.
pub fn type_of_quotient(ideal: &ValueIdeal) -> Result<usize> {
    require_m_primary(ideal)?;
    quotient_length(&socle_lift(ideal)?, ideal)
}

/// `type(I)`, computed as `μ(K :_Q I)` and as `ℓ((xI : m)/xI)` with
/// `x = t^e`; the two must agree.
///
/// Fractional ideals are moved into R first, which does not change the type.
pub fn type_of_ideal(ideal: &ValueIdeal) -> Result<usize> {
    let h = semigroup_of(ideal);
    let via_canonical = ValueIdeal::canonical(h).colon(ideal)?.mu();

    let into_ring = if ideal.is_integral() {
        0
    } else {
        (h.frobenius() + 1 - ideal.lo()).max(0)
    };
    let x_ideal = ideal.shift(into_ring + h.multiplicity());
    let via_socle = quotient_length(&socle_lift(&x_ideal)?, &x_ideal)?;

    if via_canonical != via_socle {
        return Err(Error::InternalDisagreement(format!(
            "type of {ideal}: mu(K:I) = {via_canonical}, l((xI:m)/xI) = {via_socle}"
        )));
    }
    Ok(via_canonical)
}

/// Verdict of each Elias characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliasMethods {
    /// `type(I) = type(R/I)`.
    pub type_equality: bool,
    /// `t^e I : m ⊆ (t^e)`.
    pub colon_te: bool,
    /// `I :_Q m ⊆ R`.
    pub fractional_colon: bool,
    /// `K ⊆ m (K :_Q I)`.
    pub canonical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliasVerdict {
    pub elias: bool,
    pub methods: EliasMethods,
    pub type_ideal: usize,
    pub type_quotient: usize,
    /// Smallest value of `I :_Q m` outside the semigroup, when not Elias.
    pub witness: Option<i64>,
}

pub fn is_elias(ideal: &ValueIdeal) -> Result<EliasVerdict> {
    require_m_primary(ideal)?;
    let h = semigroup_of(ideal);
    let m = ValueIdeal::maximal(h);
    let e = h.multiplicity();

    let type_ideal = type_of_ideal(ideal)?;
    let type_quotient = type_of_quotient(ideal)?;
    if type_ideal < type_quotient {
        return Err(Error::InternalDisagreement(format!(
            "type(I) = {type_ideal} < type(R/I) = {type_quotient}"
        )));
    }

    let x_ideal = ideal.shift(e);
    let colon_te = socle_lift(&x_ideal)?.is_subset_of(&ValueIdeal::from_generators(h, &[e])?)?;

    let fractional = ideal.colon(&m)?;
    let witness = fractional
        .values_below(fractional.stable().max(h.frobenius() + 1))
        .into_iter()
        .find(|&z| !h.contains(z));

    let k = ValueIdeal::canonical(h);
    let canonical = k.is_subset_of(&m.product(&k.colon(ideal)?)?)?;

    let methods = EliasMethods {
        type_equality: type_ideal == type_quotient,
        colon_te,
        fractional_colon: witness.is_none(),
        canonical,
    };
    let elias = methods.type_equality;
    if [methods.colon_te, methods.fractional_colon, methods.canonical]
        .iter()
        .any(|&v| v != elias)
    {
        return Err(Error::InternalDisagreement(format!(
            "Elias characterizations disagree on {ideal}: {methods:?}"
        )));
    }
    Ok(EliasVerdict {
        elias,
        methods,
        type_ideal,
        type_quotient,
        witness,
    })
}
