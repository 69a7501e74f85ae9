//! Checks that only hold over Gorenstein (symmetric) semigroup rings.
//!
//! Over a Gorenstein ring `δ(R/I) = 1` exactly when `I` is Elias, so the
//! δ-invariant is reported through that equivalence and the Auslander index
//! coincides with the Elias index.

use serde::{Deserialize, Serialize};

use super::{elias_index, is_elias, require_m_primary};
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;

/// `(t^v) : I` for a value `v` of `I`, which is Elias exactly when
/// `t^v ∈ mI`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalColonCheck {
    pub value: i64,
    pub colon_elias: bool,
    pub in_m_times_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub delta_is_one: bool,
    pub auslander_index: u32,
    /// `0` is a value of `m I^{-1}`, i.e. `1 ∈ m I^{-1}`.
    pub unit_in_m_inverse: bool,
    /// `I ⊆ m tr(I)`.
    pub contained_in_m_trace: bool,
    pub principal_colons: Vec<PrincipalColonCheck>,
}

pub fn gorenstein_report(ideal: &ValueIdeal) -> Result<GorensteinReport> {
    let h = ideal.semigroup();
    if !h.is_symmetric() {
        return Err(Error::NotGorenstein);
    }
    require_m_primary(ideal)?;
    let m = ValueIdeal::maximal(h);
    let elias = is_elias(ideal)?.elias;

    let unit_in_m_inverse = m.product(&ideal.inverse())?.contains(0);
    if unit_in_m_inverse != elias {
        return Err(Error::InternalDisagreement(format!(
            "{ideal}: Elias {elias} but 1 ∈ m I^-1 is {unit_in_m_inverse}"
        )));
    }
    let contained_in_m_trace = ideal.is_subset_of(&m.product(&ideal.trace())?)?;
    if elias && !contained_in_m_trace {
        return Err(Error::InternalDisagreement(format!(
            "{ideal} is Elias but not inside m tr(I)"
        )));
    }

    let m_ideal = m.product(ideal)?;
    let mut principal_colons = Vec::new();
    for value in ideal.values_below(ideal.stable() + h.multiplicity()) {
        let colon = ValueIdeal::from_generators(h, &[value])?.colon(ideal)?;
        // (t^v) : I = R only when I = (t^v), which is not Elias-tested
        let colon_elias = !colon.is_unit() && is_elias(&colon)?.elias;
        let in_m_times_ideal = m_ideal.contains(value);
        if colon_elias != in_m_times_ideal {
            return Err(Error::InternalDisagreement(format!(
                "(t^{value}) : {ideal} = {colon}: Elias {colon_elias}, t^{value} ∈ mI {in_m_times_ideal}"
            )));
        }
        principal_colons.push(PrincipalColonCheck {
            value,
            colon_elias,
            in_m_times_ideal,
        });
    }

    Ok(GorensteinReport {
        delta_is_one: elias,
        auslander_index: elias_index(h),
        unit_in_m_inverse,
        contained_in_m_trace,
        principal_colons,
    })
}
