//! Sufficient conditions for an ideal to be Elias that only look at
//! generator counts or at values of generators.

use serde::{Deserialize, Serialize};

use super::{is_ulrich, require_m_primary, type_of_quotient};
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;

/// `μ(I) < e` and `type(R/I) >= e - 1`: `I` is Elias.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallMuCertificate {
    pub mu: usize,
    pub multiplicity: usize,
    pub type_quotient: usize,
}

/// `μ(mI) <= μ(I) = e - 1`: `mI` is Elias and `mI : m = I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCertificate {
    pub mu: usize,
    pub mu_of_product: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallMuCertificates {
    pub direct: Option<SmallMuCertificate>,
    pub product: Option<ProductCertificate>,
}

pub fn elias_via_small_mu(ideal: &ValueIdeal) -> Result<SmallMuCertificates> {
    require_m_primary(ideal)?;
    let h = ideal.semigroup();
    let e = h.multiplicity() as usize;
    let mu = ideal.mu();
    let type_quotient = type_of_quotient(ideal)?;

    let direct = (mu < e && type_quotient + 1 >= e).then_some(SmallMuCertificate {
        mu,
        multiplicity: e,
        type_quotient,
    });

    let m = ValueIdeal::maximal(h);
    let m_ideal = m.product(ideal)?;
    let mu_of_product = m_ideal.mu();
    let product = if mu + 1 == e && mu_of_product <= mu {
        let recovered = m_ideal.colon(&m)?.intersect(&ValueIdeal::unit(h))?;
        if recovered != *ideal {
            return Err(Error::InternalDisagreement(format!(
                "mI : m = {recovered}, expected {ideal}"
            )));
        }
        Some(ProductCertificate { mu, mu_of_product })
    } else {
        None
    };
    Ok(SmallMuCertificates { direct, product })
}

/// For each minimal generator `w` of the Ulrich ideal `J`, a value of
/// `t^w m` that is missing from `t^e I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichCoverCertificate {
    pub blocking: Vec<(i64, i64)>,
}

/// Certifies `I` Elias when `I ⊆ J`, `J` is Ulrich and no `t^w m` with `w`
/// a minimal generator of `J` lies inside `t^e I`.
pub fn elias_via_ulrich_cover(
    ideal: &ValueIdeal,
    cover: &ValueIdeal,
) -> Result<Option<UlrichCoverCertificate>> {
    require_m_primary(ideal)?;
    if !ideal.is_subset_of(cover)? {
        return Err(Error::NotContained);
    }
    if !is_ulrich(cover)? {
        return Err(Error::JNotUlrich);
    }
    let h = ideal.semigroup();
    let x_ideal = ideal.shift(h.multiplicity());
    let mut blocking = Vec::new();
    for w in cover.minimal_generators() {
        // t^w m ⊆ t^e I iff every w + g lies in e + E_I
        match h.generators().iter().map(|&g| w + g).find(|&v| !x_ideal.contains(v)) {
            Some(v) => blocking.push((w, v)),
            None => return Ok(None),
        }
    }
    Ok(Some(UlrichCoverCertificate { blocking }))
}
