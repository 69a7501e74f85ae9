use super::{require_m_primary, type_of_ideal};
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;

/// `μ(I) = e`, cross-checked against `type(I) = e` and `t^e I = m I`.
pub fn is_ulrich(ideal: &ValueIdeal) -> Result<bool> {
    require_m_primary(ideal)?;
    let h = ideal.semigroup();
    let e = h.multiplicity() as usize;
    let by_mu = ideal.mu() == e;
    let by_type = type_of_ideal(ideal)? == e;
    let m_ideal = ValueIdeal::maximal(h).product(ideal)?;
    let by_reduction = ideal.shift(h.multiplicity()) == m_ideal;
    if by_mu != by_type || by_mu != by_reduction {
        return Err(Error::InternalDisagreement(format!(
            "Ulrich test on {ideal}: mu {by_mu}, type {by_type}, reduction {by_reduction}"
        )));
    }
    Ok(by_mu)
}

/// `mI :_R t^e = I`. Only the witness `t^e` is tried.
pub fn is_mfull_monomial_witness(ideal: &ValueIdeal) -> Result<bool> {
    require_m_primary(ideal)?;
    let h = ideal.semigroup();
    let x = ValueIdeal::from_generators(h, &[h.multiplicity()])?;
    let lifted = ValueIdeal::maximal(h)
        .product(ideal)?
        .colon(&x)?
        .intersect(&ValueIdeal::unit(h))?;
    Ok(lifted == *ideal)
}

/// `mI :_R m = I`.
pub fn is_full(ideal: &ValueIdeal) -> Result<bool> {
    require_m_primary(ideal)?;
    let h = ideal.semigroup();
    let m = ValueIdeal::maximal(h);
    let lifted = m
        .product(ideal)?
        .colon(&m)?
        .intersect(&ValueIdeal::unit(h))?;
    Ok(lifted == *ideal)
}
