//! The full criteria report for a monomial ideal, with stable JSON field
//! names.

use serde::{Deserialize, Serialize};

use super::{
    elias_index, elias_via_small_mu, elias_via_ulrich_cover, gll_monomial, is_elias, is_full,
    is_mfull_monomial_witness, is_ulrich, ulrich_index, EliasMethods, ProductCertificate,
    SmallMuCertificate,
};
use crate::error::{Error, Result};
use crate::ideal::{quotient_length, ValueIdeal};
use crate::series::{gll_randomized, gll_upper_bound, BranchedRingModel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub generators: Vec<i64>,
    pub e: i64,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub frobenius: i64,
    pub gorenstein: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    /// Values of the minimal monomial generators.
    pub generators: Vec<i64>,
    pub mu: usize,
    pub order: u32,
    /// `ℓ(R/I)`.
    pub colength: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub ulrich: bool,
    pub mfull_te: bool,
    pub full: bool,
    pub integrally_closed: bool,
    pub extension_module: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indices {
    pub eli: u32,
    pub ulr: u32,
    pub gll_monomial: u32,
    /// Smallest `s` for which the randomized search found `x` with
    /// `m^s ⊆ (x)`; absent when not run or nothing was found.
    pub gll_upper_randomized: Option<u32>,
}

/// An Ulrich power `m^s ⊇ I` for which the value argument goes through.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichCoverUse {
    pub power: u32,
    pub blocking: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// A value of `I :_Q m` outside the semigroup.
    pub fractional_colon_witness: Option<i64>,
    /// A generator `g` of `H` with `I ⊆ (t^g)`.
    pub principal_container: Option<i64>,
    pub small_mu: Option<SmallMuCertificate>,
    /// Certifies `mI` Elias.
    pub product_with_m: Option<ProductCertificate>,
    pub ulrich_cover: Option<UlrichCoverUse>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    pub ring: RingSummary,
    pub ideal: IdealSummary,
    pub type_ideal: usize,
    pub type_quotient: usize,
    pub elias: bool,
    pub elias_methods: EliasMethods,
    pub predicates: Predicates,
    pub indices: Indices,
    pub certificates: Certificates,
}

impl CriteriaReport {
    pub fn build(ideal: &ValueIdeal) -> Result<Self> {
        let h = ideal.semigroup();
        let verdict = is_elias(ideal)?;
        let unit = ValueIdeal::unit(h);

        let ring = RingSummary {
            generators: h.generators().to_vec(),
            e: h.multiplicity(),
            cm_type: h.cm_type(),
            frobenius: h.frobenius(),
            gorenstein: h.is_symmetric(),
        };
        let summary = IdealSummary {
            generators: ideal.minimal_generators(),
            mu: ideal.mu(),
            order: ideal.order()?,
            colength: quotient_length(&unit, ideal)?,
        };
        let predicates = Predicates {
            ulrich: is_ulrich(ideal)?,
            mfull_te: is_mfull_monomial_witness(ideal)?,
            full: is_full(ideal)?,
            integrally_closed: ideal.is_integrally_closed()?,
            extension_module: ideal.is_extension_module(),
        };
        let indices = Indices {
            eli: elias_index(h),
            ulr: ulrich_index(h),
            gll_monomial: gll_monomial(h),
            gll_upper_randomized: None,
        };

        let mut principal_container = None;
        for &g in h.generators() {
            if ideal.is_subset_of(&ValueIdeal::from_generators(h, &[g])?)? {
                principal_container = Some(g);
                break;
            }
        }
        let small = elias_via_small_mu(ideal)?;
        let certificates = Certificates {
            fractional_colon_witness: verdict.witness,
            principal_container,
            small_mu: small.direct,
            product_with_m: small.product,
            ulrich_cover: ulrich_cover(ideal, summary.order)?,
        };

        let report = CriteriaReport {
            ring,
            ideal: summary,
            type_ideal: verdict.type_ideal,
            type_quotient: verdict.type_quotient,
            elias: verdict.elias,
            elias_methods: verdict.methods,
            predicates,
            indices,
            certificates,
        };
        report.check_certificates()?;
        Ok(report)
    }

    /// Fills `gll_upper_randomized` from the series model at the smallest
    /// accepted truncation.
    pub fn with_randomized_gll(mut self, ideal: &ValueIdeal, trials: usize, seed: u64) -> Result<Self> {
        let h = ideal.semigroup();
        let model =
            BranchedRingModel::semigroup(h, BranchedRingModel::required_semigroup_truncation(h))?;
        let rows = gll_randomized(&model, self.indices.gll_monomial, trials, seed)?;
        self.indices.gll_upper_randomized = gll_upper_bound(&rows);
        Ok(self)
    }

    /// Every certificate that implies Elias must agree with the verdict.
    fn check_certificates(&self) -> Result<()> {
        let c = &self.certificates;
        let claims = [
            ("principal container", c.principal_container.is_some()),
            ("small mu", c.small_mu.is_some()),
            ("Ulrich cover", c.ulrich_cover.is_some()),
        ];
        for (name, present) in claims {
            if present && !self.elias {
                return Err(Error::InternalDisagreement(format!(
                    "{name} certificate on a non-Elias ideal"
                )));
            }
        }
        Ok(())
    }
}

fn ulrich_cover(ideal: &ValueIdeal, order: u32) -> Result<Option<UlrichCoverUse>> {
    let h = ideal.semigroup();
    for power in (1..=order).rev() {
        let cover = ValueIdeal::mpower(h, power);
        if !is_ulrich(&cover)? {
            continue;
        }
        if let Some(cert) = elias_via_ulrich_cover(ideal, &cover)? {
            return Ok(Some(UlrichCoverUse {
                power,
                blocking: cert.blocking,
            }));
        }
    }
    Ok(None)
}
