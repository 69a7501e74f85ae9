//! Ring invariants read off the powers of the maximal ideal.

use std::sync::Arc;

use super::is_elias;
use crate::error::{Error, Result};
use crate::ideal::ValueIdeal;
use crate::semigroup::NumericalSemigroup;

/// Smallest `s` with `m^s` Elias.
///
/// Once `se >= F + 1 + e` every value of `m^s` lies in `e + H`, so
/// `m^s ⊆ (t^e)`; ideals inside a principal ideal are Elias, so the search
/// stops there at the latest.
pub fn elias_index(h: &Arc<NumericalSemigroup>) -> u32 {
    let e = h.multiplicity();
    let bound = (h.frobenius() + 1 + e + e - 1) / e;
    let m = ValueIdeal::maximal(h);
    let mut power = m.clone();
    for s in 1..=bound.max(1) as u32 {
        if is_elias(&power).expect("powers of m are m-primary").elias {
            return s;
        }
        power = power.product(&m).expect("same ambient");
    }
    unreachable!("m^s is inside (t^e) for s >= {bound}")
}

/// Smallest `s` with `μ(m^s) = e`.
pub fn ulrich_index(h: &Arc<NumericalSemigroup>) -> u32 {
    let e = h.multiplicity() as usize;
    let m = ValueIdeal::maximal(h);
    let mut power = m.clone();
    let mut s = 1;
    // μ(m^s) is eventually e: the reduction number of m is finite
    while power.mu() != e {
        power = power.product(&m).expect("same ambient");
        s += 1;
    }
    s
}

/// Smallest `s` with `m^s ⊆ (t^g)` for a generator `g` of `H`. An upper bound
/// for gll, which allows arbitrary elements of m.
pub fn gll_monomial(h: &Arc<NumericalSemigroup>) -> u32 {
    let principals: Vec<ValueIdeal> = h
        .generators()
        .iter()
        .map(|&g| ValueIdeal::from_generators(h, &[g]).expect("g in H"))
        .collect();
    let m = ValueIdeal::maximal(h);
    let mut power = m.clone();
    let mut s = 1;
    while !principals
        .iter()
        .any(|p| power.is_subset_of(p).expect("same ambient"))
    {
        power = power.product(&m).expect("same ambient");
        s += 1;
    }
    s
}

/// Whether `gr_m(R)` is Cohen-Macaulay, by testing that the initial form of
/// `t^e` is a nonzerodivisor: `m^{s+1} :_R t^e = m^s` for every `s` up to
/// the first `s*` with `m^{s+1} = t^e m^s`, plus one more step.
pub fn gr_is_cm(h: &Arc<NumericalSemigroup>) -> bool {
    let e = h.multiplicity();
    let unit = ValueIdeal::unit(h);
    let m = ValueIdeal::maximal(h);
    let x = ValueIdeal::from_generators(h, &[e]).expect("e in H");
    let mut current = unit.clone();
    let mut next = m.clone();
    let mut stable_at = None;
    let mut s = 0u32;
    loop {
        let lifted = next
            .colon(&x)
            .and_then(|c| c.intersect(&unit))
            .expect("same ambient");
        if lifted != current {
            return false;
        }
        if stable_at.is_none() && next == current.shift(e) {
            stable_at = Some(s);
        }
        if stable_at.is_some_and(|star| s > star) {
            return true;
        }
        current = next;
        next = current.product(&m).expect("same ambient");
        s += 1;
    }
}

/// The semigroup generated by the generators of `H` and its Frobenius
/// number. `ℕ` has Frobenius number -1 and is rejected as a generator.
pub fn frobenius_extension(h: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if !h.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut gens = h.generators().to_vec();
    gens.push(h.frobenius());
    NumericalSemigroup::from_generators(&gens)
}
