//! Relative (fractional) monomial ideals of a numerical semigroup ring.
//!
//! A monomial ideal of k[[H]] is the set of series whose support lies in its
//! value set `E`, a bounded-below subset of the integers with `E + H ⊆ E`.
//! Sums, products, colons and intersections of such ideals are again of this
//! form, so every ideal operation reduces to an operation on value sets.
//!
//! A value set is stored as its minimum `lo`, a membership window over
//! `[lo, stable)` and the promise that every `z >= stable` is present.
//! Normalization picks the tightest `stable`, so structural equality is
//! ideal equality.
//!
//! Colons only need to be tested against the minimal generators of the
//! divisor: `E_I` is closed under adding semigroup elements, so
//! `z + g ∈ E_I` for the generators `g` of `J` forces `z + E_J ⊆ E_I`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone)]
pub struct ValueIdeal {
    semigroup: Arc<NumericalSemigroup>,
    lo: i64,
    window: Vec<bool>,
    stable: i64,
}

impl ValueIdeal {
    /// Normalizes the set that agrees with `member` on `[from, to)` and
    /// contains every integer `>= to`.
    fn build(
        semigroup: &Arc<NumericalSemigroup>,
        from: i64,
        to: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let to = to.max(from);
        let present: Vec<bool> = (from..to).map(&member).collect();
        let lo = present
            .iter()
            .position(|&p| p)
            .map_or(to, |i| from + i as i64);
        let stable = present
            .iter()
            .rposition(|&p| !p)
            .map_or(from, |i| from + i as i64 + 1)
            .max(lo);
        let window = (lo..stable).map(|z| present[(z - from) as usize]).collect();
        ValueIdeal {
            semigroup: Arc::clone(semigroup),
            lo,
            window,
            stable,
        }
    }

    /// The ideal generated by the monomials `t^v`, `v ∈ vals`: the union of
    /// the shifts `v + H`.
    pub fn from_generators(semigroup: &Arc<NumericalSemigroup>, vals: &[i64]) -> Result<Self> {
        let min = *vals.iter().min().ok_or(Error::EmptyGenerators)?;
        let max = *vals.iter().max().expect("nonempty");
        let h = semigroup.as_ref();
        Ok(Self::build(semigroup, min, max + h.frobenius() + 1, |z| {
            vals.iter().any(|&v| h.contains(z - v))
        }))
    }

    /// The unit ideal R.
    pub fn unit(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_generators(semigroup, &[0]).expect("nonempty")
    }

    /// The maximal ideal: every positive element of the semigroup.
    pub fn maximal(semigroup: &Arc<NumericalSemigroup>) -> Self {
        Self::from_generators(semigroup, semigroup.generators()).expect("nonempty")
    }

    /// `m^s`, built as `s` successive products with `m`.
    pub fn mpower(semigroup: &Arc<NumericalSemigroup>, s: u32) -> Self {
        let m = Self::maximal(semigroup);
        let mut acc = Self::unit(semigroup);
        for _ in 0..s {
            acc = acc.product(&m).expect("same ambient");
        }
        acc
    }

    /// The standard canonical ideal `{x : F - x ∉ H}`, with minimum 0.
    pub fn canonical(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let h = semigroup.as_ref();
        let f = h.frobenius();
        Self::build(semigroup, 0, f + 1, |x| !h.contains(f - x))
    }

    /// Conductor of the integral closure k[[t]]: every value past `F`.
    pub fn conductor(semigroup: &Arc<NumericalSemigroup>) -> Self {
        let start = semigroup.frobenius() + 1;
        Self::build(semigroup, start, start, |_| true)
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    /// Smallest value.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Every value at or above this one belongs to the ideal.
    pub fn stable(&self) -> i64 {
        self.stable
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.lo {
            false
        } else if z >= self.stable {
            true
        } else {
            self.window[(z - self.lo) as usize]
        }
    }

    /// Values below `hi`, in increasing order.
    pub fn values_below(&self, hi: i64) -> Vec<i64> {
        (self.lo..hi).filter(|&z| self.contains(z)).collect()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.semigroup, &other.semigroup)
            || self.semigroup.generators() == other.semigroup.generators()
        {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::build(
            &self.semigroup,
            self.lo.min(other.lo),
            self.stable.min(other.stable),
            |z| self.contains(z) || other.contains(z),
        ))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::build(
            &self.semigroup,
            self.lo.max(other.lo),
            self.stable.max(other.stable),
            |z| self.contains(z) && other.contains(z),
        ))
    }

    /// `E_I + E_J`, generated by sums of minimal generators.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let a = self.minimal_generators();
        let b = other.minimal_generators();
        let sums: Vec<i64> = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| x + y))
            .collect();
        Self::from_generators(&self.semigroup, &sums)
    }

    /// `x + E`: the product with the principal fractional ideal `t^x R`.
    pub fn shift(&self, x: i64) -> Self {
        ValueIdeal {
            semigroup: Arc::clone(&self.semigroup),
            lo: self.lo + x,
            window: self.window.clone(),
            stable: self.stable + x,
        }
    }

    /// The fractional colon `self :_Q other = {z : z + E_other ⊆ E_self}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let gens = other.minimal_generators();
        Ok(Self::build(
            &self.semigroup,
            self.lo - other.lo,
            self.stable - other.lo,
            |z| gens.iter().all(|&g| self.contains(z + g)),
        ))
    }

    /// `E ∖ (E + M)`.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let h = self.semigroup.as_ref();
        let e = h.multiplicity();
        (self.lo..self.stable + e)
            .filter(|&z| self.contains(z) && !h.generators().iter().any(|&g| self.contains(z - g)))
            .collect()
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        if self.lo < other.lo {
            return Ok(false);
        }
        Ok((self.lo..other.stable.max(self.lo)).all(|z| !self.contains(z) || other.contains(z)))
    }

    /// Whether the ideal lies inside R.
    pub fn is_integral(&self) -> bool {
        let h = self.semigroup.as_ref();
        self.lo >= 0
            && (self.lo..self.stable.max(h.frobenius() + 1))
                .all(|z| !self.contains(z) || h.contains(z))
    }

    pub fn is_unit(&self) -> bool {
        self.lo == 0 && self.is_integral()
    }

    /// The m-adic order: the largest `s` with `I ⊆ m^s`. The unit ideal has order 0.
    pub fn order(&self) -> Result<u32> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let mut s = 0;
        let mut next = ValueIdeal::maximal(&self.semigroup);
        let m = next.clone();
        while self.is_subset_of(&next)? {
            s += 1;
            next = next.product(&m)?;
        }
        Ok(s)
    }

    /// `R :_Q I`.
    pub fn inverse(&self) -> Self {
        ValueIdeal::unit(&self.semigroup)
            .colon(self)
            .expect("same ambient")
    }

    /// `I · (R :_Q I)`.
    pub fn trace(&self) -> Self {
        self.product(&self.inverse()).expect("same ambient")
    }

    /// `{h ∈ H : h ≥ min E}`.
    pub fn integral_closure(&self) -> Result<Self> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let h = self.semigroup.as_ref();
        Ok(Self::build(
            &self.semigroup,
            self.lo,
            self.lo.max(h.frobenius() + 1),
            |z| h.contains(z),
        ))
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// Whether `E + 1 ⊆ E`, i.e. the ideal is a module over k[[t]].
    pub fn is_extension_module(&self) -> bool {
        self.window.is_empty()
    }
}

/// `ℓ(J/I)` for `I ⊆ J`, the number of values of `J` missing from `I`.
pub fn quotient_length(j: &ValueIdeal, i: &ValueIdeal) -> Result<usize> {
    if !i.is_subset_of(j)? {
        return Err(Error::NotContained);
    }
    Ok((j.lo..i.stable.max(j.lo))
        .filter(|&z| j.contains(z) && !i.contains(z))
        .count())
}

/// `ℓ(m^s / m^{s+1})`.
pub fn hilbert_function(semigroup: &Arc<NumericalSemigroup>, s: u32) -> usize {
    let upper = ValueIdeal::mpower(semigroup, s);
    let lower = upper
        .product(&ValueIdeal::maximal(semigroup))
        .expect("same ambient");
    quotient_length(&upper, &lower).expect("m^{s+1} ⊆ m^s")
}

impl PartialEq for ValueIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.check_ambient(other).is_ok()
            && self.lo == other.lo
            && self.stable == other.stable
            && self.window == other.window
    }
}

impl Eq for ValueIdeal {}

impl fmt::Display for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for z in self.values_below(self.stable) {
            write!(f, "{z}, ")?;
        }
        write!(f, "{}+}}", self.stable)
    }
}

impl fmt::Debug for ValueIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ValueIdeal{}{}", self.semigroup, self)
    }
}
