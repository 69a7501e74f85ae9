use std::sync::Arc;

use num_traits::{One, Zero};

use super::element::SeriesElement;
use super::linalg::{SparseVec, Q};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Which subring of the Laurent tuple space the model describes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    /// k[[H]] inside k((t)): supports contained in the semigroup.
    Semigroup(Arc<NumericalSemigroup>),
    /// k[[a_1, ..., a_n]]/(a_i a_j : i < j) inside k[[t]]^n: all constant
    /// terms equal.
    Axes,
}

/// A one-dimensional ring realized as a subspace of `n` truncated Laurent
/// lines over ℚ.
///
/// Coordinates cover exponents in `[-lower, truncation)` on every branch and
/// are ordered by exponent first, so the pivot of a row is its initial term.
#[derive(Debug, Clone)]
pub struct BranchedRingModel {
    kind: RingKind,
    branches: usize,
    truncation: i64,
    lower: i64,
    m_generators: Vec<SeriesElement>,
}

impl BranchedRingModel {
    /// Smallest truncation accepted for a semigroup model.
    pub fn required_semigroup_truncation(h: &NumericalSemigroup) -> i64 {
        2 * (h.frobenius() + 1) + 2 * h.max_generator()
    }

    pub fn semigroup(h: &Arc<NumericalSemigroup>, truncation: i64) -> Result<Self> {
        let required = Self::required_semigroup_truncation(h);
        if truncation < required {
            return Err(Error::TruncationTooSmall {
                required,
                got: truncation,
            });
        }
        Ok(Self::semigroup_unchecked(h, truncation))
    }

    /// A semigroup model with no lower bound on the truncation. Verdicts from
    /// such a model need [`truncation_stability_check`](super::truncation_stability_check).
    pub fn semigroup_unchecked(h: &Arc<NumericalSemigroup>, truncation: i64) -> Self {
        let model = BranchedRingModel {
            kind: RingKind::Semigroup(Arc::clone(h)),
            branches: 1,
            truncation,
            lower: h.multiplicity(),
            m_generators: h.generators().iter().map(|&g| SeriesElement::t_pow(g)).collect(),
        };
        model.check_multiplicative_closure();
        model
    }

    pub fn axes(branches: usize, truncation: i64) -> Result<Self> {
        if branches < 2 || truncation < 4 {
            return Err(Error::TruncationTooSmall {
                required: 4,
                got: truncation,
            });
        }
        let model = BranchedRingModel {
            kind: RingKind::Axes,
            branches,
            truncation,
            lower: 1,
            m_generators: (0..branches)
                .map(|b| SeriesElement::monomial(branches, b, 1, Q::one()))
                .collect(),
        };
        model.check_multiplicative_closure();
        Ok(model)
    }

    /// The same ring at a different truncation.
    pub fn with_truncation(&self, truncation: i64) -> Self {
        let mut out = self.clone();
        out.truncation = truncation;
        out
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn branch_count(&self) -> usize {
        self.branches
    }

    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    /// Most negative exponent represented.
    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn maximal_ideal_generators(&self) -> &[SeriesElement] {
        &self.m_generators
    }

    /// Number of coordinates of the truncated Laurent tuple space.
    pub fn dimension(&self) -> usize {
        self.branches * (self.truncation + self.lower) as usize
    }

    pub fn index(&self, branch: usize, exp: i64) -> usize {
        (exp + self.lower) as usize * self.branches + branch
    }

    pub fn position(&self, index: usize) -> (usize, i64) {
        (
            index % self.branches,
            (index / self.branches) as i64 - self.lower,
        )
    }

    /// Coordinates of `x` after truncation. Terms below the window are a
    /// caller bug.
    pub fn to_vector(&self, x: &SeriesElement) -> SparseVec {
        x.terms()
            .filter(|&(_, e, _)| e < self.truncation)
            .map(|(b, e, c)| {
                assert!(e >= -self.lower, "exponent {e} below the model window");
                (self.index(b, e), c.clone())
            })
            .collect()
    }

    pub fn from_vector(&self, v: &SparseVec) -> SeriesElement {
        let mut out = SeriesElement::zero(self.branches);
        for (&i, c) in v {
            let (b, e) = self.position(i);
            out.set(b, e, c.clone());
        }
        out
    }

    pub fn mul(&self, x: &SeriesElement, y: &SeriesElement) -> SeriesElement {
        x.mul(y, Some(self.truncation))
    }

    /// Membership in R of the truncation of `x`.
    pub fn contains(&self, x: &SeriesElement) -> bool {
        self.contains_below(x, self.truncation)
    }

    /// Membership in R judged on the exponents below `precision`.
    pub fn contains_below(&self, x: &SeriesElement, precision: i64) -> bool {
        let visible = |e: i64| e < precision;
        match &self.kind {
            RingKind::Semigroup(h) => x
                .branch(0)
                .keys()
                .filter(|&&e| visible(e))
                .all(|&e| h.contains(e)),
            RingKind::Axes => {
                let no_poles = (0..self.branches)
                    .all(|b| x.order(b).is_none_or(|o| o >= 0 || !visible(o)));
                let c0 = x.coefficient(0, 0);
                no_poles && (1..self.branches).all(|b| x.coefficient(b, 0) == c0)
            }
        }
    }

    /// Whether `x` lies in the maximal ideal (no constant term, no poles).
    pub fn in_maximal_ideal(&self, x: &SeriesElement) -> bool {
        self.contains(x) && (0..self.branches).all(|b| x.coefficient(b, 0).is_zero())
    }

    /// A basis of R modulo `t^truncation`.
    pub fn ring_basis(&self) -> Vec<SeriesElement> {
        match &self.kind {
            RingKind::Semigroup(h) => h
                .elements_in(0, self.truncation)
                .map(SeriesElement::t_pow)
                .collect(),
            RingKind::Axes => std::iter::once(SeriesElement::one(self.branches))
                .chain((1..self.truncation).flat_map(|e| {
                    (0..self.branches)
                        .map(move |b| SeriesElement::monomial(self.branches, b, e, Q::one()))
                }))
                .collect(),
        }
    }

    /// Products of sampled basis elements must stay in the ring.
    fn check_multiplicative_closure(&self) {
        let basis = self.ring_basis();
        let step = (basis.len() / 8).max(1);
        let sample: Vec<&SeriesElement> = basis.iter().step_by(step).collect();
        for x in &sample {
            for y in &sample {
                assert!(
                    self.contains(&self.mul(x, y)),
                    "ring constraint not closed under multiplication"
                );
            }
        }
    }

    /// Exponent margin the top of an ideal must cover to pin down the whole
    /// high-degree tail: the smallest positive value on a branch.
    pub(crate) fn tail_margin(&self) -> i64 {
        match &self.kind {
            RingKind::Semigroup(h) => h.multiplicity(),
            RingKind::Axes => 1,
        }
    }

    pub(crate) fn display(&self, x: &SeriesElement) -> String {
        x.display_with("t")
    }

    pub(crate) fn zero(&self) -> SeriesElement {
        SeriesElement::zero(self.branches)
    }
}
