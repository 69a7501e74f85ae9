use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::element::{int, SeriesElement};
use super::linalg::{kernel, SparseVec, SubspaceBasis, Q};
use super::model::BranchedRingModel;
use crate::error::{Error, Result};

/// Span of `Σ g_i R` modulo `t^N`.
pub fn ideal_subspace(model: &BranchedRingModel, gens: &[SeriesElement]) -> Result<SubspaceBasis> {
    let basis = model.ring_basis();
    let mut out = SubspaceBasis::new();
    for g in gens {
        if !model.contains(g) {
            return Err(Error::NotInRing(model.display(g)));
        }
        for r in &basis {
            out.insert(&model.to_vector(&model.mul(g, r)));
        }
    }
    Ok(out)
}

/// Checks that `gens` generate a proper m-primary ideal whose truncation
/// determines it: the top `tail_margin` monomials of every branch must be
/// initial terms of ideal elements, which forces every higher monomial into
/// the ideal.
fn checked_ideal_subspace(
    model: &BranchedRingModel,
    gens: &[SeriesElement],
) -> Result<SubspaceBasis> {
    if gens.is_empty() {
        return Err(Error::NotMPrimary("no generators".into()));
    }
    for g in gens {
        if !model.contains(g) {
            return Err(Error::NotInRing(model.display(g)));
        }
        if !model.in_maximal_ideal(g) {
            return Err(Error::NotMPrimary(format!(
                "{} is a unit",
                model.display(g)
            )));
        }
    }
    for b in 0..model.branch_count() {
        if gens.iter().all(|g| g.branch(b).is_empty()) {
            return Err(Error::NotMPrimary(format!("branch {b} vanishes on the ideal")));
        }
    }
    let subspace = ideal_subspace(model, gens)?;
    let n = model.truncation();
    for b in 0..model.branch_count() {
        for e in (n - model.tail_margin()).max(1)..n {
            let mono = SeriesElement::monomial(model.branch_count(), b, e, Q::one());
            if !subspace.contains(&model.to_vector(&mono)) {
                return Err(Error::TruncationUnsound(format!(
                    "t^{e} on branch {b} is not an initial term of the ideal at truncation {n}"
                )));
            }
        }
    }
    Ok(subspace)
}

/// `ℓ(R/I)` from subspace dimensions.
pub fn colength(model: &BranchedRingModel, gens: &[SeriesElement]) -> Result<usize> {
    let ideal = checked_ideal_subspace(model, gens)?;
    Ok(model.ring_basis().len() - ideal.dim())
}

/// Outcome of the linear-algebra Elias test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEliasVerdict {
    pub elias: bool,
    /// An element of `(I :_Q m) ∖ R` when the ideal is not Elias.
    pub witness: Option<SeriesElement>,
    /// Dimension of the truncated colon `I :_Q m`.
    pub colon_dim: usize,
}

/// Decides whether `I :_Q m ⊆ R` by solving for the colon as the kernel of
/// `q ↦ (q g_1, ..., q g_k) mod I` on the truncated Laurent tuple space.
pub fn is_elias_linear(
    model: &BranchedRingModel,
    gens: &[SeriesElement],
) -> Result<LinearEliasVerdict> {
    let ideal = checked_ideal_subspace(model, gens)?;
    let colon = colon_by_maximal_ideal(model, &ideal);
    let witness = colon
        .rows()
        .map(|row| model.from_vector(row))
        .find(|q| !model.contains(q));
    Ok(LinearEliasVerdict {
        elias: witness.is_none(),
        witness,
        colon_dim: colon.dim(),
    })
}

fn colon_by_maximal_ideal(model: &BranchedRingModel, ideal: &SubspaceBasis) -> SubspaceBasis {
    let dim = model.dimension();
    let m_gens = model.maximal_ideal_generators();
    let images: Vec<SparseVec> = (0..dim)
        .map(|j| {
            let mono = model.from_vector(&SparseVec::from([(j, Q::one())]));
            let mut image = SparseVec::new();
            for (l, g) in m_gens.iter().enumerate() {
                let reduced = ideal.reduce(&model.to_vector(&model.mul(&mono, g)));
                image.extend(reduced.into_iter().map(|(i, c)| (l * dim + i, c)));
            }
            image
        })
        .collect();
    let mut colon = SubspaceBasis::new();
    for v in kernel(&images) {
        colon.insert(&v);
    }
    colon
}

/// Whether every generator is `x` times an element of R.
pub fn contains_in_principal(
    model: &BranchedRingModel,
    gens: &[SeriesElement],
    x: &SeriesElement,
) -> Result<bool> {
    if !model.contains(x) {
        return Err(Error::NotInRing(model.display(x)));
    }
    if let Some(b) = (0..model.branch_count()).find(|&b| x.branch(b).is_empty()) {
        return Err(Error::ZeroDivisorWitness(b));
    }
    for g in gens {
        if !model.contains(g) {
            return Err(Error::NotInRing(model.display(g)));
        }
    }
    let precision = model.truncation();
    Ok(gens.iter().all(|g| {
        let q = divide(g, x, precision);
        model.contains_below(&q, precision)
    }))
}

/// Branchwise Laurent quotient `g / x`, exact for exponents below `precision`.
fn divide(g: &SeriesElement, x: &SeriesElement, precision: i64) -> SeriesElement {
    let mut out = SeriesElement::zero(g.branch_count());
    for b in 0..g.branch_count() {
        let Some(g_lo) = g.order(b) else { continue };
        let v = x.order(b).expect("nonzero branch");
        let unit = |k: i64| x.coefficient(b, v + k);
        let lead_inv = unit(0).recip();
        // w = g / u with u = x / t^v; then g / x = t^{-v} w.
        let len = (precision + v - g_lo).max(0) as usize;
        let mut w: Vec<Q> = Vec::with_capacity(len);
        for k in 0..len as i64 {
            let mut acc = g.coefficient(b, g_lo + k);
            for i in 1..=k {
                let u = unit(i);
                if !u.is_zero() {
                    acc -= u * &w[(k - i) as usize];
                }
            }
            w.push(acc * &lead_inv);
        }
        for (k, c) in w.into_iter().enumerate() {
            out.set(b, g_lo + k as i64 - v, c);
        }
    }
    out
}

/// Generators of `m^s`: nonzero `s`-fold products of the generators of `m`.
pub fn power_generators(model: &BranchedRingModel, s: u32) -> Vec<SeriesElement> {
    let m = model.maximal_ideal_generators();
    let mut out: Vec<SeriesElement> = Vec::new();
    let mut stack: Vec<(usize, u32, SeriesElement)> =
        vec![(0, 0, SeriesElement::one(model.branch_count()))];
    while let Some((start, depth, acc)) = stack.pop() {
        if depth == s {
            if !acc.is_zero() && !out.contains(&acc) {
                out.push(acc);
            }
            continue;
        }
        for (i, g) in m.iter().enumerate().skip(start) {
            stack.push((i, depth + 1, acc.mul(g, None)));
        }
    }
    out
}

/// Where a successful principal element came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSource {
    /// The `i`-th generator of m on its own.
    Generator(usize),
    /// Random combination number `trial`.
    Random { trial: usize, coefficients: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GllStatus {
    /// `m^s ⊆ (x)` verified exactly: `gll <= s`.
    Success {
        witness: SeriesElement,
        source: WitnessSource,
    },
    /// No sampled element worked. Inconclusive.
    NoWitnessFound { attempts: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GllRow {
    pub s: u32,
    pub status: GllStatus,
}

/// Coefficient range for random combinations: `±1..=±17`.
const COEFF_BOUND: i64 = 17;

fn trial_rng(seed: u64, s: u32, trial: usize) -> ChaCha8Rng {
    // splitmix64 finalizer over the (seed, s, trial) triple
    let mut z = seed
        ^ (u64::from(s)).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (trial as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    ChaCha8Rng::seed_from_u64(z ^ (z >> 31))
}

/// Searches for `x ∈ m` with `m^s ⊆ (x)` for each `s <= s_max`.
///
/// The generators of m are tried first, then `trials` random combinations
/// `Σ c_i g_i` with nonzero coefficients in `±1..=±17`. Each trial draws from
/// its own generator derived from `(seed, s, trial)`.
pub fn gll_randomized(
    model: &BranchedRingModel,
    s_max: u32,
    trials: usize,
    seed: u64,
) -> Result<Vec<GllRow>> {
    let m = model.maximal_ideal_generators();
    let mut rows = Vec::new();
    for s in 1..=s_max {
        let power = power_generators(model, s);
        let mut status = GllStatus::NoWitnessFound {
            attempts: m.len() + trials,
        };
        let try_one = |x: &SeriesElement| -> Result<bool> {
            match contains_in_principal(model, &power, x) {
                Err(Error::ZeroDivisorWitness(_)) => Ok(false),
                other => other,
            }
        };
        for (i, g) in m.iter().enumerate() {
            if try_one(g)? {
                status = GllStatus::Success {
                    witness: g.clone(),
                    source: WitnessSource::Generator(i),
                };
                break;
            }
        }
        if matches!(status, GllStatus::NoWitnessFound { .. }) {
            for trial in 0..trials {
                let mut rng = trial_rng(seed, s, trial);
                let coefficients: Vec<i64> = m
                    .iter()
                    .map(|_| {
                        let c = rng.gen_range(1..=COEFF_BOUND);
                        if rng.gen_bool(0.5) {
                            -c
                        } else {
                            c
                        }
                    })
                    .collect();
                let x = m
                    .iter()
                    .zip(&coefficients)
                    .fold(model.zero(), |acc, (g, &c)| &acc + &g.scale(&int(c)));
                if try_one(&x)? {
                    status = GllStatus::Success {
                        witness: x,
                        source: WitnessSource::Random {
                            trial,
                            coefficients,
                        },
                    };
                    break;
                }
            }
        }
        rows.push(GllRow { s, status });
    }
    Ok(rows)
}

/// Smallest `s` with a verified witness: an upper bound for gll.
pub fn gll_upper_bound(rows: &[GllRow]) -> Option<u32> {
    rows.iter()
        .find(|r| matches!(r.status, GllStatus::Success { .. }))
        .map(|r| r.s)
}

/// Reruns `computation` at twice the truncation and insists on the same
/// verdict.
pub fn truncation_stability_check<F>(model: &BranchedRingModel, computation: F) -> Result<bool>
where
    F: Fn(&BranchedRingModel) -> Result<bool>,
{
    let here = computation(model)?;
    let doubled = computation(&model.with_truncation(2 * model.truncation()))?;
    if here != doubled {
        return Err(Error::TruncationUnsound(format!(
            "verdict {here} at truncation {} but {doubled} at {}",
            model.truncation(),
            2 * model.truncation()
        )));
    }
    Ok(here)
}
