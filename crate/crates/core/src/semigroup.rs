//! Numerical semigroups: cofinite submonoids of the non-negative integers.
//!
//! A [`NumericalSemigroup`] caches its membership table up to
//! `frobenius + max(generators) + 1`; every integer past the Frobenius
//! number is a member, so the table answers every query.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest membership table we are willing to allocate.
const MAX_TABLE: i64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    membership: Vec<bool>,
    frobenius: i64,
    multiplicity: i64,
    pseudo_frobenius: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, minimizing the generating set.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::InvalidGenerator(bad));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let gcd = sorted.iter().fold(0i64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotCofinite(gcd));
        }

        let multiplicity = sorted[0];
        let largest = sorted[sorted.len() - 1];
        let second = if sorted.len() > 1 {
            sorted[sorted.len() - 2]
        } else {
            largest
        };
        // Every Apéry element w.r.t. the multiplicity is a sum of fewer than
        // `multiplicity` generators, so the Frobenius number lies below this cap.
        let bound = (largest + second)
            .checked_mul(multiplicity)
            .and_then(|b| b.checked_add(1))
            .filter(|&b| b <= MAX_TABLE)
            .ok_or(Error::TooLarge(largest.saturating_mul(multiplicity)))?;

        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for z in 1..=bound as usize {
            member[z] = sorted
                .iter()
                .any(|&g| g as usize <= z && member[z - g as usize]);
        }
        let frobenius = member
            .iter()
            .rposition(|&m| !m)
            .map(|f| f as i64)
            .unwrap_or(-1);

        let generators: Vec<i64> = sorted
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|a| member[a as usize] && member[(g - a) as usize]))
            .collect();
        let max_gen = *generators.last().expect("at least one minimal generator");

        let table_len = (frobenius + max_gen + 2) as usize;
        member.truncate(table_len);

        let mut semigroup = NumericalSemigroup {
            generators,
            membership: member,
            frobenius,
            multiplicity,
            pseudo_frobenius: Vec::new(),
        };
        semigroup.pseudo_frobenius = (-1..=frobenius)
            .filter(|&z| {
                !semigroup.contains(z)
                    && semigroup.generators.iter().all(|&g| semigroup.contains(z + g))
            })
            .collect();
        Ok(semigroup)
    }

    /// The semigroup of all non-negative integers (the regular ring k[[t]]).
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("<1> is a numerical semigroup")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.frobenius {
            true
        } else {
            self.membership[z as usize]
        }
    }

    /// Largest integer outside the semigroup, or -1 for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Smallest positive element; also the multiplicity of k[[H]].
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn max_generator(&self) -> i64 {
        *self.generators.last().expect("nonempty")
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        (0..=self.frobenius).filter(|&z| !self.contains(z)).count()
    }

    /// Whether this is the whole of the naturals, i.e. k[[H]] is regular.
    pub fn is_regular(&self) -> bool {
        self.frobenius == -1
    }

    /// Smallest element of the semigroup in each residue class modulo `m`,
    /// listed in increasing order.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>> {
        if m <= 0 || !self.contains(m) {
            return Err(Error::NotMember(m));
        }
        let mut best: Vec<Option<i64>> = vec![None; m as usize];
        let mut found = 0;
        let mut z = 0;
        while found < m {
            if self.contains(z) {
                let slot = &mut best[z.rem_euclid(m) as usize];
                if slot.is_none() {
                    *slot = Some(z);
                    found += 1;
                }
            }
            z += 1;
        }
        let mut out: Vec<i64> = best.into_iter().flatten().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Gaps `z` with `z + h` in the semigroup for every positive element `h`.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen-Macaulay type of k[[H]], the number of pseudo-Frobenius numbers.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// `z` belongs to the semigroup iff `F - z` does not.
    pub fn is_symmetric(&self) -> bool {
        (0..=self.frobenius).all(|z| self.contains(z) != self.contains(self.frobenius - z))
    }

    /// Elements of the semigroup in `[lo, hi)`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..hi).filter(move |&z| self.contains(z))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
