use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg::Q;

/// A tuple of Laurent polynomials over ℚ, one per branch.
///
/// Elements are stored exactly; truncation is applied by the ring model
/// whenever a product or a coordinate vector is formed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesElement {
    branches: Vec<BTreeMap<i64, Q>>,
}

impl SeriesElement {
    pub fn zero(branches: usize) -> Self {
        SeriesElement {
            branches: vec![BTreeMap::new(); branches],
        }
    }

    /// `coef * t^exp` on a single branch.
    pub fn monomial(branches: usize, branch: usize, exp: i64, coef: Q) -> Self {
        let mut out = Self::zero(branches);
        out.set(branch, exp, coef);
        out
    }

    /// The constant `c` on every branch.
    pub fn constant(branches: usize, c: Q) -> Self {
        let mut out = Self::zero(branches);
        for b in 0..branches {
            out.set(b, 0, c.clone());
        }
        out
    }

    pub fn one(branches: usize) -> Self {
        Self::constant(branches, Q::one())
    }

    /// `t^exp` on the single branch of a semigroup ring.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(1, 0, exp, Q::one())
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    pub fn branch(&self, b: usize) -> &BTreeMap<i64, Q> {
        &self.branches[b]
    }

    pub fn coefficient(&self, branch: usize, exp: i64) -> Q {
        self.branches[branch].get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, branch: usize, exp: i64, coef: Q) {
        if coef.is_zero() {
            self.branches[branch].remove(&exp);
        } else {
            self.branches[branch].insert(exp, coef);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.branches.iter().all(BTreeMap::is_empty)
    }

    /// Lowest exponent on a branch, `None` if the branch vanishes.
    pub fn order(&self, branch: usize) -> Option<i64> {
        self.branches[branch].keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, &Q)> {
        self.branches
            .iter()
            .enumerate()
            .flat_map(|(b, m)| m.iter().map(move |(&e, c)| (b, e, c)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.branch_count());
        for (b, e, v) in self.terms() {
            out.set(b, e, v * c);
        }
        out
    }

    /// Branchwise product, keeping only exponents below `truncation` if given.
    pub fn mul(&self, other: &Self, truncation: Option<i64>) -> Self {
        assert_eq!(self.branch_count(), other.branch_count());
        let mut out = Self::zero(self.branch_count());
        for (b, (x, y)) in self.branches.iter().zip(&other.branches).enumerate() {
            let acc = &mut out.branches[b];
            for (&ex, cx) in x {
                for (&ey, cy) in y {
                    let e = ex + ey;
                    if truncation.is_some_and(|n| e >= n) {
                        continue;
                    }
                    let entry = acc.entry(e).or_insert_with(Q::zero);
                    *entry += cx * cy;
                }
            }
            acc.retain(|_, c| !c.is_zero());
        }
        out
    }

    /// Drops every term with exponent `>= truncation`.
    pub fn truncated(&self, truncation: i64) -> Self {
        let mut out = self.clone();
        for m in &mut out.branches {
            m.retain(|&e, _| e < truncation);
        }
        out
    }

    /// Formats the element with one variable name per branch, as in
    /// `t^4 + 2*t^5`; multi-branch elements print as `(f_a | f_b | ...)`.
    pub fn display_with(&self, var: &str) -> String {
        let parts: Vec<String> = self
            .branches
            .iter()
            .map(|m| format_poly(m, var))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().expect("one branch")
        } else {
            format!("({})", parts.join(" | "))
        }
    }
}

fn format_poly(terms: &BTreeMap<i64, Q>, var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&e, c)) in terms.iter().enumerate() {
        let negative = c < &Q::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let coef = if abs.is_integer() {
            abs.to_integer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        match e {
            0 => out.push_str(&coef),
            _ => {
                if !abs.is_one() {
                    out.push_str(&coef);
                    out.push('*');
                }
                out.push_str(var);
                if e != 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
    }
    out
}

impl fmt::Display for SeriesElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &SeriesElement {
    type Output = SeriesElement;

    fn add(self, rhs: &SeriesElement) -> SeriesElement {
        assert_eq!(self.branch_count(), rhs.branch_count());
        let mut out = self.clone();
        for (b, e, c) in rhs.terms() {
            let v = out.coefficient(b, e) + c;
            out.set(b, e, v);
        }
        out
    }
}

impl Neg for &SeriesElement {
    type Output = SeriesElement;

    fn neg(self) -> SeriesElement {
        self.scale(&-Q::one())
    }
}

impl Sub for &SeriesElement {
    type Output = SeriesElement;

    fn sub(self, rhs: &SeriesElement) -> SeriesElement {
        self + &(-rhs)
    }
}

/// Small helper for integer coefficients.
pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}
