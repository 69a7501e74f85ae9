//! Sparse exact linear algebra over ℚ.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// Coordinates of a vector; absent entries are zero.
pub type SparseVec = BTreeMap<usize, Q>;

/// `target += factor * source`, dropping cancelled entries.
pub fn add_scaled(target: &mut SparseVec, source: &SparseVec, factor: &Q) {
    if factor.is_zero() {
        return;
    }
    for (&i, c) in source {
        let entry = target.entry(i).or_insert_with(Q::zero);
        *entry += factor * c;
        if entry.is_zero() {
            target.remove(&i);
        }
    }
}

/// A subspace kept in fully reduced row echelon form.
///
/// Each row is keyed by its pivot, the smallest coordinate it touches; the
/// pivot entry is 1 and no other row has a nonzero entry in that column.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SubspaceBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl SubspaceBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Canonical representative of `v` modulo the subspace.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (pivot, c) in v {
            if let Some(row) = self.rows.get(pivot) {
                add_scaled(&mut out, row, &-c.clone());
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in r.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                add_scaled(row, &r, &-c);
            }
        }
        debug_assert!(r.get(&pivot).is_some_and(One::is_one));
        self.rows.insert(pivot, r);
        true
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }
}

/// Kernel of the linear map sending the `j`-th basis vector to `images[j]`.
///
/// Eliminates on the images while tracking the combination of basis vectors
/// that produced each row; combinations whose image cancels span the kernel.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut out = Vec::new();
    for (j, image) in images.iter().enumerate() {
        let mut img = image.clone();
        let mut combo = SparseVec::new();
        combo.insert(j, Q::one());
        let independent = loop {
            let Some((&lead, c)) = img.iter().next() else {
                break false;
            };
            match rows.get(&lead) {
                Some((row_img, row_combo)) => {
                    let factor = -c.clone();
                    add_scaled(&mut combo, row_combo, &factor);
                    add_scaled(&mut img, row_img, &factor);
                }
                None => break true,
            }
        };
        if independent {
            let lead = *img.keys().next().expect("nonzero image");
            let inv = img[&lead].recip();
            for v in img.values_mut().chain(combo.values_mut()) {
                *v *= &inv;
            }
            rows.insert(lead, (img, combo));
        } else {
            out.push(combo);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    fn vecf(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, c)| (i, q(c))).collect()
    }

    fn apply(images: &[SparseVec], x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, c) in x {
            add_scaled(&mut out, &images[j], c);
        }
        out
    }

    #[test]
    fn reduced_echelon_membership() {
        let mut b = SubspaceBasis::new();
        assert!(b.insert(&vecf(&[(0, 1), (1, 1)])));
        assert!(b.insert(&vecf(&[(1, 1), (2, 1)])));
        assert!(!b.insert(&vecf(&[(0, 1), (2, -1)])));
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&vecf(&[(0, 2), (1, 3), (2, 1)])));
        assert!(!b.contains(&vecf(&[(2, 1)])));
        for row in b.rows() {
            let pivot = *row.keys().next().unwrap();
            for other in b.rows() {
                if other != row {
                    assert!(!other.contains_key(&pivot));
                }
            }
        }
    }

    #[test]
    fn kernel_of_small_map() {
        // x0 + x1, x1 + x2, x0 - x2: rank 2, kernel spanned by (1,-1,1)
        let images = vec![
            vecf(&[(0, 1), (2, 1)]),
            vecf(&[(0, 1), (1, 1)]),
            vecf(&[(1, 1), (2, -1)]),
        ];
        let k = kernel(&images);
        assert_eq!(k.len(), 1);
        assert!(apply(&images, &k[0]).is_empty());
        assert!(!k[0].is_empty());
    }

    #[test]
    fn kernel_with_zero_columns() {
        let images = vec![SparseVec::new(), vecf(&[(3, 2)]), vecf(&[(3, 4)])];
        let k = kernel(&images);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&images, v).is_empty());
        }
    }
}
