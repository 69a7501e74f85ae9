//! Brute-force reference implementation used to check the engine.
//!
//! Value sets are plain membership tables over `[LOW, HIGH)`; every integer
//! at or above `HIGH` is taken to be present. Nothing here is shared with
//! the library.
#![allow(dead_code)]

use rand::Rng;

pub const LOW: i64 = -128;
pub const HIGH: i64 = 320;

#[derive(Clone)]
pub struct Semi {
    pub gens: Vec<i64>,
    member: Vec<bool>,
}

impl Semi {
    pub fn new(gens: &[i64]) -> Self {
        let mut member = vec![false; HIGH as usize];
        member[0] = true;
        for z in 1..HIGH {
            member[z as usize] = gens.iter().any(|&g| g <= z && member[(z - g) as usize]);
        }
        assert!(member[(HIGH - 64) as usize..].iter().all(|&b| b), "table too short");
        Semi {
            gens: gens.to_vec(),
            member,
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= HIGH || (z >= 0 && self.member[z as usize])
    }

    pub fn frobenius(&self) -> i64 {
        (0..HIGH).rev().find(|&z| !self.contains(z)).unwrap_or(-1)
    }

    pub fn multiplicity(&self) -> i64 {
        (1..HIGH).find(|&z| self.contains(z)).unwrap()
    }

    pub fn genus(&self) -> usize {
        (0..HIGH).filter(|&z| !self.contains(z)).count()
    }

    pub fn positive(&self) -> Vec<i64> {
        (1..HIGH).filter(|&z| self.contains(z)).collect()
    }

    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let pos = self.positive();
        (-1..HIGH)
            .filter(|&z| !self.contains(z) && pos.iter().all(|&h| self.contains(z + h)))
            .collect()
    }

    pub fn symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    pub fn minimal_generators(&self) -> Vec<i64> {
        let pos = self.positive();
        pos.iter()
            .copied()
            .filter(|&z| !pos.iter().any(|&a| a < z && self.contains(z - a)))
            .collect()
    }
}

/// A value set over `[LOW, HIGH)`, everything above `HIGH` included.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Set {
    bits: Vec<bool>,
}

impl Set {
    fn from_fn(f: impl Fn(i64) -> bool) -> Self {
        Set {
            bits: (LOW..HIGH).map(f).collect(),
        }
    }

    pub fn has(&self, z: i64) -> bool {
        z >= HIGH || (z >= LOW && self.bits[(z - LOW) as usize])
    }

    pub fn values(&self) -> Vec<i64> {
        (LOW..HIGH).filter(|&z| self.has(z)).collect()
    }

    pub fn min(&self) -> i64 {
        (LOW..HIGH).find(|&z| self.has(z)).unwrap_or(HIGH)
    }

    pub fn subset(&self, other: &Set) -> bool {
        (LOW..HIGH).all(|z| !self.has(z) || other.has(z))
    }

    pub fn intersect(&self, other: &Set) -> Set {
        Set::from_fn(|z| self.has(z) && other.has(z))
    }

    pub fn shift(&self, x: i64) -> Set {
        Set::from_fn(|z| self.has(z - x))
    }
}

pub fn ideal(h: &Semi, vals: &[i64]) -> Set {
    Set::from_fn(|z| vals.iter().any(|&v| h.contains(z - v)))
}

pub fn unit(h: &Semi) -> Set {
    ideal(h, &[0])
}

pub fn maximal(h: &Semi) -> Set {
    ideal(h, &h.gens)
}

pub fn canonical(h: &Semi) -> Set {
    let f = h.frobenius();
    Set::from_fn(|z| !h.contains(f - z))
}

pub fn conductor(h: &Semi) -> Set {
    let f = h.frobenius();
    Set::from_fn(|z| z > f)
}

pub fn product(a: &Set, b: &Set) -> Set {
    let av = a.values();
    let bv = b.values();
    let mut bits = vec![false; (HIGH - LOW) as usize];
    for &x in &av {
        for &y in &bv {
            let z = x + y;
            if z >= HIGH {
                break;
            }
            if z >= LOW {
                bits[(z - LOW) as usize] = true;
            }
        }
    }
    Set { bits }
}

/// `{z : z + b ∈ a for all b ∈ b}`.
pub fn colon(a: &Set, b: &Set) -> Set {
    let bv = b.values();
    Set::from_fn(|z| bv.iter().all(|&y| a.has(z + y)))
}

pub fn mpow(h: &Semi, s: u32) -> Set {
    (0..s).fold(unit(h), |acc, _| product(&acc, &maximal(h)))
}

pub fn minimal_generators(h: &Semi, e: &Set) -> Vec<i64> {
    let pos = h.positive();
    e.values()
        .into_iter()
        .filter(|&z| !pos.iter().any(|&g| e.has(z - g)))
        .collect()
}

pub fn mu(h: &Semi, e: &Set) -> usize {
    minimal_generators(h, e).len()
}

pub fn type_quotient(h: &Semi, i: &Set) -> usize {
    let socle = colon(i, &maximal(h)).intersect(&unit(h));
    (LOW..HIGH).filter(|&z| socle.has(z) && !i.has(z)).count()
}

/// `μ(K : I)`.
pub fn type_ideal(h: &Semi, i: &Set) -> usize {
    mu(h, &colon(&canonical(h), i))
}

/// `I :_Q m ⊆ R`.
pub fn elias(h: &Semi, i: &Set) -> bool {
    colon(i, &maximal(h)).subset(&unit(h))
}

pub fn colength(h: &Semi, i: &Set) -> usize {
    (0..HIGH).filter(|&z| h.contains(z) && !i.has(z)).count()
}

pub fn ulrich(h: &Semi, i: &Set) -> bool {
    mu(h, i) as i64 == h.multiplicity()
}

pub fn full(h: &Semi, i: &Set) -> bool {
    let m = maximal(h);
    colon(&product(&m, i), &m).intersect(&unit(h)) == *i
}

pub fn mfull_te(h: &Semi, i: &Set) -> bool {
    let x = ideal(h, &[h.multiplicity()]);
    colon(&product(&maximal(h), i), &x).intersect(&unit(h)) == *i
}

pub fn trace(h: &Semi, i: &Set) -> Set {
    product(i, &colon(&unit(h), i))
}

/// (eli, ulr, gll over monomial generators).
pub fn indices(h: &Semi) -> (u32, u32, u32) {
    let e = h.multiplicity();
    let mut eli = None;
    let mut ulr = None;
    let mut gll = None;
    let principals: Vec<Set> = h.gens.iter().map(|&g| ideal(h, &[g])).collect();
    let mut p = maximal(h);
    for s in 1..64u32 {
        if eli.is_none() && elias(h, &p) {
            eli = Some(s);
        }
        if ulr.is_none() && mu(h, &p) as i64 == e {
            ulr = Some(s);
        }
        if gll.is_none() && principals.iter().any(|q| p.subset(q)) {
            gll = Some(s);
        }
        if let (Some(a), Some(b), Some(c)) = (eli, ulr, gll) {
            return (a, b, c);
        }
        p = product(&p, &maximal(h));
    }
    panic!("indices did not settle")
}

/// A random semigroup with multiplicity in `2..=max_e` and genus at most
/// `max_genus`, as a list of generators.
pub fn random_semigroup(rng: &mut impl Rng, max_e: i64, max_genus: usize) -> Vec<i64> {
    loop {
        let e = rng.gen_range(2..=max_e);
        let extra = rng.gen_range(1..=e.min(4));
        let mut gens = vec![e];
        for _ in 0..extra {
            gens.push(rng.gen_range(e + 1..=3 * e + 6));
        }
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0, |a, &b| num_integer::gcd(a, b)) != 1 {
            continue;
        }
        let h = Semi::new(&gens);
        let f = h.frobenius();
        if h.genus() <= max_genus && f < HIGH / 4 {
            return h.minimal_generators();
        }
    }
}

/// Values of 1 to 4 random generators of a proper m-primary ideal.
pub fn random_ideal_values(rng: &mut impl Rng, h: &Semi) -> Vec<i64> {
    let bound = h.frobenius() + 2 * h.multiplicity() + 4;
    let pool: Vec<i64> = (1..=bound).filter(|&z| h.contains(z)).collect();
    let k = rng.gen_range(1..=4);
    let mut vals: Vec<i64> = (0..k).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
    vals.sort_unstable();
    vals.dedup();
    vals
}
