use std::collections::BTreeMap;
use std::fmt;

use super::line::Catalog;
use super::symbol::CuspidalSymbol;
use crate::error::{Error, Result};
use crate::scalars::{Scalar, World};

/// A generic segment, stored canonically as `[0, k−1]` on its first symbol.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    start: CuspidalSymbol,
    len: u64,
}

impl Segment {
    /// `[a, b]_ρ`, rejected unless `b − a + 1 < e(ρ)`.
    pub fn new(rho: &CuspidalSymbol, a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::Domain(format!("segment [{a},{b}] has a > b")));
        }
        let len = (b - a + 1) as u64;
        if let Some(e) = rho.invariants().e {
            if len >= e {
                return Err(Error::NotGeneric { k: len, e });
            }
        }
        Ok(Segment { start: rho.nu_shift(a), len })
    }

    pub fn start(&self) -> &CuspidalSymbol {
        &self.start
    }

    /// Length `k`.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn world(&self) -> World {
        self.start.world()
    }

    /// GL-size `k·n(ρ)`.
    pub fn size(&self) -> u64 {
        self.len * self.start.n()
    }

    /// `k < o(ρ)`; always true ℓ-adically.
    pub fn is_banal(&self) -> bool {
        match self.start.invariants().o {
            Some(o) => self.len < o,
            None => true,
        }
    }

    /// `ν^i ρ` for `i = 0..k`.
    pub fn symbols(&self) -> Vec<CuspidalSymbol> {
        (0..self.len as i64).map(|i| self.start.nu_shift(i)).collect()
    }

    /// `[a,b]_ρ^∨ = [−b,−a]_{ρ^∨}`.
    pub fn dual(&self, cat: &Catalog) -> Self {
        Segment {
            start: self.start.dual(cat).nu_shift(1 - self.len as i64),
            len: self.len,
        }
    }

    pub fn twisted(&self, u: &Scalar) -> Self {
        Segment {
            start: self.start.twisted(u),
            len: self.len,
        }
    }

    pub fn nu_shift(&self, a: i64) -> Self {
        Segment {
            start: self.start.nu_shift(a),
            len: self.len,
        }
    }

    pub fn describe(&self) -> String {
        format!("[0,{}]_{{{}}}", self.len - 1, self.start.describe())
    }

    /// Relative positions of both segments on a common line, with the circle
    /// size in the mod-ℓ world; `None` when on different lines.
    fn positions(&self, other: &Self) -> Option<(Vec<i64>, Vec<i64>, Option<i64>)> {
        let r = self.start.offset_to(&other.start)?;
        let modulus = self.start.invariants().o.map(|o| o as i64);
        let p1 = (0..self.len as i64).collect();
        let p2 = (r..r + other.len as i64).collect();
        Some((p1, p2, modulus))
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Longest subsequence `s_{i_1}, s_{i_2}, …` with `s_{i_{j+1}} = s_{i_j} + 1`
/// (mod the circle size, if any).
fn longest_chain(seq: &[i64], modulus: Option<i64>) -> usize {
    let next = |x: i64| match modulus {
        Some(m) => (x + 1).rem_euclid(m),
        None => x + 1,
    };
    let norm = |x: i64| match modulus {
        Some(m) => x.rem_euclid(m),
        None => x,
    };
    let mut best = vec![1usize; seq.len()];
    for j in 0..seq.len() {
        for i in 0..j {
            if next(norm(seq[i])) == norm(seq[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Linkage by extraction: some concatenation order contains a subsequence that
/// is a segment strictly longer than both.
pub fn linked_by_extraction(d1: &Segment, d2: &Segment) -> bool {
    let Some((p1, p2, m)) = d1.positions(d2) else { return false };
    let target = d1.len.max(d2.len) as usize;
    let forward: Vec<i64> = p1.iter().chain(&p2).copied().collect();
    let backward: Vec<i64> = p2.iter().chain(&p1).copied().collect();
    longest_chain(&forward, m) > target || longest_chain(&backward, m) > target
}

/// Interval criterion on an ℓ-adic line: the union is an interval and neither
/// segment contains the other.
pub fn linked_interval(d1: &Segment, d2: &Segment) -> bool {
    let Some((p1, p2, None)) = d1.positions(d2) else { return false };
    let (a1, b1) = (p1[0], *p1.last().unwrap());
    let (a2, b2) = (p2[0], *p2.last().unwrap());
    let union_is_interval = b1 + 1 >= a2 && b2 + 1 >= a1;
    let nested = (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2);
    union_is_interval && !nested
}

pub fn linked(d1: &Segment, d2: &Segment) -> bool {
    match d1.world() {
        World::LAdic => linked_interval(d1, d2),
        World::ModL => linked_by_extraction(d1, d2),
    }
}

/// Generic segments on the line of `base` with the given support: maximal
/// runs are removed repeatedly (longest first, then leftmost).
pub fn generic_from_support(base: &CuspidalSymbol, positions: &[i64]) -> Result<Vec<Segment>> {
    if base.world() != World::LAdic {
        return Err(Error::Domain("generic_from_support expects an l-adic line".into()));
    }
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for &p in positions {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    while !counts.is_empty() {
        let keys: Vec<i64> = counts.keys().copied().collect();
        let mut best = (keys[0], 1usize);
        let mut i = 0;
        while i < keys.len() {
            let mut j = i;
            while j + 1 < keys.len() && keys[j + 1] == keys[j] + 1 {
                j += 1;
            }
            if j - i + 1 > best.1 {
                best = (keys[i], j - i + 1);
            }
            i = j + 1;
        }
        let (a, len) = best;
        for p in a..a + len as i64 {
            let c = counts.get_mut(&p).unwrap();
            *c -= 1;
            if *c == 0 {
                counts.remove(&p);
            }
        }
        out.push(Segment::new(base, a, a + len as i64 - 1)?);
    }
    out.sort();
    Ok(out)
}
