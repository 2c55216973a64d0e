//! Compatible tower of finite fields `F_{ℓ^d}`.
//!
//! Each degree `d ≥ 2` is defined by the least monic polynomial (coefficients
//! compared from `x^{d-1}` down to `x^0`) that is primitive and whose root
//! `g_d` satisfies `g_d^{(ℓ^d-1)/(ℓ^m-1)} = g_m` for every proper divisor `m`.
//! Degree one uses the least primitive root `g_1`. Embeddings are therefore
//! `g_m ↦ g_d^{(ℓ^d-1)/(ℓ^m-1)}` and compose correctly.
//!
//! Elements are packed as base-`ℓ` integers whose digit `i` is the
//! coefficient of `g_d^i`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::arith::{divisors, factorize, mulmod, order_mod_prime, powmod};
use crate::error::{Error, Result};

/// Largest field order with exp/log tables.
pub const MAX_TABLE_ORDER: u64 = 1 << 22;

pub(crate) struct FieldTable {
    pub ell: u64,
    pub degree: u32,
    /// `ℓ^d`.
    pub order: u64,
    /// Coefficients `c_0..c_{d-1}` of the monic defining polynomial.
    pub modulus: Vec<u64>,
    /// Primitive root of `F_ℓ` (degree one) or unused.
    pub gen1: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FieldTable {
    pub fn group_order(&self) -> u64 {
        self.order - 1
    }

    pub fn exp(&self, k: u64) -> u64 {
        let k = k % self.group_order();
        if self.degree == 1 {
            powmod(self.gen1, k, self.ell)
        } else {
            self.exp[k as usize] as u64
        }
    }

    /// Discrete log of a nonzero packed element. Degree-one fields build no
    /// table; callers use a higher-degree table for logs of constants.
    pub fn log(&self, packed: u64) -> u64 {
        debug_assert!(packed != 0);
        if self.degree == 1 {
            // Small prime fields only reach this through `mult_order`-free paths.
            let mut x = 1u64;
            for k in 0..self.group_order() {
                if x == packed {
                    return k;
                }
                x = mulmod(x, self.gen1, self.ell);
            }
            unreachable!("element outside F_ℓ^×")
        } else {
            self.log[packed as usize] as u64
        }
    }
}

type Cache = Mutex<HashMap<(u64, u32), Arc<FieldTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `ℓ^d` if it fits the table limit (degree one is always allowed).
pub fn field_order(ell: u64, degree: u32) -> Result<u64> {
    if degree == 1 {
        return Ok(ell);
    }
    let mut o: u64 = 1;
    for _ in 0..degree {
        o = o
            .checked_mul(ell)
            .filter(|&o| o <= MAX_TABLE_ORDER)
            .ok_or(Error::ExtensionTooLarge { ell, degree })?;
    }
    Ok(o)
}

pub(crate) fn table(ell: u64, degree: u32) -> Result<Arc<FieldTable>> {
    if let Some(t) = cache().lock().unwrap().get(&(ell, degree)) {
        return Ok(t.clone());
    }
    let built = Arc::new(build(ell, degree)?);
    let mut guard = cache().lock().unwrap();
    Ok(guard.entry((ell, degree)).or_insert(built).clone())
}

/// Table lookup for degrees already validated by the caller.
pub(crate) fn table_unchecked(ell: u64, degree: u32) -> Arc<FieldTable> {
    table(ell, degree).unwrap_or_else(|e| panic!("{e}"))
}

fn least_primitive_root(ell: u64) -> u64 {
    if ell == 2 {
        return 1;
    }
    (1..ell)
        .find(|&g| order_mod_prime(g, ell) == ell - 1)
        .expect("prime field has a primitive root")
}

fn build(ell: u64, degree: u32) -> Result<FieldTable> {
    let order = field_order(ell, degree)?;
    if degree == 1 {
        return Ok(FieldTable {
            ell,
            degree,
            order,
            modulus: vec![],
            gen1: least_primitive_root(ell),
            exp: vec![],
            log: vec![],
        });
    }
    let d = degree as usize;
    let group = order - 1;
    let primes: Vec<u64> = factorize(group).into_iter().map(|(r, _)| r).collect();
    let subfields: Vec<Arc<FieldTable>> = divisors(degree as u64)
        .into_iter()
        .filter(|&m| m < degree as u64)
        .map(|m| table(ell, m as u32))
        .collect::<Result<_>>()?;

    let mut modulus = vec![0u64; d];
    for idx in 0..order {
        let mut rest = idx;
        for c in modulus.iter_mut() {
            *c = rest % ell;
            rest /= ell;
        }
        if modulus[0] == 0 {
            continue;
        }
        let ring = PolyRing { ell, modulus: &modulus };
        let x = ring.x();
        if ring.pow(&x, group) != ring.one() || primes.iter().any(|r| ring.pow(&x, group / r) == ring.one()) {
            continue;
        }
        let compatible = subfields.iter().all(|sub| {
            let n = group / (sub.order - 1);
            let y = ring.pow(&x, n);
            ring.is_root_of(sub, &y)
        });
        if compatible {
            let (exp, log) = ring.tables(order);
            return Ok(FieldTable {
                ell,
                degree,
                order,
                modulus,
                gen1: 0,
                exp,
                log,
            });
        }
    }
    unreachable!("compatible primitive polynomial exists for every degree")
}

/// Arithmetic in `F_ℓ[x]/(modulus)` on dense coefficient vectors.
struct PolyRing<'a> {
    ell: u64,
    modulus: &'a [u64],
}

impl PolyRing<'_> {
    fn d(&self) -> usize {
        self.modulus.len()
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.d()];
        v[0] = 1;
        v
    }

    fn x(&self) -> Vec<u64> {
        let mut v = vec![0; self.d()];
        v[1 % self.d()] = 1;
        v
    }

    fn constant(&self, c: u64) -> Vec<u64> {
        let mut v = vec![0; self.d()];
        v[0] = c % self.ell;
        v
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (d, l) = (self.d(), self.ell);
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(ai, bj, l)) % l;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let t = mulmod(c, m, l);
                prod[k - d + i] = (prod[k - d + i] + l - t) % l;
            }
        }
        prod.truncate(d);
        prod
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.ell).collect()
    }

    fn pow(&self, base: &[u64], mut e: u64) -> Vec<u64> {
        let mut r = self.one();
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Whether `y` is a root of the defining polynomial of `sub`.
    fn is_root_of(&self, sub: &FieldTable, y: &[u64]) -> bool {
        if sub.degree == 1 {
            return *y == self.constant(sub.gen1);
        }
        let mut acc = self.one();
        for &c in sub.modulus.iter().rev() {
            acc = self.add(&self.mul(&acc, y), &self.constant(c));
        }
        acc.iter().all(|&c| c == 0)
    }

    fn pack(&self, v: &[u64]) -> u64 {
        v.iter().rev().fold(0, |acc, &c| acc * self.ell + c)
    }

    fn tables(&self, order: u64) -> (Vec<u32>, Vec<u32>) {
        let group = (order - 1) as usize;
        let mut exp = Vec::with_capacity(group);
        let mut log = vec![u32::MAX; order as usize];
        let x = self.x();
        let mut cur = self.one();
        for k in 0..group {
            let p = self.pack(&cur);
            exp.push(p as u32);
            log[p as usize] = k as u32;
            cur = self.mul(&cur, &x);
        }
        (exp, log)
    }
}

pub(crate) fn digits(ell: u64, degree: u32, mut packed: u64) -> Vec<u64> {
    (0..degree)
        .map(|_| {
            let c = packed % ell;
            packed /= ell;
            c
        })
        .collect()
}

pub(crate) fn pack(ell: u64, coeffs: &[u64]) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * ell + c % ell)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_over_two_is_x2_x_1() {
        let t = table(2, 2).unwrap();
        assert_eq!(t.modulus, vec![1, 1]);
    }

    #[test]
    fn norm_compatibility_holds() {
        for (ell, d) in [(2u64, 4u32), (2, 6), (3, 4), (5, 2), (7, 2), (3, 6)] {
            let t = table(ell, d).unwrap();
            for m in divisors(d as u64).into_iter().filter(|&m| m < d as u64) {
                let sub = table(ell, m as u32).unwrap();
                let n = (t.order - 1) / (sub.order - 1);
                let ring = PolyRing { ell, modulus: &t.modulus };
                let y = ring.pow(&ring.x(), n);
                assert!(ring.is_root_of(&sub, &y), "ℓ={ell} d={d} m={m}");
            }
        }
    }

    #[test]
    fn oversized_extension_rejected() {
        assert!(matches!(table(101, 5), Err(Error::ExtensionTooLarge { .. })));
    }
}
