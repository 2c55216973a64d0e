//! Exact coefficient fields for the oracle: `F̄_ℓ`, `Q` and `Q(ζ_N)`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly;
use crate::error::{Error, Result};
use crate::scalars::arith::split_ell;
use crate::scalars::{AdicUnit, ModScalar};

/// A field with explicit element operations.
pub trait Field {
    type E: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn integer(&self, n: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn encode(&self, a: &Self::E) -> String;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::E) -> bool {
        *a == self.zero()
    }

    fn div(&self, a: &Self::E, b: &Self::E) -> Option<Self::E> {
        Some(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::E, k: i64) -> Self::E {
        let base = if k < 0 { self.inv(a).expect("power of zero") } else { a.clone() };
        let mut out = self.one();
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }
}

/// A field containing a chosen primitive `N`-th root of unity `ζ_N`
/// (or its reduction).
pub trait CyclotomicField: Field {
    fn zeta_order(&self) -> u64;
    fn zeta(&self, k: i64) -> Self::E;

    /// `Σ_k counts[k]·ζ^k`.
    fn zeta_sum(&self, counts: &[i64]) -> Self::E {
        counts.iter().enumerate().filter(|(_, c)| **c != 0).fold(self.zero(), |acc, (k, c)| {
            self.add(&acc, &self.mul(&self.integer(*c), &self.zeta(k as i64)))
        })
    }
}

/// Splits `ζ_N^j = ζ_{N′}^s · ζ_{ℓ^a}^t` with `N = N′ℓ^a`, `ℓ ∤ N′`;
/// returns `(N′, s, ℓ^a, t)`.
pub fn split_zeta(ell: u64, n: u64, j: i64) -> (u64, i64, u64, i64) {
    let (np, a) = split_ell(n, ell);
    let la = ell.pow(a);
    let j = j.rem_euclid(n as i64);
    let s = if np == 1 {
        0
    } else {
        (j * modinv(la as i64 % np as i64, np as i64)).rem_euclid(np as i64)
    };
    let t = if la == 1 {
        0
    } else {
        (j * modinv(np as i64 % la as i64, la as i64)).rem_euclid(la as i64)
    };
    (np, s, la, t)
}

fn modinv(a: i64, m: i64) -> i64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(&BigInt::from(m)).to_i64().expect("small modulus")
}

/// Reduction `r(ζ_N^j)`: the ℓ-power part dies, the rest follows the fixed
/// isomorphism of prime-to-ℓ roots of unity.
pub fn reduce_zeta(ell: u64, n: u64, j: i64) -> ModScalar {
    let (np, s, _, _) = split_zeta(ell, n, j);
    ModScalar::root_of_unity(ell, np, s).expect("prime-to-ell order")
}

/// `ζ_N^j` as an ℓ-adic unit.
pub fn adic_zeta(ell: u64, n: u64, j: i64) -> AdicUnit {
    let (np, s, la, t) = split_zeta(ell, n, j);
    let teich = ModScalar::root_of_unity(ell, np, s).expect("prime-to-ell order");
    AdicUnit::new(0, teich, num_rational::Ratio::new(t, la as i64)).expect("valid unit")
}

/// `F̄_ℓ` with `ζ_N ↦ r(ζ_N)`.
#[derive(Clone, Debug)]
pub struct ModField {
    ell: u64,
    n: u64,
    z: ModScalar,
}

impl ModField {
    pub fn new(ell: u64, n: u64) -> Self {
        ModField {
            ell,
            n,
            z: reduce_zeta(ell, n, 1),
        }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }
}

impl Field for ModField {
    type E = ModScalar;

    fn zero(&self) -> ModScalar {
        ModScalar::zero(self.ell)
    }
    fn one(&self) -> ModScalar {
        ModScalar::one(self.ell)
    }
    fn integer(&self, n: i64) -> ModScalar {
        ModScalar::from_int(self.ell, n)
    }
    fn add(&self, a: &ModScalar, b: &ModScalar) -> ModScalar {
        a.add(b)
    }
    fn neg(&self, a: &ModScalar) -> ModScalar {
        a.neg()
    }
    fn mul(&self, a: &ModScalar, b: &ModScalar) -> ModScalar {
        a.mul(b)
    }
    fn inv(&self, a: &ModScalar) -> Option<ModScalar> {
        a.inv().ok()
    }
    fn encode(&self, a: &ModScalar) -> String {
        a.encode()
    }
    fn is_zero(&self, a: &ModScalar) -> bool {
        a.is_zero()
    }
    fn pow(&self, a: &ModScalar, k: i64) -> ModScalar {
        a.pow(k)
    }
}

impl CyclotomicField for ModField {
    fn zeta_order(&self) -> u64 {
        self.n
    }
    fn zeta(&self, k: i64) -> ModScalar {
        self.z.pow(k)
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn integer(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn encode(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// `Q(ζ_N) = Q[z]/Φ_N(z)`, elements in the power basis `1, z, …, z^{φ(N)−1}`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u64,
    modulus: Vec<BigRational>,
}

fn cyclotomic_polynomial(n: u64) -> Vec<BigRational> {
    let q = Rationals;
    let mut p: Vec<BigRational> = vec![q.integer(-1)];
    p.resize(n as usize, q.zero());
    p.push(q.one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (quot, rem) = poly::divrem(&q, &p, &cyclotomic_polynomial(d));
            debug_assert!(rem.is_empty());
            p = quot;
        }
    }
    p
}

impl Cyclotomic {
    pub fn new(n: u64) -> Self {
        Cyclotomic {
            n,
            modulus: cyclotomic_polynomial(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: Vec<BigRational>) -> Vec<BigRational> {
        let (_, mut r) = poly::divrem(&Rationals, &p, &self.modulus);
        r.resize(self.degree(), BigRational::zero());
        r
    }

    /// Whether all power-basis coefficients are `ℓ`-integral.
    pub fn is_ell_integral(&self, a: &[BigRational], ell: u64) -> bool {
        let ell = BigInt::from(ell);
        a.iter().all(|c| !c.denom().is_multiple_of(&ell))
    }

    /// Reduction mod ℓ through `ζ_N ↦ r(ζ_N)`; `None` unless ℓ-integral.
    pub fn reduce_mod(&self, a: &[BigRational], ell: u64) -> Option<ModScalar> {
        if !self.is_ell_integral(a, ell) {
            return None;
        }
        let z = reduce_zeta(ell, self.n, 1);
        let m = BigInt::from(ell);
        let mut out = ModScalar::zero(ell);
        for (i, c) in a.iter().enumerate() {
            let num = c.numer().mod_floor(&m).to_i64().expect("small");
            let den = c.denom().mod_floor(&m).to_i64().expect("small");
            let v = ModScalar::from_int(ell, num).div(&ModScalar::from_int(ell, den)).expect("ell-integral");
            out = out.add(&v.mul(&z.pow(i as i64)));
        }
        Some(out)
    }
}

impl Field for Cyclotomic {
    type E = Vec<BigRational>;

    fn zero(&self) -> Self::E {
        vec![BigRational::zero(); self.degree()]
    }
    fn one(&self) -> Self::E {
        self.integer(1)
    }
    fn integer(&self, n: i64) -> Self::E {
        let mut v = self.zero();
        v[0] = BigRational::from_integer(n.into());
        v
    }
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Self::E) -> Self::E {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.reduce(poly::mul(&Rationals, a, b))
    }
    fn inv(&self, a: &Self::E) -> Option<Self::E> {
        let a = poly::trim(&Rationals, a.clone());
        if a.is_empty() {
            return None;
        }
        let (g, s, _) = poly::xgcd(&Rationals, &a, &self.modulus);
        debug_assert_eq!(g.len(), 1);
        Some(self.reduce(s))
    }
    fn encode(&self, a: &Self::E) -> String {
        let mut terms = Vec::new();
        for (i, c) in a.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => format!("z{}", self.n),
                (_, true) => format!("z{}^{i}", self.n),
                (1, false) => format!("{mag}*z{}", self.n),
                (_, false) => format!("{mag}*z{}^{i}", self.n),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (sign, body)) in terms.into_iter().enumerate() {
            match (k, sign) {
                (0, "-") => s.push_str(&format!("-{body}")),
                (0, _) => s.push_str(&body),
                (_, sign) => s.push_str(&format!(" {sign} {body}")),
            }
        }
        s
    }
}

impl CyclotomicField for Cyclotomic {
    fn zeta_order(&self) -> u64 {
        self.n
    }
    fn zeta(&self, k: i64) -> Self::E {
        let k = k.rem_euclid(self.n as i64) as usize;
        let mut p = vec![BigRational::zero(); k + 1];
        p[k] = BigRational::one();
        self.reduce(p)
    }
}

/// Recognizes `x = q^e · ζ_N^j` with `|e| ≤ bound`.
pub fn recognize_q_zeta(field: &Cyclotomic, q: u64, x: &[BigRational], bound: i64) -> Result<(i64, i64)> {
    let qf = field.integer(q as i64);
    for e in -bound..=bound {
        let rest = field.mul(&x.to_vec(), &field.pow(&qf, -e));
        for j in 0..field.zeta_order() as i64 {
            if rest == field.zeta(j) {
                return Ok((e, j));
            }
        }
    }
    Err(Error::Certification(format!("{} is not of the form q^e·ζ", field.encode(&x.to_vec()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let q = Rationals;
        let c = |v: &[i64]| v.iter().map(|&x| q.integer(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), c(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), c(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(20), c(&[1, 0, -1, 0, 1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let f = Cyclotomic::new(20);
        let z = f.zeta(1);
        assert_eq!(f.pow(&z, 20), f.one());
        assert_ne!(f.pow(&z, 10), f.one());
        assert_eq!(f.pow(&z, 10), f.integer(-1));
        let a = f.add(&z, &f.integer(3));
        let ai = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &ai), f.one());
        assert_eq!(f.encode(&f.sub(&f.zeta(3), &f.integer(2))), "z20^3 - 2");
    }

    #[test]
    fn reduction_is_a_homomorphism_on_roots() {
        let f = Cyclotomic::new(6);
        for ell in [5u64, 7, 3] {
            for j in 0..6 {
                for k in 0..6 {
                    let lhs = f.reduce_mod(&f.mul(&f.zeta(j), &f.zeta(k)), ell).unwrap();
                    assert_eq!(lhs, reduce_zeta(ell, 6, j).mul(&reduce_zeta(ell, 6, k)));
                }
            }
        }
        assert!(reduce_zeta(3, 6, 2).is_one());
        assert_eq!(adic_zeta(3, 6, 2).reduce(&crate::PrimeContext::new(3, 2).unwrap()), reduce_zeta(3, 6, 2));
    }

    #[test]
    fn recognition() {
        let f = Cyclotomic::new(6);
        let x = f.mul(&f.integer(4), &f.zeta(5));
        assert_eq!(recognize_q_zeta(&f, 2, &x, 5).unwrap(), (2, 5));
    }
}
