use std::fmt;

use super::arith::{self, embedding_degree, invmod_prime, lcm, mulmod, order_mod_prime, powmod};
use super::field::{self, digits, field_order, table, table_unchecked};
use crate::error::{Error, Result};

/// An element of `F̄_ℓ`, stored in the smallest field `F_{ℓ^d}` containing it.
///
/// Canonical storage makes derived equality, ordering and hashing agree with
/// equality after embedding into a common extension.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModScalar {
    ell: u64,
    degree: u32,
    packed: u64,
}

impl ModScalar {
    pub fn zero(ell: u64) -> Self {
        ModScalar { ell, degree: 1, packed: 0 }
    }

    pub fn one(ell: u64) -> Self {
        ModScalar {
            ell,
            degree: 1,
            packed: 1 % ell,
        }
    }

    pub fn from_int(ell: u64, n: i64) -> Self {
        ModScalar {
            ell,
            degree: 1,
            packed: n.rem_euclid(ell as i64) as u64,
        }
    }

    /// Element `Σ c_i g_d^i` of `F_{ℓ^d}`.
    pub fn from_coeffs(ell: u64, degree: u32, coeffs: &[u64]) -> Result<Self> {
        if coeffs.len() > degree as usize {
            return Err(Error::Domain(format!("{} coefficients for degree {degree}", coeffs.len())));
        }
        field_order(ell, degree)?;
        Ok(Self::canonical_packed(ell, degree, field::pack(ell, coeffs)))
    }

    /// The defining generator `g_d` of `F_{ℓ^d}`.
    pub fn generator(ell: u64, degree: u32) -> Result<Self> {
        let t = table(ell, degree)?;
        if degree == 1 {
            return Ok(Self::from_int(ell, t.gen1 as i64));
        }
        Ok(ModScalar { ell, degree, packed: ell })
    }

    /// `ζ_m^k` where `ζ_m = g_d^{(ℓ^d-1)/m}` for the least `d` with `m | ℓ^d − 1`.
    pub fn root_of_unity(ell: u64, m: u64, k: i64) -> Result<Self> {
        if m == 0 || m.is_multiple_of(ell) {
            return Err(Error::Domain(format!("root of unity of order {m} in characteristic {ell}")));
        }
        let d = embedding_degree(ell, m);
        let t = table(ell, d)?;
        let step = (t.group_order() / m) as i64;
        let e = (k.rem_euclid(m as i64) * step) as u64;
        Ok(Self::canonical_log(ell, d, e))
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// Degree of the smallest field containing the element.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> Vec<u64> {
        digits(self.ell, self.degree, self.packed)
    }

    /// Coefficients after embedding into `F_{ℓ^d}`; requires `degree() | d`.
    pub fn coeffs_in(&self, d: u32) -> Result<Vec<u64>> {
        if !d.is_multiple_of(self.degree) {
            return Err(Error::Domain(format!("degree {} does not divide {d}", self.degree)));
        }
        field_order(self.ell, d)?;
        Ok(digits(self.ell, d, self.packed_in(d)))
    }

    pub fn is_zero(&self) -> bool {
        self.packed == 0
    }

    pub fn is_one(&self) -> bool {
        self.degree == 1 && self.packed == 1 % self.ell
    }

    /// Integer value for elements of the prime field.
    pub fn as_prime_field(&self) -> Option<u64> {
        (self.degree == 1).then_some(self.packed)
    }

    fn same_ell(&self, o: &Self) {
        assert_eq!(self.ell, o.ell, "scalars over different characteristics");
    }

    fn packed_in(&self, d: u32) -> u64 {
        if self.degree == d || self.packed == 0 || self.degree == 1 {
            return self.packed;
        }
        let t = table_unchecked(self.ell, d);
        t.exp(self.log_in(d))
    }

    /// Discrete log in `F_{ℓ^d}` with respect to `g_d`; `d ≥ 2` or degree one.
    fn log_in(&self, d: u32) -> u64 {
        debug_assert!(!self.is_zero());
        let td = table_unchecked(self.ell, d);
        if self.degree == d {
            return td.log(self.packed);
        }
        if self.degree == 1 {
            return td.log(self.packed);
        }
        let tm = table_unchecked(self.ell, self.degree);
        tm.log(self.packed) * (td.group_order() / tm.group_order())
    }

    fn canonical_packed(ell: u64, d: u32, packed: u64) -> Self {
        if d == 1 || packed == 0 {
            return ModScalar { ell, degree: 1, packed };
        }
        let t = table_unchecked(ell, d);
        Self::canonical_log(ell, d, t.log(packed))
    }

    fn canonical_log(ell: u64, d: u32, k: u64) -> Self {
        let t = table_unchecked(ell, d);
        let k = k % t.group_order();
        for m in arith::divisors(d as u64) {
            let m = m as u32;
            let tm = table_unchecked(ell, m);
            let n = t.group_order() / tm.group_order();
            if k.is_multiple_of(n) {
                let packed = if m == d { t.exp(k) } else { tm.exp(k / n) };
                return ModScalar { ell, degree: m, packed };
            }
        }
        unreachable!()
    }

    fn common_degree(&self, o: &Self) -> u32 {
        lcm(self.degree as u64, o.degree as u64) as u32
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_ell(o);
        let d = self.common_degree(o);
        if d == 1 {
            return ModScalar {
                ell: self.ell,
                degree: 1,
                packed: (self.packed + o.packed) % self.ell,
            };
        }
        let (a, b) = (digits(self.ell, d, self.packed_in(d)), digits(self.ell, d, o.packed_in(d)));
        let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % self.ell).collect();
        Self::canonical_packed(self.ell, d, field::pack(self.ell, &sum))
    }

    pub fn neg(&self) -> Self {
        let c: Vec<u64> = self.coeffs().iter().map(|&c| (self.ell - c) % self.ell).collect();
        ModScalar {
            ell: self.ell,
            degree: self.degree,
            packed: field::pack(self.ell, &c),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_ell(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.ell);
        }
        let d = self.common_degree(o);
        if d == 1 {
            return ModScalar {
                ell: self.ell,
                degree: 1,
                packed: mulmod(self.packed, o.packed, self.ell),
            };
        }
        Self::canonical_log(self.ell, d, self.log_in(d) + o.log_in(d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.pow(-1))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// `self^e`; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one(self.ell);
        }
        if self.is_zero() {
            assert!(e > 0, "negative power of zero");
            return *self;
        }
        if self.degree == 1 {
            let b = if e < 0 { invmod_prime(self.packed, self.ell) } else { self.packed };
            return ModScalar {
                ell: self.ell,
                degree: 1,
                packed: powmod(b, e.unsigned_abs(), self.ell),
            };
        }
        let t = table_unchecked(self.ell, self.degree);
        let g = t.group_order() as i128;
        let k = (t.log(self.packed) as i128 * e as i128).rem_euclid(g) as u64;
        Self::canonical_log(self.ell, self.degree, k)
    }

    /// Least `k ≥ 1` with `self^k = 1`.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::Domain("multiplicative order of zero".into()));
        }
        if self.degree == 1 {
            return Ok(order_mod_prime(self.packed, self.ell));
        }
        let t = table_unchecked(self.ell, self.degree);
        let g = t.group_order();
        Ok(g / arith::gcd(t.log(self.packed), g))
    }

    /// Text encoding: an integer in `[0, ℓ)` for prime-field elements, else a
    /// polynomial in `g_d` with descending powers.
    pub fn encode(&self) -> String {
        if self.degree == 1 {
            return self.packed.to_string();
        }
        let g = format!("g_{}", self.degree);
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => g.clone(),
                    _ => format!("{g}^{i}"),
                };
                match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => mono,
                    _ => format!("{c}*{mono}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Debug for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Display for ModScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ell: u64, n: i64) -> ModScalar {
        ModScalar::from_int(ell, n)
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(s(5, 2).mult_order().unwrap(), 4);
        assert_eq!(s(7, 2).mult_order().unwrap(), 3);
        assert_eq!(s(11, 1).mult_order().unwrap(), 1);
        assert!(s(5, 0).mult_order().is_err());
    }

    #[test]
    fn extension_arithmetic_is_a_field() {
        let g = ModScalar::generator(2, 2).unwrap();
        let one = ModScalar::one(2);
        // g^2 + g + 1 = 0 over F_2.
        assert!(g.mul(&g).add(&g).add(&one).is_zero());
        assert_eq!(g.mult_order().unwrap(), 3);
        assert_eq!(g.mul(&g.inv().unwrap()), one);
        assert_eq!(g.encode(), "g_2");
        assert_eq!(g.add(&one).encode(), "g_2 + 1");
    }

    #[test]
    fn subfield_elements_are_canonicalized() {
        let g4 = ModScalar::generator(2, 4).unwrap();
        let c = g4.pow(5);
        assert_eq!(c.degree(), 2);
        assert_eq!(c, ModScalar::generator(2, 2).unwrap());
        assert_eq!(g4.pow(15), ModScalar::one(2));
    }

    #[test]
    fn cross_degree_products_land_in_lcm() {
        let a = ModScalar::generator(3, 2).unwrap();
        let b = ModScalar::generator(3, 3).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.degree(), 6);
        assert_eq!(p.mul(&b.inv().unwrap()), a);
    }

    #[test]
    fn embedding_composition_matches_direct_embedding() {
        let g2 = ModScalar::generator(2, 2).unwrap();
        let via4 = ModScalar::from_coeffs(2, 4, &g2.coeffs_in(4).unwrap()).unwrap();
        let c12 = g2.coeffs_in(12).unwrap();
        let via4_12 = via4.coeffs_in(12).unwrap();
        assert_eq!(c12, via4_12);
    }

    #[test]
    fn roots_of_unity_have_requested_order() {
        let z = ModScalar::root_of_unity(2, 5, 1).unwrap();
        assert_eq!(z.degree(), 4);
        assert_eq!(z.mult_order().unwrap(), 5);
        assert_eq!(ModScalar::root_of_unity(7, 3, 1).unwrap().mult_order().unwrap(), 3);
    }
}
