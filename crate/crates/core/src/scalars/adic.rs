use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use super::context::PrimeContext;
use super::modscalar::ModScalar;
use crate::error::{Error, Result};

/// An element `q^e · [t] · ζ(s)` of the subgroup `q^Z × μ_{ℓ'} × μ_{ℓ^∞}` of
/// `Z̄_ℓ^×`, where `[t]` is the Teichmüller lift of `t ∈ F̄_ℓ^×` and
/// `ζ(s) = exp(2πi s)` for `s ∈ Z[1/ℓ]/Z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdicUnit {
    e_q: i64,
    teich: ModScalar,
    sing: Ratio<i64>,
}

fn reduce_mod_one(s: Ratio<i64>) -> Ratio<i64> {
    let den = *s.denom();
    Ratio::new(s.numer().rem_euclid(den), den)
}

fn is_power_of(mut n: i64, ell: u64) -> bool {
    while n > 1 && n % ell as i64 == 0 {
        n /= ell as i64;
    }
    n == 1
}

impl AdicUnit {
    pub fn new(e_q: i64, teich: ModScalar, sing: Ratio<i64>) -> Result<Self> {
        if teich.is_zero() {
            return Err(Error::Domain("Teichmüller component must be nonzero".into()));
        }
        if !is_power_of(*sing.denom(), teich.ell()) {
            return Err(Error::Domain(format!("singular exponent {sing} is not in Z[1/{}]", teich.ell())));
        }
        Ok(AdicUnit {
            e_q,
            teich,
            sing: reduce_mod_one(sing),
        })
    }

    pub fn one(ell: u64) -> Self {
        AdicUnit {
            e_q: 0,
            teich: ModScalar::one(ell),
            sing: Ratio::zero(),
        }
    }

    /// `q^e`.
    pub fn q_power(ell: u64, e: i64) -> Self {
        AdicUnit { e_q: e, ..Self::one(ell) }
    }

    /// The Teichmüller representative `[t]`.
    pub fn teichmuller(t: ModScalar) -> Result<Self> {
        Self::new(0, t, Ratio::zero())
    }

    pub fn e_q(&self) -> i64 {
        self.e_q
    }

    pub fn teich(&self) -> ModScalar {
        self.teich
    }

    pub fn sing(&self) -> Ratio<i64> {
        self.sing
    }

    pub fn ell(&self) -> u64 {
        self.teich.ell()
    }

    pub fn mul(&self, o: &Self) -> Self {
        AdicUnit {
            e_q: self.e_q + o.e_q,
            teich: self.teich.mul(&o.teich),
            sing: reduce_mod_one(self.sing + o.sing),
        }
    }

    pub fn inv(&self) -> Self {
        AdicUnit {
            e_q: -self.e_q,
            teich: self.teich.pow(-1),
            sing: reduce_mod_one(-self.sing),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        AdicUnit {
            e_q: self.e_q * k,
            teich: self.teich.pow(k),
            sing: reduce_mod_one(self.sing * k),
        }
    }

    pub fn is_one(&self) -> bool {
        self.e_q == 0 && self.teich.is_one() && self.sing.is_zero()
    }

    /// Whether the element is a root of unity (`e_q = 0`).
    pub fn is_root_of_unity(&self) -> bool {
        self.e_q == 0
    }

    /// Reduction modulo the maximal ideal: `q̄^{e_q} · t`.
    pub fn reduce(&self, ctx: &PrimeContext) -> ModScalar {
        ctx.q_bar().pow(self.e_q).mul(&self.teich)
    }

    pub fn encode(&self) -> String {
        let t = self.teich.encode();
        let t = if t.contains(' ') { format!("({t})") } else { t };
        format!("q^{} * {} * zeta({})", self.e_q, t, self.sing)
    }
}

impl fmt::Debug for AdicUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Display for AdicUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// `r_ℓ` on units: `q̄^{e_q} · teich`; the ℓ-singular part maps to 1.
pub fn reduce_unit(u: &AdicUnit, ctx: &PrimeContext) -> ModScalar {
    u.reduce(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let c52 = PrimeContext::new(5, 2).unwrap();
        let u = AdicUnit::q_power(5, -1);
        assert_eq!(reduce_unit(&u, &c52), ModScalar::from_int(5, 3));
        let c37 = PrimeContext::new(3, 7).unwrap();
        let z = AdicUnit::new(0, ModScalar::one(3), Ratio::new(1, 3)).unwrap();
        assert_eq!(reduce_unit(&z, &c37), ModScalar::one(3));
        assert_eq!(reduce_unit(&AdicUnit::q_power(3, 1), &c37), ModScalar::one(3));
    }

    #[test]
    fn faithful_and_normalized() {
        let a = AdicUnit::new(0, ModScalar::one(3), Ratio::new(4, 3)).unwrap();
        assert_eq!(a.sing(), Ratio::new(1, 3));
        assert_ne!(AdicUnit::q_power(3, 1), AdicUnit::one(3));
        assert!(AdicUnit::new(0, ModScalar::one(3), Ratio::new(1, 2)).is_err());
        assert!(AdicUnit::new(0, ModScalar::zero(3), Ratio::zero()).is_err());
        assert_eq!(a.pow(3), AdicUnit::one(3));
        assert_eq!(a.mul(&a.inv()), AdicUnit::one(3));
        assert_eq!(a.encode(), "q^0 * 1 * zeta(1/3)");
    }
}
