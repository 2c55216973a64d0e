use super::arith::{is_prime, order_mod_prime, prime_power};
use super::modscalar::ModScalar;
use crate::error::{Error, Result};

/// The pair `(ℓ, q)`: coefficient characteristic and residual cardinality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeContext {
    ell: u64,
    q: u64,
    p: u64,
    q_bar: u64,
    ord_q: u64,
}

impl PrimeContext {
    pub fn new(ell: u64, q: u64) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::Context(format!("ell={ell} is not prime")));
        }
        let (p, _) = prime_power(q).ok_or_else(|| Error::Context(format!("q={q} is not a prime power")))?;
        if p == ell {
            return Err(Error::Context(format!("q={q} is a power of ell={ell}")));
        }
        let q_bar = q % ell;
        Ok(PrimeContext {
            ell,
            q,
            p,
            q_bar,
            ord_q: order_mod_prime(q_bar, ell),
        })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Residue characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q_bar(&self) -> ModScalar {
        ModScalar::from_int(self.ell, self.q_bar as i64)
    }

    /// Multiplicative order of `q` modulo `ℓ`.
    pub fn ord_q(&self) -> u64 {
        self.ord_q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_inputs() {
        assert!(PrimeContext::new(4, 3).is_err());
        assert!(PrimeContext::new(3, 6).is_err());
        assert!(PrimeContext::new(3, 9).is_err());
        let c = PrimeContext::new(7, 2).unwrap();
        assert_eq!(c.ord_q(), 3);
        assert_eq!(PrimeContext::new(3, 4).unwrap().ord_q(), 1);
        assert_eq!(PrimeContext::new(5, 4).unwrap().p(), 2);
    }
}
