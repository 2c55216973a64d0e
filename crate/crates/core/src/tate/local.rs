//! The local field `F = F_q((t))`: residue field, truncated elements, test
//! functions and the Fourier transform for the conductor-0 character
//! `θ(x) = ψ(Tr c_{−1}(x))`.

use std::collections::{BTreeMap, HashMap};

use super::field::{CyclotomicField, Field};
use crate::error::{Error, Result};
use crate::scalars::arith::prime_power;
use crate::scalars::ModScalar;

/// `F_q`, realized inside the compatible tower over `F_p`.
#[derive(Clone, Debug)]
pub struct ResidueField {
    p: u64,
    r: u32,
    elems: Vec<ModScalar>,
    log: HashMap<ModScalar, u64>,
}

impl ResidueField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, r) = prime_power(q).ok_or_else(|| Error::Context(format!("q={q} is not a prime power")))?;
        let mut elems = Vec::with_capacity(q as usize);
        for packed in 0..q {
            let digits: Vec<u64> = (0..r).map(|i| packed / p.pow(i) % p).collect();
            elems.push(ModScalar::from_coeffs(p, r, &digits)?);
        }
        let g = ModScalar::generator(p, r)?;
        let mut log = HashMap::new();
        let mut x = ModScalar::one(p);
        for i in 0..q - 1 {
            log.insert(x, i);
            x = x.mul(&g);
        }
        Ok(ResidueField { p, r, elems, log })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.elems.len() as u64
    }

    /// All elements; index 0 is zero.
    pub fn elements(&self) -> &[ModScalar] {
        &self.elems
    }

    /// Discrete logarithm to the fixed generator.
    pub fn log(&self, x: &ModScalar) -> u64 {
        self.log[x]
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, x: &ModScalar) -> u64 {
        let mut acc = ModScalar::zero(self.p);
        let mut y = *x;
        for _ in 0..self.r {
            acc = acc.add(&y);
            y = y.pow(self.p as i64);
        }
        acc.as_prime_field().expect("trace lies in F_p")
    }
}

/// Finite Laurent expansion `Σ c_i t^i` over the residue field.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LocalElem {
    terms: BTreeMap<i64, ModScalar>,
}

impl LocalElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·t^k`.
    pub fn monomial(c: ModScalar, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LocalElem { terms }
    }

    pub fn from_digits(low: i64, digits: &[ModScalar]) -> Self {
        let terms = digits
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (low + i as i64, *c))
            .collect();
        LocalElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, k: i64, p: u64) -> ModScalar {
        self.terms.get(&k).copied().unwrap_or_else(|| ModScalar::zero(p))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            let v = terms.get(k).map(|x| x.add(c)).unwrap_or(*c);
            if v.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, v);
            }
        }
        LocalElem { terms }
    }

    pub fn neg(&self) -> Self {
        LocalElem {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = LocalElem::zero();
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                out = out.add(&LocalElem::monomial(a.mul(b), i + j));
            }
        }
        out
    }

    /// Image in `F / p^m`.
    pub fn truncate(&self, m: i64) -> Self {
        LocalElem {
            terms: self.terms.range(..m).map(|(k, c)| (*k, *c)).collect(),
        }
    }

    /// Whether `self ∈ a + p^m`.
    pub fn in_coset(&self, a: &Self, m: i64) -> bool {
        self.add(&a.neg()).truncate(m).is_zero()
    }

    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let c = if c.degree() > 1 { format!("({})", c.encode()) } else { c.encode() };
                match k {
                    0 => c,
                    _ => format!("{c}*t^{k}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// All classes `x + p^hi` with `x ∈ p^lo`, as digit expansions.
pub fn classes(res: &ResidueField, lo: i64, hi: i64) -> Vec<LocalElem> {
    let mut out = vec![LocalElem::zero()];
    for k in lo..hi {
        out = out
            .into_iter()
            .flat_map(|x| res.elements().iter().map(move |c| x.add(&LocalElem::monomial(*c, k))))
            .collect();
    }
    out
}

/// Additive character `θ(x) = ψ(Tr c_{−1}(x))` as an exponent of `ζ_N`
/// with `N = p(q−1)`.
pub fn theta_exponent(res: &ResidueField, x: &LocalElem) -> i64 {
    let tr = res.trace(&x.coeff(-1, res.p()));
    (tr * (res.q() - 1)) as i64
}

/// `Σ coef·1_{a + p^m}` with `a` reduced mod `p^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct TestFunction<E> {
    pub terms: Vec<(E, LocalElem, i64)>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> TestFunction<E> {
    pub fn indicator<F: Field<E = E>>(f: &F, a: LocalElem, m: i64) -> Self {
        TestFunction {
            terms: vec![(f.one(), a.truncate(m), m)],
        }
    }

    /// Coarsest level at which the function is constant.
    pub fn level(&self) -> i64 {
        self.terms.iter().map(|t| t.2).max().unwrap_or(0)
    }

    /// Lowest valuation met by the support (a lower bound).
    pub fn support_valuation(&self) -> i64 {
        self.terms
            .iter()
            .map(|(_, a, m)| a.valuation().map_or(*m, |v| v.min(*m)))
            .min()
            .unwrap_or(0)
    }

    pub fn eval<F: Field<E = E>>(&self, f: &F, x: &LocalElem) -> E {
        self.terms
            .iter()
            .filter(|(_, a, m)| x.in_coset(a, *m))
            .fold(f.zero(), |acc, (c, _, _)| f.add(&acc, c))
    }

    pub fn describe<F: Field<E = E>>(&self, f: &F) -> String {
        self.terms
            .iter()
            .map(|(c, a, m)| format!("({})*1[{} + p^{m}]", f.encode(c), a.describe()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Closed-form Fourier transform: `1_{a+p^m} ↦ q^{−m}·θ(a·y)·1_{p^{−m}}(y)`,
/// expanded over the classes of `p^{−m}` on which `θ(a·y)` is constant.
pub fn fourier<F: CyclotomicField>(f: &F, res: &ResidueField, phi: &TestFunction<F::E>) -> TestFunction<F::E> {
    let qinv = f.inv(&f.integer(res.q() as i64)).expect("q invertible");
    let mut acc: BTreeMap<(LocalElem, i64), F::E> = BTreeMap::new();
    for (c, a, m) in &phi.terms {
        let scale = f.mul(c, &f.pow(&qinv, *m));
        let top = match a.valuation() {
            None => -m,
            Some(v) => -v,
        };
        for b in classes(res, -m, top) {
            let value = f.mul(&scale, &f.zeta(theta_exponent(res, &a.mul(&b))));
            let slot = acc.entry((b, top)).or_insert_with(|| f.zero());
            *slot = f.add(slot, &value);
        }
    }
    let terms = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).map(|((b, m), c)| (c, b, m)).collect();
    TestFunction { terms }
}

/// Pointwise check of `Φ̂̂(x) = Φ(−x)` on every class of a grid covering
/// both supports and levels.
pub fn fourier_inversion_holds<F: CyclotomicField>(f: &F, res: &ResidueField, phi: &TestFunction<F::E>) -> bool {
    let twice = fourier(f, res, &fourier(f, res, phi));
    let lo = phi.support_valuation().min(twice.support_valuation()) - 1;
    let hi = phi.level().max(twice.level());
    classes(res, lo, hi).iter().all(|x| twice.eval(f, x) == phi.eval(f, &x.neg()))
}

#[cfg(test)]
mod tests {
    use super::super::field::{Cyclotomic, ModField};
    use super::*;

    #[test]
    fn residue_fields() {
        let r = ResidueField::new(4).unwrap();
        assert_eq!(r.elements().len(), 4);
        let traces: Vec<u64> = r.elements().iter().map(|x| r.trace(x)).collect();
        assert_eq!(traces.iter().filter(|&&t| t == 0).count(), 2);
        let r = ResidueField::new(5).unwrap();
        assert_eq!(r.trace(&ModScalar::from_int(5, 3)), 3);
    }

    #[test]
    fn fourier_examples() {
        let res = ResidueField::new(3).unwrap();
        let f = Cyclotomic::new(6);
        let one_o = TestFunction::indicator(&f, LocalElem::zero(), 0);
        assert_eq!(fourier(&f, &res, &one_o), one_o);
        let one_p = TestFunction::indicator(&f, LocalElem::zero(), 1);
        let third = f.inv(&f.integer(3)).unwrap();
        assert_eq!(
            fourier(&f, &res, &one_p),
            TestFunction {
                terms: vec![(third.clone(), LocalElem::zero(), -1)]
            }
        );
        let shifted = TestFunction::indicator(&f, LocalElem::monomial(ModScalar::one(3), 0), 1);
        let hat = fourier(&f, &res, &shifted);
        assert_eq!(hat.terms.len(), 3);
        for (c, b, m) in &hat.terms {
            assert_eq!(*m, 0);
            let tr = res.trace(&b.coeff(-1, 3)) as i64;
            assert_eq!(*c, f.mul(&third, &f.zeta(2 * tr)));
        }
    }

    #[test]
    fn fourier_inversion_on_family() {
        for q in [2u64, 3, 4, 5] {
            let res = ResidueField::new(q).unwrap();
            let f = ModField::new(if q % 7 == 0 { 3 } else { 7 }, res.p() * (q - 1));
            let one = ModScalar::one(res.p());
            for (a, m) in [
                (LocalElem::zero(), 0),
                (LocalElem::zero(), 2),
                (LocalElem::monomial(one, 0), 2),
                (LocalElem::monomial(one, -1), 1),
            ] {
                assert!(fourier_inversion_holds(&f, &res, &TestFunction::indicator(&f, a, m)), "q={q} m={m}");
            }
        }
    }
}
