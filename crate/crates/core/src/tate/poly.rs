//! Dense and Laurent polynomials over a [`Field`], rational functions and
//! Berlekamp–Massey.

use super::field::Field;

/// Dense polynomial, lowest degree first, no trailing zeros.
pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut p: Poly<F::E>) -> Poly<F::E> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn add<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Poly<F::E> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, c: &F::E, a: &[F::E]) -> Poly<F::E> {
    trim(f, a.iter().map(|x| f.mul(c, x)).collect())
}

pub fn sub<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Poly<F::E> {
    add(f, a, &scale(f, &f.integer(-1), b))
}

pub fn mul<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Poly<F::E> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

/// Euclidean division; `b` must be nonzero.
pub fn divrem<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> (Poly<F::E>, Poly<F::E>) {
    let b = trim(f, b.to_vec());
    let lead = f.inv(b.last().expect("division by zero polynomial")).expect("nonzero lead");
    let mut r = trim(f, a.to_vec());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &lead);
        for (i, y) in b.iter().enumerate() {
            r[i + shift] = f.sub(&r[i + shift], &f.mul(&c, y));
        }
        q[shift] = c;
        r.pop();
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn monic<F: Field>(f: &F, a: &[F::E]) -> Poly<F::E> {
    match a.last() {
        None => vec![],
        Some(l) => scale(f, &f.inv(l).expect("nonzero"), a),
    }
}

/// `(g, s, t)` with `s·a + t·b = g`.
pub type Xgcd<E> = (Poly<E>, Poly<E>, Poly<E>);

/// Extended GCD; `g` is monic, or zero when both inputs are zero.
pub fn xgcd<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Xgcd<F::E> {
    let (mut r0, mut r1) = (trim(f, a.to_vec()), trim(f, b.to_vec()));
    let (mut s0, mut s1) = (vec![f.one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    match r0.last() {
        None => (vec![], vec![], vec![]),
        Some(l) => {
            let c = f.inv(l).expect("nonzero");
            (scale(f, &c, &r0), scale(f, &c, &s0), scale(f, &c, &t0))
        }
    }
}

/// Minimal linear recurrence: returns `(C, L)` with `C(0) = 1`, `deg C ≤ L`
/// and `Σ_{i=0}^{L} C_i s_{n−i} = 0` for all `n ≥ L`.
pub fn berlekamp_massey<F: Field>(f: &F, s: &[F::E]) -> (Poly<F::E>, usize) {
    let mut c = vec![f.one()];
    let mut b = vec![f.one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = f.one();
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l.min(c.len().saturating_sub(1)) {
            d = f.add(&d, &f.mul(&c[i], &s[n - i]));
        }
        if f.is_zero(&d) {
            m += 1;
            continue;
        }
        let coef = f.div(&d, &bd).expect("nonzero discrepancy base");
        let mut shifted = vec![f.zero(); m];
        shifted.extend(b.iter().cloned());
        let next = sub(f, &c, &scale(f, &coef, &shifted));
        if 2 * l <= n {
            b = c;
            l = n + 1 - l;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
        c = next;
    }
    (trim(f, c), l)
}

/// Laurent polynomial `X^low · Σ coeffs[i] X^i` with nonzero end coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<E> {
    pub low: i64,
    pub coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Laurent<E> {
    pub fn normalize<F: Field<E = E>>(f: &F, low: i64, coeffs: Vec<E>) -> Self {
        let coeffs = trim(f, coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| f.is_zero(c)).count();
        if lead_zeros == coeffs.len() {
            return Laurent { low: 0, coeffs: vec![] };
        }
        Laurent {
            low: low + lead_zeros as i64,
            coeffs: coeffs[lead_zeros..].to_vec(),
        }
    }

    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: vec![] }
    }

    pub fn constant<F: Field<E = E>>(f: &F, c: E) -> Self {
        Self::normalize(f, 0, vec![c])
    }

    pub fn monomial<F: Field<E = E>>(f: &F, c: E, k: i64) -> Self {
        Self::normalize(f, k, vec![c])
    }

    /// `1 − αX`.
    pub fn one_minus<F: Field<E = E>>(f: &F, alpha: &E) -> Self {
        Self::normalize(f, 0, vec![f.one(), f.neg(alpha)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff<F: Field<E = E>>(&self, f: &F, k: i64) -> E {
        if k < self.low || k > self.high() {
            f.zero()
        } else {
            self.coeffs[(k - self.low) as usize].clone()
        }
    }

    pub fn add<F: Field<E = E>>(&self, f: &F, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let coeffs = (low..=high).map(|k| f.add(&self.coeff(f, k), &o.coeff(f, k))).collect();
        Self::normalize(f, low, coeffs)
    }

    pub fn scale<F: Field<E = E>>(&self, f: &F, c: &E) -> Self {
        Self::normalize(f, self.low, self.coeffs.iter().map(|x| f.mul(c, x)).collect())
    }

    pub fn sub<F: Field<E = E>>(&self, f: &F, o: &Self) -> Self {
        self.add(f, &o.scale(f, &f.integer(-1)))
    }

    pub fn mul<F: Field<E = E>>(&self, f: &F, o: &Self) -> Self {
        Self::normalize(f, self.low + o.low, mul(f, &self.coeffs, &o.coeffs))
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exact quotient in `F[X^{±1}]`, if any.
    pub fn div_exact<F: Field<E = E>>(&self, f: &F, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let (q, r) = divrem(f, &self.coeffs, &o.coeffs);
        r.is_empty().then(|| Self::normalize(f, self.low - o.low, q))
    }

    /// `X ↦ c·X^{-1}`.
    pub fn substitute_inverse<F: Field<E = E>>(&self, f: &F, c: &E) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let high = self.high();
        let coeffs = (0..self.coeffs.len()).map(|i| {
            let k = high - i as i64;
            f.mul(&self.coeff(f, k), &f.pow(c, k))
        });
        Self::normalize(f, -high, coeffs.collect())
    }

    /// `Some((c, k))` when this is the monomial `c·X^k`.
    pub fn as_monomial(&self) -> Option<(E, i64)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0].clone(), self.low))
    }

    pub fn encode<F: Field<E = E>>(&self, f: &F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(i, c)| {
                let k = self.low + i as i64;
                let c = f.encode(c);
                match k {
                    0 => format!("({c})"),
                    1 => format!("({c})X"),
                    _ => format!("({c})X^{k}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// Monic gcd in `F[X^{±1}]`, normalized to constant term 1 when possible.
pub fn laurent_gcd<F: Field>(f: &F, a: &Laurent<F::E>, b: &Laurent<F::E>) -> Laurent<F::E> {
    let (g, _, _) = xgcd(f, &a.coeffs, &b.coeffs);
    normalize_constant(f, Laurent::normalize(f, 0, g))
}

/// Scales so the lowest coefficient is 1 and shifts to start at `X^0`.
pub fn normalize_constant<F: Field>(f: &F, a: Laurent<F::E>) -> Laurent<F::E> {
    match a.coeffs.first() {
        None => a,
        Some(c) => Laurent {
            low: 0,
            coeffs: a.coeffs.iter().map(|x| f.div(x, c).expect("nonzero")).collect(),
        },
    }
}

/// Rational function `num/den` with Laurent numerator and denominator.
#[derive(Clone, Debug)]
pub struct Rational<E> {
    pub num: Laurent<E>,
    pub den: Laurent<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Rational<E> {
    pub fn new(num: Laurent<E>, den: Laurent<E>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational { num, den }
    }

    pub fn from_laurent<F: Field<E = E>>(f: &F, p: Laurent<E>) -> Self {
        Rational {
            num: p,
            den: Laurent::constant(f, f.one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul<F: Field<E = E>>(&self, f: &F, o: &Self) -> Self {
        Rational {
            num: self.num.mul(f, &o.num),
            den: self.den.mul(f, &o.den),
        }
    }

    pub fn div<F: Field<E = E>>(&self, f: &F, o: &Self) -> Self {
        Rational::new(self.num.mul(f, &o.den), self.den.mul(f, &o.num))
    }

    pub fn same<F: Field<E = E>>(&self, f: &F, o: &Self) -> bool {
        self.num.mul(f, &o.den) == o.num.mul(f, &self.den)
    }

    pub fn substitute_inverse<F: Field<E = E>>(&self, f: &F, c: &E) -> Self {
        Rational {
            num: self.num.substitute_inverse(f, c),
            den: self.den.substitute_inverse(f, c),
        }
    }

    /// `Some((c, k))` when this equals `c·X^k`.
    pub fn as_monomial<F: Field<E = E>>(&self, f: &F) -> Option<(E, i64)> {
        let q = self.num.div_exact(f, &self.den)?;
        q.as_monomial()
    }

    pub fn map<G: Field>(&self, g: &G, h: impl Fn(&E) -> Option<G::E>) -> Option<Rational<G::E>> {
        let conv = |p: &Laurent<E>| -> Option<Laurent<G::E>> {
            let coeffs = p.coeffs.iter().map(&h).collect::<Option<Vec<_>>>()?;
            Some(Laurent::normalize(g, p.low, coeffs))
        };
        let den = conv(&self.den)?;
        (!den.is_zero()).then_some(())?;
        Some(Rational { num: conv(&self.num)?, den })
    }

    pub fn encode<F: Field<E = E>>(&self, f: &F) -> String {
        format!("[{}] / [{}]", self.num.encode(f), self.den.encode(f))
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::{ModField, Rationals};
    use super::*;
    use crate::scalars::ModScalar;

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|&x| Rationals.integer(x)).collect()
    }

    #[test]
    fn division_and_gcd() {
        let f = Rationals;
        let a = mul(&f, &q(&[1, 1]), &q(&[2, 0, 1]));
        let (qq, r) = divrem(&f, &a, &q(&[1, 1]));
        assert_eq!((qq, r), (q(&[2, 0, 1]), vec![]));
        let (g, s, t) = xgcd(&f, &mul(&f, &q(&[1, 1]), &q(&[3, 1])), &mul(&f, &q(&[1, 1]), &q(&[5, 1])));
        assert_eq!(g, q(&[1, 1]));
        let comb = add(
            &f,
            &mul(&f, &s, &mul(&f, &q(&[1, 1]), &q(&[3, 1]))),
            &mul(&f, &t, &mul(&f, &q(&[1, 1]), &q(&[5, 1]))),
        );
        assert_eq!(comb, g);
    }

    #[test]
    fn berlekamp_massey_finds_geometric_tail() {
        let f = ModField::new(7, 2);
        let s: Vec<ModScalar> = [5, 1, 3, 2, 6, 4, 5, 1].iter().map(|&x| f.integer(x)).collect();
        let (c, l) = berlekamp_massey(&f, &s);
        assert_eq!(l, 1);
        assert_eq!(c, vec![f.one(), f.integer(-3)]);
        let s: Vec<ModScalar> = [4, 1, 1, 1, 1, 1].iter().map(|&x| f.integer(x)).collect();
        let (c, l) = berlekamp_massey(&f, &s);
        assert_eq!((c, l), (vec![f.one(), f.integer(-1)], 2));
        let (c, l) = berlekamp_massey(&f, &[f.zero(); 5]);
        assert_eq!((c, l), (vec![f.one()], 0));
    }

    #[test]
    fn laurent_substitution_is_an_involution() {
        let f = Rationals;
        let p = Laurent::normalize(&f, -2, q(&[1, 0, 3, 4]));
        let c = f.integer(2).recip();
        let back = p.substitute_inverse(&f, &c).substitute_inverse(&f, &c);
        assert_eq!(back, p);
        assert_eq!(p.high(), 1);
    }
}
