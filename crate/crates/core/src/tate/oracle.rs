//! Literal GL₁ × GL₁ zeta integrals over `F_q((t))`.

use super::field::CyclotomicField;
use super::local::{classes, fourier, LocalElem, ResidueField, TestFunction};
use super::poly::{berlekamp_massey, mul, normalize_constant, xgcd, Laurent, Rational};
use crate::error::{Error, Result};
use crate::scalars::ModScalar;

/// Tame character `x ↦ u^{v(x)}·η_j(ac(x))` with `η_j(g^i) = ζ_{q−1}^{ij}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<E> {
    pub u: E,
    pub j: i64,
}

/// Coefficient field, residue field and precision `M`.
#[derive(Clone, Debug)]
pub struct Model<F> {
    pub field: F,
    pub res: ResidueField,
    pub precision: i64,
}

impl<F: CyclotomicField> Model<F> {
    pub fn new(field: F, q: u64, precision: i64) -> Result<Self> {
        let res = ResidueField::new(q)?;
        if field.zeta_order() != res.p() * (q - 1) {
            return Err(Error::Context(format!(
                "coefficient field must contain ζ_N with N = p(q−1) = {}",
                res.p() * (q - 1)
            )));
        }
        Ok(Model { field, res, precision })
    }

    pub fn q(&self) -> u64 {
        self.res.q()
    }

    fn q_elem(&self) -> F::E {
        self.field.integer(self.q() as i64)
    }

    pub fn product(&self, a: &Character<F::E>, b: &Character<F::E>) -> Character<F::E> {
        Character {
            u: self.field.mul(&a.u, &b.u),
            j: (a.j + b.j).rem_euclid(self.q() as i64 - 1),
        }
    }

    pub fn inverse(&self, a: &Character<F::E>) -> Character<F::E> {
        Character {
            u: self.field.inv(&a.u).expect("unit"),
            j: (-a.j).rem_euclid(self.q() as i64 - 1),
        }
    }

    /// Exponent of `ζ_N` giving `η_j(c)`.
    fn eta_exponent(&self, j: i64, c: &ModScalar) -> usize {
        let n = self.field.zeta_order() as i64;
        (self.res.p() as i64 * j * self.res.log(c) as i64).rem_euclid(n) as usize
    }

    /// The spanning family: `1_{p^m}` for `m ∈ {−1,0,1,2}`, `1_{1+p^m}` for
    /// `m ∈ {1,2}` and `1_{a+p}` for `a ∈ F_q^×`.
    pub fn family(&self) -> Vec<(String, TestFunction<F::E>)> {
        let f = &self.field;
        let mut out = Vec::new();
        for m in -1..=2 {
            out.push((format!("1[p^{m}]"), TestFunction::indicator(f, LocalElem::zero(), m)));
        }
        let one = ModScalar::one(self.res.p());
        for m in 1..=2 {
            out.push((format!("1[1 + p^{m}]"), TestFunction::indicator(f, LocalElem::monomial(one, 0), m)));
        }
        for a in self.res.elements().iter().skip(1).filter(|a| !a.is_one()) {
            out.push((
                format!("1[{} + p]", a.encode()),
                TestFunction::indicator(f, LocalElem::monomial(*a, 0), 1),
            ));
        }
        out
    }
}

/// `c_k = ∫_{v(x)=k} χχ′(x)Φ(x) d^×x`, summed literally over the classes of
/// the shell modulo `p^L`, `L = max(level(Φ), k+1)`, each of volume
/// `q^{1−(L−k)}`.
pub fn shell_coefficient<F: CyclotomicField>(
    model: &Model<F>,
    chi: &Character<F::E>,
    chi2: &Character<F::E>,
    phi: &TestFunction<F::E>,
    k: i64,
) -> Result<F::E> {
    let f = &model.field;
    if k.abs() > model.precision {
        return Err(Error::Window(format!("shell {k} is outside the precision window ±{}", model.precision)));
    }
    if k < phi.support_valuation() {
        return Ok(f.zero());
    }
    let prod = model.product(chi, chi2);
    let level = phi.level().max(k + 1);
    let n = f.zeta_order() as usize;
    let mut counts = vec![vec![0i64; n]; phi.terms.len()];
    for c0 in model.res.elements().iter().skip(1) {
        let e = model.eta_exponent(prod.j, c0);
        let lead = LocalElem::monomial(*c0, k);
        for tail in classes(&model.res, k + 1, level) {
            let x = lead.add(&tail);
            for (i, (_, a, m)) in phi.terms.iter().enumerate() {
                if x.in_coset(a, *m) {
                    counts[i][e] += 1;
                }
            }
        }
    }
    let sum = phi
        .terms
        .iter()
        .zip(&counts)
        .fold(f.zero(), |acc, ((c, _, _), cnt)| f.add(&acc, &f.mul(c, &f.zeta_sum(cnt))));
    let vol = f.pow(&model.q_elem(), 1 + k - level);
    Ok(f.mul(&f.mul(&sum, &vol), &f.pow(&prod.u, k)))
}

/// A window of `I(X) = Σ c_k X^k` certified as a rational function.
#[derive(Clone, Debug)]
pub struct Series<E> {
    pub kmin: i64,
    pub coeffs: Vec<E>,
    pub recurrence_len: usize,
    pub rational: Rational<E>,
}

/// Shell coefficients for `k` from the support valuation up to `M`, with a
/// Berlekamp–Massey certificate that the series is `X^{k0}P(X)/(1−uu′X)^e`.
pub fn rs_series<F: CyclotomicField>(
    model: &Model<F>,
    chi: &Character<F::E>,
    chi2: &Character<F::E>,
    phi: &TestFunction<F::E>,
) -> Result<Series<F::E>> {
    let f = &model.field;
    let kmin = phi.support_valuation();
    let coeffs = (kmin..=model.precision)
        .map(|k| shell_coefficient(model, chi, chi2, phi, k))
        .collect::<Result<Vec<_>>>()?;
    let (c, l) = berlekamp_massey(f, &coeffs);
    if coeffs.len() < 2 * l + 4 {
        return Err(Error::Window(format!(
            "window of {} coefficients cannot certify a recurrence of length {l}",
            coeffs.len()
        )));
    }
    let alpha = model.product(chi, chi2).u;
    let expected = [vec![f.one()], vec![f.one(), f.neg(&alpha)]];
    if !expected.contains(&c) {
        return Err(Error::Certification(format!("series denominator {:?} is not 1 or 1 − uu′X", c)));
    }
    let mut p = mul(f, &c, &coeffs);
    p.truncate(l);
    let rational = Rational::new(Laurent::normalize(f, kmin, p), Laurent::normalize(f, 0, c));
    Ok(Series {
        kmin,
        coeffs,
        recurrence_len: l,
        rational,
    })
}

/// Per-`Φ` evidence in the ideal computation.
#[derive(Clone, Debug)]
pub struct PhiRecord<E> {
    pub name: String,
    pub series: Series<E>,
    /// `I_Φ / L` as a Laurent polynomial.
    pub quotient: Laurent<E>,
    /// Coefficient of `I_Φ` in the combination attaining `L`.
    pub combination: Laurent<E>,
}

/// Certified generator `L = 1/(1 − αX)` or `1` of the ideal spanned by the
/// family of zeta integrals.
#[derive(Clone, Debug)]
pub struct IdealCertificate<E> {
    pub alpha: Option<E>,
    pub records: Vec<PhiRecord<E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> IdealCertificate<E> {
    pub fn l_rational<F: CyclotomicField<E = E>>(&self, f: &F) -> Rational<E> {
        let one = Laurent::constant(f, f.one());
        match &self.alpha {
            None => Rational::new(one.clone(), one),
            Some(a) => Rational::new(one, Laurent::one_minus(f, a)),
        }
    }
}

pub fn tate_l_via_ideal<F: CyclotomicField>(model: &Model<F>, chi: &Character<F::E>, chi2: &Character<F::E>) -> Result<IdealCertificate<F::E>> {
    let f = &model.field;
    let family = model.family();
    let series = family
        .iter()
        .map(|(_, phi)| rs_series(model, chi, chi2, phi))
        .collect::<Result<Vec<_>>>()?;
    let one = Laurent::constant(f, f.one());
    let d = series
        .iter()
        .map(|s| s.rational.den.clone())
        .find(|den| *den != one)
        .unwrap_or(one.clone());
    let scaled: Vec<Laurent<F::E>> = series
        .iter()
        .map(|s| s.rational.num.mul(f, &d.div_exact(f, &s.rational.den).expect("denominators divide D")))
        .collect();

    let mut g: Vec<F::E> = vec![];
    let mut comb: Vec<Vec<F::E>> = vec![vec![]; scaled.len()];
    for (i, m) in scaled.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let (g2, s, t) = xgcd(f, &g, &m.coeffs);
        for c in comb.iter_mut().take(i) {
            *c = mul(f, c, &s);
        }
        comb[i] = t;
        g = g2;
    }
    if g.is_empty() {
        return Err(Error::Certification("every zeta integral in the family vanishes".into()));
    }
    let c0 = f.inv(&g[0]).expect("gcd has nonzero constant term");
    let gen = normalize_constant(f, Laurent::normalize(f, 0, g));
    let h = d
        .div_exact(f, &gen)
        .ok_or_else(|| Error::Certification("ideal generator does not divide the common denominator".into()))?;
    let alpha = match h.coeffs.len() {
        1 => None,
        2 => Some(f.neg(&h.coeffs[1])),
        _ => return Err(Error::Certification("ideal generator is not an Euler factor".into())),
    };

    let mut records = Vec::new();
    let mut attained = Rational::from_laurent(f, Laurent::zero());
    for (((name, _), s), (m, c)) in family.into_iter().zip(series).zip(scaled.iter().zip(comb)) {
        let quotient = m
            .div_exact(f, &gen)
            .ok_or_else(|| Error::Certification(format!("I_{name} is not in L·R[X^±1]")))?;
        let combination = Laurent::normalize(f, -m.low, c).scale(f, &c0);
        let term = s.rational.mul(f, &Rational::from_laurent(f, combination.clone()));
        attained = Rational::new(
            attained.num.mul(f, &term.den).add(f, &term.num.mul(f, &attained.den)),
            attained.den.mul(f, &term.den),
        );
        records.push(PhiRecord {
            name,
            series: s,
            quotient,
            combination,
        });
    }
    let cert = IdealCertificate { alpha, records };
    if !attained.same(f, &cert.l_rational(f)) {
        return Err(Error::Certification("the explicit combination does not attain L".into()));
    }
    Ok(cert)
}

/// Extracted `ε = c·X^k` and its per-`Φ` consistency.
#[derive(Clone, Debug)]
pub struct EpsilonReport<E> {
    pub epsilon: Option<(E, i64)>,
    pub per_phi: Vec<(String, Option<(E, i64)>)>,
    pub consistent: bool,
}

/// `ε = I(q^{−1}X^{−1}, χ^{−1}, χ′^{−1}, Φ̂)·L(X) / (I(X, χ, χ′, Φ)·L^∨(q^{−1}X^{−1}))`
/// for every `Φ` in the family with `I(X, Φ) ≠ 0`.
pub fn epsilon_extract<F: CyclotomicField>(model: &Model<F>, chi: &Character<F::E>, chi2: &Character<F::E>) -> Result<EpsilonReport<F::E>> {
    let f = &model.field;
    let (d1, d2) = (model.inverse(chi), model.inverse(chi2));
    let qinv = f.inv(&model.q_elem()).expect("q invertible");
    let l = tate_l_via_ideal(model, chi, chi2)?.l_rational(f);
    let ld = tate_l_via_ideal(model, &d1, &d2)?.l_rational(f).substitute_inverse(f, &qinv);
    let mut per_phi = Vec::new();
    let mut consistent = true;
    for (name, phi) in model.family() {
        let r = rs_series(model, chi, chi2, &phi)?.rational;
        let rd = rs_series(model, &d1, &d2, &fourier(f, &model.res, &phi))?
            .rational
            .substitute_inverse(f, &qinv);
        if r.is_zero() {
            consistent &= rd.is_zero();
            continue;
        }
        let eps = rd.mul(f, &l).div(f, &r.mul(f, &ld)).as_monomial(f);
        consistent &= eps.is_some();
        per_phi.push((name, eps));
    }
    let epsilon = per_phi.first().and_then(|(_, e)| e.clone());
    consistent &= epsilon.is_some() && per_phi.iter().all(|(_, e)| *e == epsilon);
    Ok(EpsilonReport {
        epsilon,
        per_phi,
        consistent,
    })
}

/// `γ = ε·L^∨(q^{−1}X^{−1})/L(X)` from an ε report.
pub fn gamma_rational<F: CyclotomicField>(
    model: &Model<F>,
    chi: &Character<F::E>,
    chi2: &Character<F::E>,
    eps: &(F::E, i64),
) -> Result<Rational<F::E>> {
    let f = &model.field;
    let qinv = f.inv(&model.q_elem()).expect("q invertible");
    let l = tate_l_via_ideal(model, chi, chi2)?.l_rational(f);
    let ld = tate_l_via_ideal(model, &model.inverse(chi), &model.inverse(chi2))?
        .l_rational(f)
        .substitute_inverse(f, &qinv);
    let e = Rational::from_laurent(f, Laurent::monomial(f, eps.0.clone(), eps.1));
    Ok(e.mul(f, &ld).div(f, &l))
}

#[cfg(test)]
mod tests {
    use super::super::field::{Cyclotomic, Field, ModField};
    use super::*;

    fn triv<F: Field>(f: &F) -> Character<F::E> {
        Character { u: f.one(), j: 0 }
    }

    #[test]
    fn shell_examples() {
        let m = Model::new(Cyclotomic::new(2), 2, 20).unwrap();
        let f = &m.field;
        let one_o = TestFunction::indicator(f, LocalElem::zero(), 0);
        for k in 0..5 {
            assert_eq!(shell_coefficient(&m, &triv(f), &triv(f), &one_o, k).unwrap(), f.one());
        }
        assert_eq!(shell_coefficient(&m, &triv(f), &triv(f), &one_o, -1).unwrap(), f.zero());
        assert!(shell_coefficient(&m, &triv(f), &triv(f), &one_o, 21).is_err());

        let m = Model::new(ModField::new(2, 6), 3, 20).unwrap();
        let f = &m.field;
        let one_o = TestFunction::indicator(f, LocalElem::zero(), 0);
        assert!(f.is_zero(&shell_coefficient(&m, &triv(f), &triv(f), &one_o, 0).unwrap()));

        let m = Model::new(Cyclotomic::new(6), 3, 20).unwrap();
        let f = &m.field;
        let one_o = TestFunction::indicator(f, LocalElem::zero(), 0);
        let eta = Character { u: f.one(), j: 1 };
        for k in 0..4 {
            assert_eq!(shell_coefficient(&m, &eta, &triv(f), &one_o, k).unwrap(), f.zero());
        }
    }

    #[test]
    fn series_examples() {
        let m = Model::new(Cyclotomic::new(2), 2, 20).unwrap();
        let f = &m.field;
        let s = rs_series(&m, &triv(f), &triv(f), &TestFunction::indicator(f, LocalElem::zero(), 0)).unwrap();
        let geometric = Rational::new(Laurent::constant(f, f.one()), Laurent::one_minus(f, &f.one()));
        assert!(s.rational.same(f, &geometric));
        let unit = TestFunction::indicator(f, LocalElem::monomial(ModScalar::one(2), 0), 1);
        let s = rs_series(&m, &triv(f), &triv(f), &unit).unwrap();
        assert!(s.rational.same(f, &Rational::from_laurent(f, Laurent::constant(f, f.one()))));

        let m = Model::new(ModField::new(2, 6), 3, 20).unwrap();
        let f = &m.field;
        let s = rs_series(&m, &triv(f), &triv(f), &TestFunction::indicator(f, LocalElem::zero(), 0)).unwrap();
        assert!(s.rational.is_zero());
    }

    #[test]
    fn ideal_examples() {
        let m = Model::new(Cyclotomic::new(2), 2, 20).unwrap();
        let f = &m.field;
        let cert = tate_l_via_ideal(&m, &triv(f), &triv(f)).unwrap();
        assert_eq!(cert.alpha, Some(f.one()));

        let m = Model::new(ModField::new(2, 6), 3, 20).unwrap();
        let f = &m.field;
        assert_eq!(tate_l_via_ideal(&m, &triv(f), &triv(f)).unwrap().alpha, None);

        let m = Model::new(Cyclotomic::new(6), 3, 20).unwrap();
        let f = &m.field;
        let eta = Character { u: f.one(), j: 1 };
        assert_eq!(tate_l_via_ideal(&m, &eta, &triv(f)).unwrap().alpha, None);
        assert_eq!(tate_l_via_ideal(&m, &eta, &eta).unwrap().alpha, Some(f.one()));
    }

    #[test]
    fn epsilon_examples() {
        let m = Model::new(Cyclotomic::new(2), 2, 20).unwrap();
        let f = &m.field;
        let rep = epsilon_extract(&m, &triv(f), &triv(f)).unwrap();
        assert!(rep.consistent);
        assert_eq!(rep.epsilon, Some((f.one(), 0)));

        let m = Model::new(Cyclotomic::new(6), 3, 20).unwrap();
        let f = &m.field;
        let eta = Character { u: f.one(), j: 1 };
        let rep = epsilon_extract(&m, &eta, &triv(f)).unwrap();
        assert!(rep.consistent);
        let (c, _) = rep.epsilon.unwrap();
        assert_ne!(c, f.one());
    }
}
