//! Euler factors in inverse-root form and γ-classes modulo units.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{roots_of_unity_in_world, ModScalar, PrimeContext, Scalar, World};

/// Multiset of nonzero scalars.
pub type Roots = BTreeMap<Scalar, u64>;

fn check_world(a: World, b: World, what: &str) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::WorldMismatch(format!("{what}: {a} vs {b}")))
    }
}

fn union(a: &Roots, b: &Roots) -> Roots {
    let mut out = a.clone();
    for (r, m) in b {
        *out.entry(*r).or_insert(0) += m;
    }
    out
}

fn intersection(a: &Roots, b: &Roots) -> Roots {
    a.iter().filter_map(|(r, m)| b.get(r).map(|n| (*r, *m.min(n)))).collect()
}

fn included(a: &Roots, b: &Roots) -> bool {
    a.iter().all(|(r, m)| b.get(r).is_some_and(|n| n >= m))
}

fn map_roots(a: &Roots, f: impl Fn(&Scalar) -> Scalar) -> Roots {
    let mut out = Roots::new();
    for (r, m) in a {
        *out.entry(f(r)).or_insert(0) += m;
    }
    out
}

fn sorted_by_encoding(a: &Roots) -> Vec<(String, u64)> {
    let mut v: Vec<(String, u64)> = a.iter().map(|(r, m)| (r.encode(), *m)).collect();
    v.sort();
    v
}

/// `L(X) = ∏_{α} (1 − αX)^{-1}` stored as the multiset of inverse roots `α`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EulerFactor {
    world: World,
    roots: Roots,
}

impl EulerFactor {
    /// The factor 1.
    pub fn one(world: World) -> Self {
        EulerFactor { world, roots: Roots::new() }
    }

    pub fn from_roots(world: World, roots: impl IntoIterator<Item = Scalar>) -> Result<Self> {
        let mut out = Self::one(world);
        for r in roots {
            check_world(world, r.world(), "root of Euler factor")?;
            *out.roots.entry(r).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// `1/(1 − (cX)^f)` split into linear factors.
    pub fn from_pole_family(c: &Scalar, f: u64, ctx: &PrimeContext) -> Result<Self> {
        let zetas = roots_of_unity_in_world(c.world(), ctx, f)?;
        Self::from_roots(c.world(), zetas.iter().map(|z| z.mul(c)))
    }

    pub fn world(&self) -> World {
        self.world
    }

    pub fn roots(&self) -> &Roots {
        &self.roots
    }

    /// Number of inverse roots with multiplicity (degree of `1/L`).
    pub fn degree(&self) -> u64 {
        self.roots.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_world(self.world, o.world, "ef_mul")?;
        Ok(EulerFactor {
            world: self.world,
            roots: union(&self.roots, &o.roots),
        })
    }

    /// Largest Euler factor dividing both.
    pub fn gcd(&self, o: &Self) -> Result<Self> {
        check_world(self.world, o.world, "ef_gcd")?;
        Ok(EulerFactor {
            world: self.world,
            roots: intersection(&self.roots, &o.roots),
        })
    }

    /// Whether `self` divides `o`, i.e. `1/o` divides `1/self` as polynomials.
    pub fn divides(&self, o: &Self) -> Result<bool> {
        check_world(self.world, o.world, "ef_divides")?;
        Ok(included(&self.roots, &o.roots))
    }

    /// `L(q^{-1}X^{-1})` up to a unit: `β ↦ qβ^{-1}`.
    pub fn dual_substitute(&self, ctx: &PrimeContext) -> Self {
        let q = Scalar::q_power(self.world, ctx, 1);
        EulerFactor {
            world: self.world,
            roots: map_roots(&self.roots, |b| q.mul(&b.inv())),
        }
    }

    /// Reduction modulo ℓ of an ℓ-adic factor.
    pub fn reduce(&self, ctx: &PrimeContext) -> Result<Self> {
        check_world(World::LAdic, self.world, "ef_reduce expects an l-adic factor")?;
        Ok(EulerFactor {
            world: World::ModL,
            roots: map_roots(&self.roots, |r| Scalar::Mod(r.reduce(ctx))),
        })
    }

    /// `L(uX)`: every inverse root multiplied by `u`.
    pub fn scale(&self, u: &Scalar) -> Result<Self> {
        check_world(self.world, u.world(), "ef_scale")?;
        Ok(EulerFactor {
            world: self.world,
            roots: map_roots(&self.roots, |r| r.mul(u)),
        })
    }

    /// Canonical serialization: encoded roots with multiplicities, sorted.
    pub fn root_list(&self) -> Vec<(String, u64)> {
        sorted_by_encoding(&self.roots)
    }

    /// `1/P(X)` with `P` expanded (mod-ℓ) or as a product of linear factors
    /// (ℓ-adic, where coefficients leave the modelled unit group).
    pub fn render(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        match self.world {
            World::ModL => format!("1/({})", render_mod_polynomial(&self.expand_mod())),
            World::LAdic => {
                let factors: String = self
                    .root_list()
                    .into_iter()
                    .map(|(r, m)| if m == 1 { format!("(1 - [{r}]X)") } else { format!("(1 - [{r}]X)^{m}") })
                    .collect();
                format!("1/({factors})")
            }
        }
    }

    /// Coefficients of `1/L = ∏(1 − αX)` in a mod-ℓ world.
    pub fn expand_mod(&self) -> Vec<ModScalar> {
        let ell = self.roots.keys().next().map(|r| r.ell()).unwrap_or(2);
        let mut p = vec![ModScalar::one(ell)];
        for (r, m) in &self.roots {
            let a = r.as_mod().expect("mod-l root");
            for _ in 0..*m {
                let mut next = p.clone();
                next.push(ModScalar::zero(ell));
                for (i, c) in p.iter().enumerate() {
                    next[i + 1] = next[i + 1].sub(&c.mul(&a));
                }
                p = next;
            }
        }
        p
    }
}

fn render_mod_polynomial(coeffs: &[ModScalar]) -> String {
    let mut s = String::from("1");
    for (k, c) in coeffs.iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let a = c.neg();
        let xk = if k == 1 { "X".to_string() } else { format!("X^{k}") };
        let coef = if a.is_one() {
            String::new()
        } else if a.degree() > 1 {
            format!("({})", a.encode())
        } else {
            a.encode()
        };
        s.push_str(&format!(" - {coef}{xk}"));
    }
    s
}

impl fmt::Debug for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.world, self.render())
    }
}

impl fmt::Display for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A γ-factor modulo units `cX^k`: reduced pair of inverse-root multisets,
/// standing for `∏_{num}(1 − αX)^{-1} / ∏_{den}(1 − βX)^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GammaClass {
    world: World,
    num: Roots,
    den: Roots,
}

impl GammaClass {
    /// Class of `num/den` with common roots cancelled.
    pub fn make(num: &EulerFactor, den: &EulerFactor) -> Result<Self> {
        check_world(num.world, den.world, "gamma_make")?;
        Ok(Self::reduced(num.world, num.roots.clone(), den.roots.clone()))
    }

    pub fn unit(world: World) -> Self {
        GammaClass {
            world,
            num: Roots::new(),
            den: Roots::new(),
        }
    }

    fn reduced(world: World, mut num: Roots, mut den: Roots) -> Self {
        let common = intersection(&num, &den);
        for (r, m) in common {
            for side in [&mut num, &mut den] {
                let e = side.get_mut(&r).unwrap();
                *e -= m;
                if *e == 0 {
                    side.remove(&r);
                }
            }
        }
        GammaClass { world, num, den }
    }

    pub fn world(&self) -> World {
        self.world
    }

    pub fn num(&self) -> &Roots {
        &self.num
    }

    pub fn den(&self) -> &Roots {
        &self.den
    }

    pub fn is_unit(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_world(self.world, o.world, "gamma_mul")?;
        Ok(Self::reduced(self.world, union(&self.num, &o.num), union(&self.den, &o.den)))
    }

    pub fn reduce_modl(&self, ctx: &PrimeContext) -> Result<Self> {
        check_world(World::LAdic, self.world, "gamma_reduce_modl expects an l-adic class")?;
        let red = |r: &Scalar| Scalar::Mod(r.reduce(ctx));
        Ok(Self::reduced(World::ModL, map_roots(&self.num, red), map_roots(&self.den, red)))
    }

    pub fn num_list(&self) -> Vec<(String, u64)> {
        sorted_by_encoding(&self.num)
    }

    pub fn den_list(&self) -> Vec<(String, u64)> {
        sorted_by_encoding(&self.den)
    }

    /// Rendered as a quotient of Euler factors.
    pub fn render(&self) -> String {
        if self.is_unit() {
            return "unit".into();
        }
        let n = EulerFactor {
            world: self.world,
            roots: self.num.clone(),
        };
        let d = EulerFactor {
            world: self.world,
            roots: self.den.clone(),
        };
        format!("[{}] / [{}]", n.render(), d.render())
    }
}

impl fmt::Debug for GammaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.world, self.render())
    }
}
