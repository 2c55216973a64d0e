use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;

use super::line::{Catalog, CuspidalLine, InertialTag};
use crate::error::{Error, Result};
use crate::scalars::{roots_of_unity_in_world, PrimeContext, Scalar, World};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    Supercuspidal,
    /// `St_r(μ) = St(μ, e(μ)·ℓ^r)` for a mod-ℓ supercuspidal `μ`.
    NonSupercuspidal {
        r: u32,
        base: Box<CuspidalSymbol>,
    },
}

/// A cuspidal representation `χ_u ρ_0` on a line, with inertial tag and structure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuspidalSymbol {
    world: World,
    line: Arc<CuspidalLine>,
    twist: Scalar,
    tag: InertialTag,
    structure: Structure,
    ctx: PrimeContext,
}

/// Derived invariants of a cuspidal symbol. `None` stands for `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub q_rho: Scalar,
    pub o: Option<u64>,
    pub e: Option<u64>,
    pub f: u64,
    pub banal: bool,
}

impl CuspidalSymbol {
    /// Builds and validates a symbol, canonicalizing the twist within its
    /// `f`-torsion coset.
    pub fn new(cat: &Catalog, world: World, line: &str, twist: Scalar, tag: InertialTag, structure: Structure) -> Result<Self> {
        let line = cat.line(line)?;
        let ctx = *cat.ctx();
        if twist.world() != world {
            return Err(Error::WorldMismatch(format!("twist {twist} is not in the {world} world")));
        }
        if world == World::ModL && !tag.is_zero() {
            return Err(Error::InvalidSymbol(format!("inertial tags are l-adic only (got {tag})")));
        }
        if let Structure::NonSupercuspidal { r, base } = &structure {
            if world != World::ModL {
                return Err(Error::InvalidSymbol("l-adic cuspidals are supercuspidal".into()));
            }
            if !matches!(base.structure, Structure::Supercuspidal) || base.world != World::ModL {
                return Err(Error::InvalidSymbol("St_r base must be a mod-l supercuspidal".into()));
            }
            let e_mu = base.invariants().e.expect("mod-l symbols have finite e");
            let want = base.line.n * e_mu * ctx.ell().pow(*r);
            if line.n != want {
                return Err(Error::InvalidSymbol(format!(
                    "St_{r}({}) has size n(μ)·e(μ)·ℓ^r = {want}, but line {:?} has n={}",
                    base.line.label, line.label, line.n
                )));
            }
            if !ctx.q_bar().pow(line.f as i64).is_one() {
                return Err(Error::InvalidSymbol(format!(
                    "line {:?} hosts a non-supercuspidal, so q^f must be 1 mod ℓ (f={})",
                    line.label, line.f
                )));
            }
        }
        let mut s = CuspidalSymbol {
            world,
            line,
            twist,
            tag,
            structure,
            ctx,
        };
        s.canonicalize();
        Ok(s)
    }

    fn canonicalize(&mut self) {
        let zetas = roots_of_unity_in_world(self.world, &self.ctx, self.line.f).expect("valid f");
        self.twist = zetas
            .iter()
            .map(|z| self.twist.mul(z))
            .min_by_key(|c| c.encode())
            .expect("at least one root of unity");
    }

    pub fn world(&self) -> World {
        self.world
    }

    pub fn line(&self) -> &Arc<CuspidalLine> {
        &self.line
    }

    pub fn twist(&self) -> Scalar {
        self.twist
    }

    pub fn tag(&self) -> InertialTag {
        self.tag
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn ctx(&self) -> &PrimeContext {
        &self.ctx
    }

    pub fn n(&self) -> u64 {
        self.line.n
    }

    pub fn f(&self) -> u64 {
        self.line.f
    }

    pub fn is_supercuspidal(&self) -> bool {
        matches!(self.structure, Structure::Supercuspidal)
    }

    pub fn invariants(&self) -> Invariants {
        let f = self.line.f;
        let q_rho = Scalar::q_power(self.world, &self.ctx, f as i64);
        match self.world {
            World::LAdic => Invariants {
                q_rho,
                o: None,
                e: None,
                f,
                banal: true,
            },
            World::ModL => {
                let o = if self.is_supercuspidal() {
                    self.ctx.q_bar().pow(f as i64).mult_order().expect("q ≠ 0 mod ℓ")
                } else {
                    1
                };
                let e = if o > 1 { o } else { self.ctx.ell() };
                Invariants {
                    q_rho,
                    o: Some(o),
                    e: Some(e),
                    f,
                    banal: o > 1,
                }
            }
        }
    }

    pub fn is_banal(&self) -> bool {
        self.invariants().banal
    }

    /// `χ_v ρ`; a non-supercuspidal base is twisted along.
    pub fn twisted(&self, v: &Scalar) -> Self {
        let mut s = self.clone();
        s.twist = self.twist.mul(v);
        if let Structure::NonSupercuspidal { r, base } = &self.structure {
            s.structure = Structure::NonSupercuspidal {
                r: *r,
                base: Box::new(base.twisted(v)),
            };
        }
        s.canonicalize();
        s
    }

    /// `ν^a ρ`.
    pub fn nu_shift(&self, a: i64) -> Self {
        self.twisted(&Scalar::nu_power(self.world, &self.ctx, a))
    }

    /// Contragredient: `(χ_u ρ_0)^∨ = χ_{δ/u} ρ_0′` with the tag mapped.
    pub fn dual(&self, cat: &Catalog) -> Self {
        let dl = cat.dual_line(&self.line);
        let delta = self.line.dual_twist_in(self.world, &self.ctx);
        let structure = match &self.structure {
            Structure::Supercuspidal => Structure::Supercuspidal,
            Structure::NonSupercuspidal { r, base } => Structure::NonSupercuspidal {
                r: *r,
                base: Box::new(base.dual(cat)),
            },
        };
        let mut s = CuspidalSymbol {
            world: self.world,
            line: dl,
            twist: delta.mul(&self.twist.inv()),
            tag: self.line.tag_map.apply(self.tag),
            structure,
            ctx: self.ctx,
        };
        s.canonicalize();
        s
    }

    /// Cuspidal lift: Teichmüller twist, tag 0, supercuspidal ℓ-adic symbol on
    /// the same line.
    pub fn standard_lift(&self) -> Self {
        self.lift_with_tag(InertialTag::zero())
    }

    pub fn lift_with_tag(&self, tag: InertialTag) -> Self {
        let mut s = CuspidalSymbol {
            world: World::LAdic,
            line: self.line.clone(),
            twist: self.twist.teichmuller_lift(),
            tag,
            structure: Structure::Supercuspidal,
            ctx: self.ctx,
        };
        s.canonicalize();
        s
    }

    /// Designated nonzero tag for the second lift of a non-banal supercuspidal.
    pub fn singular_tag(&self) -> InertialTag {
        InertialTag::new(Ratio::new(1, self.ctx.ell() as i64))
    }

    /// Whether `other ≅ ν^r self` for some `r`; returns `r` (in `[0, o)` in the
    /// mod-ℓ world, where the line is a circle).
    pub fn offset_to(&self, other: &Self) -> Option<i64> {
        if self.world != other.world || self.line.label != other.line.label || self.tag != other.tag {
            return None;
        }
        let f = self.line.f;
        let w = other.twist.div(&self.twist);
        match w {
            Scalar::Adic(a) => {
                let r = -a.e_q();
                let rest = w.mul(&Scalar::q_power(World::LAdic, &self.ctx, -r).inv());
                rest.is_torsion(f).then_some(r)
            }
            Scalar::Mod(_) => {
                let o = self.invariants().o.expect("finite o");
                (0..o as i64).find(|&r| w.mul(&Scalar::q_power(World::ModL, &self.ctx, r)).is_torsion(f))
            }
        }
    }

    /// Short label `line:twist[:tag]`.
    pub fn describe(&self) -> String {
        let mut s = format!("{}:{}", self.line.label, self.twist.encode());
        if !self.tag.is_zero() {
            s.push_str(&format!(":tag={}", self.tag));
        }
        if let Structure::NonSupercuspidal { r, base } = &self.structure {
            s.push_str(&format!(":St_{r}({})", base.describe()));
        }
        s
    }
}

impl fmt::Debug for CuspidalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Display for CuspidalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// `Some(u)` with `ρ2 ≅ χ_u ρ1^∨`, canonical within the `f`-torsion coset.
pub fn cusp_twist_dual(cat: &Catalog, r1: &CuspidalSymbol, r2: &CuspidalSymbol) -> Option<Scalar> {
    if r1.world != r2.world || r1.n() != r2.n() || r1.line.dual_label != r2.line.label {
        return None;
    }
    if r1.world == World::LAdic && r1.line.tag_map.apply(r1.tag) != r2.tag {
        return None;
    }
    let dual = r1.dual(cat);
    let u = r2.twist.div(&dual.twist);
    let zetas = roots_of_unity_in_world(r1.world, cat.ctx(), r1.f()).expect("valid f");
    zetas.iter().map(|z| u.mul(z)).min_by_key(|c| c.encode())
}
