//! GL₁ character data shared by the oracle and the engine.

use num_rational::Ratio;

use super::field::{adic_zeta, split_zeta, CyclotomicField};
use super::oracle::Character;
use crate::error::Result;
use crate::reps::{Catalog, CuspidalLine, CuspidalSymbol, InertialTag, Structure, TagMap};
use crate::scalars::arith::split_ell;
use crate::scalars::{AdicUnit, PrimeContext, Scalar, World};

/// `χ(x) = (q^e ζ_N^s)^{v(x)} · η_j(ac(x))`, `N = p(q−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gl1Datum {
    pub e: i64,
    pub s: i64,
    pub j: i64,
}

/// `N = p(q−1)`.
pub fn zeta_order(ctx: &PrimeContext) -> u64 {
    ctx.p() * (ctx.q() - 1)
}

impl Gl1Datum {
    pub fn new(ctx: &PrimeContext, e: i64, s: i64, j: i64) -> Self {
        Gl1Datum {
            e,
            s: s.rem_euclid(zeta_order(ctx) as i64),
            j: j.rem_euclid(ctx.q() as i64 - 1),
        }
    }

    pub fn product(&self, o: &Self, ctx: &PrimeContext) -> Self {
        Self::new(ctx, self.e + o.e, self.s + o.s, self.j + o.j)
    }

    pub fn inverse(&self, ctx: &PrimeContext) -> Self {
        Self::new(ctx, -self.e, -self.s, -self.j)
    }

    /// The character with values in `field`.
    pub fn character<F: CyclotomicField>(&self, field: &F, q: u64) -> Character<F::E> {
        let u = field.mul(&field.pow(&field.integer(q as i64), self.e), &field.zeta(self.s));
        Character { u, j: self.j }
    }

    /// Line label `eta{c}` of the prime-to-ℓ part of `η_j`, and its ℓ-power
    /// part as an inertial tag.
    fn line_and_tag(&self, ctx: &PrimeContext) -> (String, InertialTag) {
        let (_, c, la, t) = split_zeta(ctx.ell(), ctx.q() - 1, self.j);
        (format!("eta{c}"), InertialTag::new(Ratio::new(t, la as i64)))
    }

    pub fn adic_twist(&self, ctx: &PrimeContext) -> AdicUnit {
        AdicUnit::q_power(ctx.ell(), self.e).mul(&adic_zeta(ctx.ell(), zeta_order(ctx), self.s))
    }

    /// The engine symbol in `world`: mod-ℓ symbols forget the ℓ-power parts.
    pub fn symbol(&self, cat: &Catalog, world: World) -> Result<CuspidalSymbol> {
        let ctx = cat.ctx();
        let (line, tag) = self.line_and_tag(ctx);
        let adic = Scalar::Adic(self.adic_twist(ctx));
        let (twist, tag) = match world {
            World::LAdic => (adic, tag),
            World::ModL => (Scalar::Mod(adic.reduce(ctx)), InertialTag::zero()),
        };
        CuspidalSymbol::new(cat, world, &line, twist, tag, Structure::Supercuspidal)
    }
}

/// Lines `eta{c}` for the characters of `F_q^×` of prime-to-ℓ order, with
/// `eta{c}^∨ = eta{−c}`.
pub fn gl1_catalog(ctx: PrimeContext) -> Result<Catalog> {
    let (m, _) = split_ell(ctx.q() - 1, ctx.ell());
    let lines = (0..m).map(|c| CuspidalLine {
        label: format!("eta{c}"),
        n: 1,
        f: 1,
        dual_label: format!("eta{}", (m - c) % m),
        dual_twist: AdicUnit::one(ctx.ell()),
        tag_map: TagMap::Negation,
    });
    Catalog::new(ctx, lines)
}
