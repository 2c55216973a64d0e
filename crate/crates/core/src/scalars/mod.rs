//! Exact coefficients: `F̄_ℓ` through a compatible tower of finite fields, and
//! a formal model of the ℓ-adic units produced by the engine.

mod adic;
pub mod arith;
mod context;
pub(crate) mod field;
mod modscalar;
mod parse;

use std::fmt;

use num_rational::Ratio;

pub use adic::{reduce_unit, AdicUnit};
pub use context::PrimeContext;
pub use modscalar::ModScalar;
pub use parse::parse_scalar;

use crate::error::{Error, Result};

/// Coefficient world: `F̄_ℓ` or `Q̄_ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum World {
    ModL,
    LAdic,
}

impl World {
    pub fn name(&self) -> &'static str {
        match self {
            World::ModL => "mod-l",
            World::LAdic => "l-adic",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "mod-l" => Ok(World::ModL),
            "l-adic" => Ok(World::LAdic),
            _ => Err(Error::Parse(format!("unknown world {s:?} (expected \"mod-l\" or \"l-adic\")"))),
        }
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A nonzero coefficient of either world.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Mod(ModScalar),
    Adic(AdicUnit),
}

impl Scalar {
    pub fn world(&self) -> World {
        match self {
            Scalar::Mod(_) => World::ModL,
            Scalar::Adic(_) => World::LAdic,
        }
    }

    pub fn one(world: World, ell: u64) -> Self {
        match world {
            World::ModL => Scalar::Mod(ModScalar::one(ell)),
            World::LAdic => Scalar::Adic(AdicUnit::one(ell)),
        }
    }

    /// `q^e` in the given world.
    pub fn q_power(world: World, ctx: &PrimeContext, e: i64) -> Self {
        match world {
            World::ModL => Scalar::Mod(ctx.q_bar().pow(e)),
            World::LAdic => Scalar::Adic(AdicUnit::q_power(ctx.ell(), e)),
        }
    }

    /// `ν(ϖ)^a = q^{-a}`.
    pub fn nu_power(world: World, ctx: &PrimeContext, a: i64) -> Self {
        Self::q_power(world, ctx, -a)
    }

    pub fn ell(&self) -> u64 {
        match self {
            Scalar::Mod(m) => m.ell(),
            Scalar::Adic(a) => a.ell(),
        }
    }

    /// Product; both factors must belong to the same world.
    pub fn mul(&self, o: &Self) -> Self {
        match (self, o) {
            (Scalar::Mod(a), Scalar::Mod(b)) => Scalar::Mod(a.mul(b)),
            (Scalar::Adic(a), Scalar::Adic(b)) => Scalar::Adic(a.mul(b)),
            _ => panic!("world mismatch in scalar product"),
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            Scalar::Mod(a) => Scalar::Mod(a.pow(-1)),
            Scalar::Adic(a) => Scalar::Adic(a.inv()),
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }

    pub fn pow(&self, k: i64) -> Self {
        match self {
            Scalar::Mod(a) => Scalar::Mod(a.pow(k)),
            Scalar::Adic(a) => Scalar::Adic(a.pow(k)),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(a) => a.is_one(),
            Scalar::Adic(a) => a.is_one(),
        }
    }

    /// Reduction to `F̄_ℓ` (identity on the mod-ℓ world).
    pub fn reduce(&self, ctx: &PrimeContext) -> ModScalar {
        match self {
            Scalar::Mod(a) => *a,
            Scalar::Adic(a) => a.reduce(ctx),
        }
    }

    /// Teichmüller lift of a mod-ℓ scalar; identity on ℓ-adic scalars.
    pub fn teichmuller_lift(&self) -> Self {
        match self {
            Scalar::Mod(a) => Scalar::Adic(AdicUnit::teichmuller(*a).expect("nonzero scalar")),
            Scalar::Adic(_) => *self,
        }
    }

    pub fn as_mod(&self) -> Option<ModScalar> {
        match self {
            Scalar::Mod(a) => Some(*a),
            Scalar::Adic(_) => None,
        }
    }

    pub fn as_adic(&self) -> Option<AdicUnit> {
        match self {
            Scalar::Adic(a) => Some(*a),
            Scalar::Mod(_) => None,
        }
    }

    pub fn encode(&self) -> String {
        match self {
            Scalar::Mod(a) => a.encode(),
            Scalar::Adic(a) => a.encode(),
        }
    }

    /// Whether `self^f = 1`.
    pub fn is_torsion(&self, f: u64) -> bool {
        self.pow(f as i64).is_one()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// The `f′` distinct `f′`-th roots of unity in `F̄_ℓ`, each with multiplicity
/// `ℓ^v`, where `f = f′·ℓ^v`. Sorted by encoding.
pub fn roots_of_unity_with_multiplicity(ctx: &PrimeContext, f: u64) -> Result<Vec<(ModScalar, u64)>> {
    if f == 0 {
        return Err(Error::Domain("f must be positive".into()));
    }
    let ell = ctx.ell();
    let (fp, v) = arith::split_ell(f, ell);
    let mult = ell.pow(v);
    let mut out: Vec<(ModScalar, u64)> = (0..fp)
        .map(|j| ModScalar::root_of_unity(ell, fp, j as i64).map(|z| (z, mult)))
        .collect::<Result<_>>()?;
    out.sort_by_key(|(z, _)| z.encode());
    Ok(out)
}

/// All `f`-th roots of unity of the world, listed with multiplicity (mod-ℓ)
/// or as `f` distinct `(0, teich, sing)` units (ℓ-adic).
pub fn roots_of_unity_in_world(world: World, ctx: &PrimeContext, f: u64) -> Result<Vec<Scalar>> {
    let base = roots_of_unity_with_multiplicity(ctx, f)?;
    let ell = ctx.ell();
    let (_, v) = arith::split_ell(f, ell);
    let lv = ell.pow(v) as i64;
    let mut out = Vec::with_capacity(f as usize);
    for (z, m) in base {
        match world {
            World::ModL => out.extend(std::iter::repeat_n(Scalar::Mod(z), m as usize)),
            World::LAdic => {
                for j in 0..lv {
                    out.push(Scalar::Adic(AdicUnit::new(0, z, Ratio::new(j, lv))?));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(ell: u64, q: u64) -> PrimeContext {
        PrimeContext::new(ell, q).unwrap()
    }

    #[test]
    fn roots_of_unity_examples() {
        let r = roots_of_unity_with_multiplicity(&ctx(7, 2), 3).unwrap();
        let vals: Vec<(String, u64)> = r.iter().map(|(z, m)| (z.encode(), *m)).collect();
        assert_eq!(vals, vec![("1".into(), 1), ("2".into(), 1), ("4".into(), 1)]);
        let r = roots_of_unity_with_multiplicity(&ctx(3, 2), 3).unwrap();
        assert_eq!(r, vec![(ModScalar::one(3), 3)]);
        let r = roots_of_unity_with_multiplicity(&ctx(5, 2), 1).unwrap();
        assert_eq!(r, vec![(ModScalar::one(5), 1)]);
    }

    #[test]
    fn adic_roots_of_unity_include_singular_part() {
        let r = roots_of_unity_in_world(World::LAdic, &ctx(3, 2), 3).unwrap();
        let enc: Vec<String> = r.iter().map(|s| s.encode()).collect();
        assert_eq!(enc, vec!["q^0 * 1 * zeta(0)", "q^0 * 1 * zeta(1/3)", "q^0 * 1 * zeta(2/3)"]);
    }
}
