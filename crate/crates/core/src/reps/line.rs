use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::{AdicUnit, PrimeContext, Scalar, World};

/// Inertial tag of an ℓ-adic cuspidal, an element of `Q/Z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InertialTag(Ratio<i64>);

impl InertialTag {
    pub fn new(r: Ratio<i64>) -> Self {
        let den = *r.denom();
        InertialTag(Ratio::new(r.numer().rem_euclid(den), den))
    }

    pub fn zero() -> Self {
        InertialTag(Ratio::zero())
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad inertial tag {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<i64>().map_err(|_| bad())?, d.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
        };
        if d <= 0 {
            return Err(bad());
        }
        Ok(Self::new(Ratio::new(n, d)))
    }
}

impl fmt::Display for InertialTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for InertialTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Involution on inertial tags induced by taking contragredients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TagMap {
    Identity,
    Negation,
}

impl TagMap {
    pub fn apply(&self, t: InertialTag) -> InertialTag {
        match self {
            TagMap::Identity => t,
            TagMap::Negation => InertialTag::new(-t.value()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TagMap::Identity => "identity",
            TagMap::Negation => "negation",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(TagMap::Identity),
            "negation" => Ok(TagMap::Negation),
            _ => Err(Error::Parse(format!("unknown tag map {s:?}"))),
        }
    }
}

/// A family of cuspidals `{χ_u ρ_0}` of `GL_n` through a base point `ρ_0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuspidalLine {
    pub label: String,
    pub n: u64,
    /// Torsion number: `χ_u ρ ≅ ρ` iff `u^f = 1`.
    pub f: u64,
    pub dual_label: String,
    /// `ρ_0^∨ ≅ χ_δ ρ_0′` where `ρ_0′` is the base point of the dual line.
    pub dual_twist: AdicUnit,
    pub tag_map: TagMap,
}

impl CuspidalLine {
    /// `δ` in the requested world.
    pub fn dual_twist_in(&self, world: World, ctx: &PrimeContext) -> Scalar {
        match world {
            World::LAdic => Scalar::Adic(self.dual_twist),
            World::ModL => Scalar::Mod(self.dual_twist.reduce(ctx)),
        }
    }
}

/// Validated collection of cuspidal lines over a fixed context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    ctx: PrimeContext,
    lines: BTreeMap<String, Arc<CuspidalLine>>,
}

impl Catalog {
    pub fn new(ctx: PrimeContext, lines: impl IntoIterator<Item = CuspidalLine>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for l in lines {
            if map.contains_key(&l.label) {
                return Err(Error::InvalidLine {
                    label: l.label.clone(),
                    reason: "declared twice".into(),
                });
            }
            map.insert(l.label.clone(), Arc::new(l));
        }
        let cat = Catalog { ctx, lines: map };
        for l in cat.lines.values() {
            cat.validate(l)?;
        }
        Ok(cat)
    }

    fn validate(&self, l: &CuspidalLine) -> Result<()> {
        let bad = |reason: String| Error::InvalidLine {
            label: l.label.clone(),
            reason,
        };
        if l.n == 0 || l.f == 0 || !l.n.is_multiple_of(l.f) {
            return Err(bad(format!("need f | n with n, f ≥ 1 (n={}, f={})", l.n, l.f)));
        }
        if l.dual_twist.ell() != self.ctx.ell() {
            return Err(bad("dual twist over the wrong characteristic".into()));
        }
        let d = self
            .lines
            .get(&l.dual_label)
            .ok_or_else(|| bad(format!("dangling dual_label {:?}", l.dual_label)))?;
        if d.dual_label != l.label {
            return Err(bad(format!("dual of {:?} is {:?}, not {:?}", d.label, d.dual_label, l.label)));
        }
        if d.n != l.n || d.f != l.f {
            return Err(bad(format!("dual line {:?} has different (n, f)", d.label)));
        }
        if d.tag_map != l.tag_map {
            return Err(bad(format!("dual line {:?} has a different tag map", d.label)));
        }
        let ratio = d.dual_twist.mul(&l.dual_twist.inv());
        if !ratio.pow(l.f as i64).is_one() {
            return Err(bad(format!(
                "dual twists of {:?} and {:?} do not compose to the base point",
                l.label, d.label
            )));
        }
        Ok(())
    }

    pub fn ctx(&self) -> &PrimeContext {
        &self.ctx
    }

    pub fn line(&self, label: &str) -> Result<Arc<CuspidalLine>> {
        self.lines.get(label).cloned().ok_or_else(|| Error::UnknownLine(label.to_string()))
    }

    pub fn lines(&self) -> impl Iterator<Item = &Arc<CuspidalLine>> {
        self.lines.values()
    }

    pub fn dual_line(&self, l: &CuspidalLine) -> Arc<CuspidalLine> {
        self.lines[&l.dual_label].clone()
    }
}
