use std::fmt;

use super::line::Catalog;
use super::segment::{generic_from_support, linked, Segment};
use super::symbol::Structure;
use crate::error::{Error, Result};
use crate::scalars::{Scalar, World};

/// A generic representation: a sorted multiset of pairwise-unlinked generic segments.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenericRep {
    world: World,
    segments: Vec<Segment>,
}

impl GenericRep {
    pub fn new(world: World, mut segments: Vec<Segment>) -> Result<Self> {
        for s in &segments {
            if s.world() != world {
                return Err(Error::WorldMismatch(format!("segment {} is not in the {world} world", s.describe())));
            }
        }
        for i in 0..segments.len() {
            for j in i + 1..segments.len() {
                if linked(&segments[i], &segments[j]) {
                    return Err(Error::Linked(segments[i].describe(), segments[j].describe()));
                }
            }
        }
        segments.sort();
        Ok(GenericRep { world, segments })
    }

    pub fn empty(world: World) -> Self {
        GenericRep { world, segments: vec![] }
    }

    pub fn world(&self) -> World {
        self.world
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Total GL-size.
    pub fn size(&self) -> u64 {
        self.segments.iter().map(Segment::size).sum()
    }

    /// `self ⊔ other`, which must again be generic.
    pub fn union(&self, other: &Self) -> Result<Self> {
        Self::new(self.world, self.segments.iter().chain(&other.segments).cloned().collect())
    }

    /// `(π_b, π_tnb)`.
    pub fn banal_split(&self) -> Result<(Self, Self)> {
        if self.world != World::ModL {
            return Err(Error::Domain("banal_split is defined for mod-l representations".into()));
        }
        let (b, t): (Vec<Segment>, Vec<Segment>) = self.segments.iter().cloned().partition(Segment::is_banal);
        Ok((
            GenericRep {
                world: self.world,
                segments: b,
            },
            GenericRep {
                world: self.world,
                segments: t,
            },
        ))
    }

    pub fn dual(&self, cat: &Catalog) -> Self {
        let mut segments: Vec<Segment> = self.segments.iter().map(|s| s.dual(cat)).collect();
        segments.sort();
        GenericRep { world: self.world, segments }
    }

    pub fn twisted(&self, u: &Scalar) -> Self {
        let mut segments: Vec<Segment> = self.segments.iter().map(|s| s.twisted(u)).collect();
        segments.sort();
        GenericRep { world: self.world, segments }
    }

    /// Segmentwise standard lift.
    pub fn standard_lift(&self) -> Result<Self> {
        if self.world != World::ModL {
            return Err(Error::Domain("standard_lift expects a mod-l representation".into()));
        }
        let segs = self.segments.iter().map(lift_segment).collect::<Result<Vec<_>>>()?;
        Self::new(World::LAdic, segs)
    }

    pub fn describe(&self) -> String {
        if self.segments.is_empty() {
            return "∅".into();
        }
        self.segments.iter().map(Segment::describe).collect::<Vec<_>>().join(" × ")
    }
}

impl fmt::Debug for GenericRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.world, self.describe())
    }
}

fn lift_segment(s: &Segment) -> Result<Segment> {
    Segment::new(&s.start().standard_lift(), 0, s.len() as i64 - 1)
}

/// The finite family of ℓ-adic lifts used by the GCD construction.
pub fn lift_family_segment(s: &Segment) -> Result<Vec<GenericRep>> {
    if s.world() != World::ModL {
        return Err(Error::Domain("lift_family_segment expects a mod-l segment".into()));
    }
    let rho = s.start();
    let k = s.len() as i64;
    if rho.is_banal() {
        return Ok(vec![GenericRep::new(World::LAdic, vec![lift_segment(s)?])?]);
    }
    match rho.structure() {
        Structure::Supercuspidal => {
            let first = Segment::new(&rho.standard_lift(), 0, k - 1)?;
            let second = Segment::new(&rho.lift_with_tag(rho.singular_tag()), 0, k - 1)?;
            Ok(vec![
                GenericRep::new(World::LAdic, vec![first])?,
                GenericRep::new(World::LAdic, vec![second])?,
            ])
        }
        Structure::NonSupercuspidal { r, base } => {
            let first = Segment::new(&rho.standard_lift(), 0, k - 1)?;
            let mu = base.standard_lift();
            let e_mu = base.invariants().e.expect("mod-l");
            let run = (e_mu * rho.ctx().ell().pow(*r)) as i64;
            let support: Vec<i64> = (0..k).flat_map(|i| i..i + run).collect();
            let second = generic_from_support(&mu, &support)?;
            Ok(vec![GenericRep::new(World::LAdic, vec![first])?, GenericRep::new(World::LAdic, second)?])
        }
    }
}
