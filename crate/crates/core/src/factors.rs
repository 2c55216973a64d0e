//! Closed-form local factors, reduction compatibility and the GCD over lifts.

use crate::error::{Error, Result};
use crate::eulerpoly::{EulerFactor, GammaClass};
use crate::reps::{cusp_twist_dual, generic_from_support, lift_family_segment, linked, Catalog, CuspidalSymbol, GenericRep, Segment};
use crate::scalars::{Scalar, World};

fn same_world(a: World, b: World) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::WorldMismatch(format!("{a} vs {b}")))
    }
}

/// `L(X, ρ1, ρ2)` for cuspidals.
pub fn l_cuspidal(cat: &Catalog, r1: &CuspidalSymbol, r2: &CuspidalSymbol) -> Result<EulerFactor> {
    same_world(r1.world(), r2.world())?;
    if r1.world() == World::ModL && !r1.is_banal() {
        return Ok(EulerFactor::one(r1.world()));
    }
    match cusp_twist_dual(cat, r1, r2) {
        None => Ok(EulerFactor::one(r1.world())),
        Some(u) => EulerFactor::from_pole_family(&u, r1.f(), cat.ctx()),
    }
}

/// `L(X, L(Δ1), L(Δ2))`.
pub fn l_segments(cat: &Catalog, d1: &Segment, d2: &Segment) -> Result<EulerFactor> {
    same_world(d1.world(), d2.world())?;
    let world = d1.world();
    if world == World::ModL && (!d1.is_banal() || !d2.is_banal()) {
        return Ok(EulerFactor::one(world));
    }
    let (d1, d2) = if d1.size() >= d2.size() { (d1, d2) } else { (d2, d1) };
    let top = d1.start().nu_shift(d1.len() as i64 - 1);
    let mut out = EulerFactor::one(world);
    for i in 0..d2.len() as i64 {
        out = out.mul(&l_cuspidal(cat, &top, &d2.start().nu_shift(i))?)?;
    }
    Ok(out)
}

/// `L(X, π, π′) = ∏_{i,j} L(X, Δ_i, Δ′_j)`.
pub fn l_generic(cat: &Catalog, p1: &GenericRep, p2: &GenericRep) -> Result<EulerFactor> {
    same_world(p1.world(), p2.world())?;
    let mut out = EulerFactor::one(p1.world());
    for a in p1.segments() {
        for b in p2.segments() {
            out = out.mul(&l_segments(cat, a, b)?)?;
        }
    }
    Ok(out)
}

/// `γ(X, π, π′)` modulo units.
pub fn gamma_generic(cat: &Catalog, p1: &GenericRep, p2: &GenericRep) -> Result<GammaClass> {
    let dual = l_generic(cat, &p1.dual(cat), &p2.dual(cat))?.dual_substitute(cat.ctx());
    GammaClass::make(&dual, &l_generic(cat, p1, p2)?)
}

/// Outcome of comparing mod-ℓ factors with reductions of standard-lift factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatReport {
    pub divides: bool,
    pub gamma_equal_up_to_unit: bool,
    pub l_modl: EulerFactor,
    pub l_lift_reduced: EulerFactor,
    pub gamma_modl: GammaClass,
    pub gamma_lift_reduced: GammaClass,
}

impl CompatReport {
    pub fn holds(&self) -> bool {
        self.divides && self.gamma_equal_up_to_unit
    }

    /// Whether the division is strict.
    pub fn strict(&self) -> bool {
        self.l_modl != self.l_lift_reduced
    }
}

pub fn check_compat1(cat: &Catalog, p1: &GenericRep, p2: &GenericRep) -> Result<CompatReport> {
    let (t1, t2) = (p1.standard_lift()?, p2.standard_lift()?);
    let ctx = cat.ctx();
    let l_modl = l_generic(cat, p1, p2)?;
    let l_lift_reduced = l_generic(cat, &t1, &t2)?.reduce(ctx)?;
    let gamma_modl = gamma_generic(cat, p1, p2)?;
    let gamma_lift_reduced = gamma_generic(cat, &t1, &t2)?.reduce_modl(ctx)?;
    Ok(CompatReport {
        divides: l_modl.divides(&l_lift_reduced)?,
        gamma_equal_up_to_unit: gamma_modl == gamma_lift_reduced,
        l_modl,
        l_lift_reduced,
        gamma_modl,
        gamma_lift_reduced,
    })
}

/// Evidence for a GCD computed over lifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdCertificate {
    pub lifts_left: Vec<GenericRep>,
    pub lifts_right: Vec<GenericRep>,
    /// Reduced factor of every pair, indexed as `(left, right)`.
    pub reduced: Vec<(usize, usize, EulerFactor)>,
    /// A pair whose reduced factor equals the GCD, if one exists.
    pub achieving: Option<(usize, usize)>,
}

/// Generic ℓ-adic representation with the cuspidal support of the union of
/// `parts`: the union itself when unlinked, otherwise rebuilt line by line.
pub fn generic_of_product(parts: &[GenericRep]) -> Result<GenericRep> {
    let segs: Vec<Segment> = parts.iter().flat_map(|p| p.segments().iter().cloned()).collect();
    if let Ok(rep) = GenericRep::new(World::LAdic, segs.clone()) {
        return Ok(rep);
    }
    let mut groups: Vec<(CuspidalSymbol, Vec<i64>)> = Vec::new();
    for s in &segs {
        let slot = groups.iter().position(|(base, _)| base.offset_to(s.start()).is_some());
        let idx = match slot {
            Some(i) => i,
            None => {
                groups.push((s.start().clone(), Vec::new()));
                groups.len() - 1
            }
        };
        let r = groups[idx].0.offset_to(s.start()).expect("same line");
        groups[idx].1.extend(r..r + s.len() as i64);
    }
    let mut out = Vec::new();
    for (base, support) in groups {
        out.extend(generic_from_support(&base, &support)?);
    }
    GenericRep::new(World::LAdic, out)
}

pub fn lift_tuples(p: &GenericRep) -> Result<Vec<GenericRep>> {
    let mut tuples: Vec<Vec<GenericRep>> = vec![vec![]];
    for s in p.segments() {
        let fam = lift_family_segment(s)?;
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                fam.iter().map(move |l| {
                    let mut t = t.clone();
                    t.push(l.clone());
                    t
                })
            })
            .collect();
    }
    let mut reps = tuples.iter().map(|t| generic_of_product(t)).collect::<Result<Vec<_>>>()?;
    reps.sort();
    reps.dedup();
    Ok(reps)
}

/// `GCD_{τ,τ′} r_ℓ(L(X, τ, τ′))` over the explicit lift families, checked
/// against the closed formula.
pub fn gcd_over_lifts(cat: &Catalog, p1: &GenericRep, p2: &GenericRep) -> Result<(EulerFactor, GcdCertificate)> {
    if p1.world() != World::ModL || p2.world() != World::ModL {
        return Err(Error::Domain("gcd_over_lifts expects mod-l representations".into()));
    }
    let (left, right) = (lift_tuples(p1)?, lift_tuples(p2)?);
    let mut reduced = Vec::new();
    let mut gcd: Option<EulerFactor> = None;
    for (i, t1) in left.iter().enumerate() {
        for (j, t2) in right.iter().enumerate() {
            let r = l_generic(cat, t1, t2)?.reduce(cat.ctx())?;
            gcd = Some(match gcd {
                None => r.clone(),
                Some(g) => g.gcd(&r)?,
            });
            reduced.push((i, j, r));
        }
    }
    let gcd = gcd.unwrap_or_else(|| EulerFactor::one(World::ModL));
    let direct = l_generic(cat, p1, p2)?;
    if gcd != direct {
        return Err(Error::Certification(format!("GCD over lifts {gcd} differs from L(X, π, π′) = {direct}")));
    }
    let achieving = reduced.iter().find(|(_, _, r)| *r == gcd).map(|(i, j, _)| (*i, *j));
    Ok((
        gcd,
        GcdCertificate {
            lifts_left: left,
            lifts_right: right,
            reduced,
            achieving,
        },
    ))
}

/// Pole containment: every inverse root `α` of `L(X, Δ1, Δ2)` satisfies
/// `(α/w)^f ∈ {q(ρ)^{-(k1−1)}, …, q(ρ)^{-(k1+k2−2)}}`, where `Δ2`'s base is
/// `χ_w` times the contragredient of `Δ1`'s base and `k1 ≥ k2`.
pub fn pole_containment_holds(cat: &Catalog, d1: &Segment, d2: &Segment, l: &EulerFactor) -> bool {
    if l.is_one() {
        return true;
    }
    let (d1, d2) = if d1.size() >= d2.size() { (d1, d2) } else { (d2, d1) };
    let Some(w) = cusp_twist_dual(cat, d1.start(), d2.start()) else {
        return false;
    };
    let (k1, k2) = (d1.len() as i64, d2.len() as i64);
    let f = d1.start().f() as i64;
    let world = l.world();
    let allowed: Vec<Scalar> = (k1 - 1..=k1 + k2 - 2).map(|j| Scalar::q_power(world, cat.ctx(), -f * j)).collect();
    let wf = w.pow(f);
    l.roots().keys().all(|a| allowed.contains(&a.pow(f).div(&wf)))
}

/// Whether any pair of segments drawn from both representations is linked.
pub fn any_linked(p1: &GenericRep, p2: &GenericRep) -> bool {
    p1.segments().iter().any(|a| p2.segments().iter().any(|b| linked(a, b)))
}
