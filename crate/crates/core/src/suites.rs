//! Seeded verification suites, one per acceptance criterion.

use std::collections::HashMap;

use num_rational::{BigRational, Ratio};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::eulerpoly::{EulerFactor, GammaClass};
use crate::factors::{check_compat1, gamma_generic, gcd_over_lifts, l_cuspidal, l_generic, l_segments, pole_containment_holds};
use crate::reps::{
    linked, linked_by_extraction, linked_interval, Catalog, CuspidalLine, CuspidalSymbol, GenericRep, InertialTag, Segment, Structure, TagMap,
};
use crate::scalars::{roots_of_unity_in_world, AdicUnit, ModScalar, PrimeContext, Scalar, World};
use crate::tate::poly::Rational;
use crate::tate::{
    adic_zeta, epsilon_extract, fourier_inversion_holds, gamma_rational, gl1_catalog, recognize_q_zeta, tate_l_via_ideal, zeta_order, Cyclotomic,
    CyclotomicField, Field, Gl1Datum, ModField, Model,
};

/// Contexts `(ℓ, q)` exercised by the engine suites.
pub const CONTEXTS: [(u64, u64); 7] = [(3, 2), (5, 2), (7, 2), (2, 3), (3, 4), (3, 7), (5, 11)];

/// Suite names in criterion order.
pub const SUITES: [&str; 10] = [
    "cuspidal",
    "degeneration",
    "segments",
    "gamma-inductivity",
    "banal-part",
    "compat",
    "gcd",
    "oracle",
    "poles",
    "linkage",
];

/// Window `M` used by the oracle suites.
pub const ORACLE_WINDOW: i64 = 20;

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, r: Result<()>, what: impl FnOnce() -> String) {
        match r {
            Ok(()) => {}
            Err(e) => {
                self.cases += 1;
                self.failures.push(format!("{}: {e}", what()));
            }
        }
    }
}

/// Segment-level factors collected for the pole suite.
pub type FactorLog = Vec<(Catalog, Segment, Segment, EulerFactor)>;

/// Runs a suite by name; `window` overrides the oracle precision.
pub fn run_suite(name: &str, seed: u64, window: Option<i64>) -> Result<SuiteReport> {
    let mut log = FactorLog::new();
    match name {
        "cuspidal" => Ok(cuspidal_suite(seed, &mut log)),
        "degeneration" => degeneration_suite(seed, &mut log, window.unwrap_or(ORACLE_WINDOW)),
        "segments" => Ok(segments_suite(&mut log)),
        "gamma-inductivity" => Ok(gamma_suite(seed, &mut log)),
        "banal-part" => Ok(banal_part_suite(seed, &mut log)),
        "compat" => Ok(compat_suite(seed, &mut log)),
        "gcd" => Ok(gcd_suite(&mut log)),
        "oracle" => oracle_suite(window.unwrap_or(ORACLE_WINDOW)),
        "poles" => poles_suite(seed),
        "linkage" => Ok(linkage_suite()),
        _ => Err(Error::Parse(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")))),
    }
}

fn line(label: &str, n: u64, f: u64, dual: &str, delta: AdicUnit) -> CuspidalLine {
    CuspidalLine {
        label: label.into(),
        n,
        f,
        dual_label: dual.into(),
        dual_twist: delta,
        tag_map: TagMap::Negation,
    }
}

/// Catalog used by the random suites: GL₁ lines `triv`, `a ↔ b`; GL₂ lines
/// `ram2` (f=1) and `sc2` (f=2); GL₃ lines `c3 ↔ c3d` (f=3, δ=q); and a line
/// `st` hosting `St_0(triv)` mod ℓ.
pub fn suite_catalog(ctx: PrimeContext) -> Catalog {
    let ell = ctx.ell();
    let one = AdicUnit::one(ell);
    let o = ctx.q_bar().mult_order().expect("q ≠ 0 mod ℓ");
    let (st_n, st_f) = if o > 1 { (o, o) } else { (ell, 1) };
    Catalog::new(
        ctx,
        [
            line("triv", 1, 1, "triv", one),
            line("a", 1, 1, "b", one),
            line("b", 1, 1, "a", one),
            line("ram2", 2, 1, "ram2", one),
            line("sc2", 2, 2, "sc2", one),
            line("c3", 3, 3, "c3d", AdicUnit::q_power(ell, 1)),
            line("c3d", 3, 3, "c3", AdicUnit::q_power(ell, 1)),
            line("st", st_n, st_f, "st", one),
        ],
    )
    .expect("suite catalog is valid")
}

const SC_LINES: [&str; 7] = ["triv", "a", "b", "ram2", "sc2", "c3", "c3d"];

struct Gen {
    cat: Catalog,
    rng: ChaCha8Rng,
}

impl Gen {
    fn new(ctx: PrimeContext, seed: u64) -> Self {
        Gen {
            cat: suite_catalog(ctx),
            rng: ChaCha8Rng::seed_from_u64(seed ^ (ctx.ell() << 32) ^ ctx.q()),
        }
    }

    fn ctx(&self) -> PrimeContext {
        *self.cat.ctx()
    }

    fn root_of_unity(&mut self) -> ModScalar {
        let ell = self.ctx().ell();
        let orders: Vec<u64> = [1u64, 2, 3, 4].into_iter().filter(|m| m % ell != 0).collect();
        let m = *orders.choose(&mut self.rng).unwrap();
        ModScalar::root_of_unity(ell, m, self.rng.gen_range(0..m as i64)).unwrap()
    }

    fn twist(&mut self, world: World) -> Scalar {
        let ctx = self.ctx();
        let a = self.rng.gen_range(-3..=3);
        let zeta = self.root_of_unity();
        match world {
            World::ModL => Scalar::Mod(ctx.q_bar().pow(a).mul(&zeta)),
            World::LAdic => {
                let sing = if self.rng.gen_bool(0.25) {
                    Ratio::new(1, ctx.ell() as i64)
                } else {
                    Ratio::new(0, 1)
                };
                Scalar::Adic(AdicUnit::new(a, zeta, sing).unwrap())
            }
        }
    }

    fn symbol(&mut self, world: World) -> CuspidalSymbol {
        let cat = self.cat.clone();
        if world == World::ModL && self.rng.gen_bool(0.15) {
            let base = self.supercuspidal(world, "triv");
            let twist = base.twist();
            let st = Structure::NonSupercuspidal { r: 0, base: Box::new(base) };
            return CuspidalSymbol::new(&cat, world, "st", twist, InertialTag::zero(), st).expect("valid St_0");
        }
        let label = *SC_LINES.choose(&mut self.rng).unwrap();
        self.supercuspidal(world, label)
    }

    fn supercuspidal(&mut self, world: World, label: &str) -> CuspidalSymbol {
        let twist = self.twist(world);
        let tag = match world {
            World::LAdic => {
                let t = [0i64, 1, -1][self.rng.gen_range(0..3)];
                InertialTag::new(Ratio::new(t, self.ctx().ell() as i64))
            }
            World::ModL => InertialTag::zero(),
        };
        CuspidalSymbol::new(&self.cat, world, label, twist, tag, Structure::Supercuspidal).expect("valid symbol")
    }

    fn segment(&mut self, world: World) -> Segment {
        let rho = self.symbol(world);
        let kmax = rho.invariants().e.map_or(4, |e| (e - 1).min(4));
        let k = self.rng.gen_range(1..=kmax) as i64;
        Segment::new(&rho, 0, k - 1).expect("generic length")
    }

    fn rep(&mut self, world: World, max_segments: usize) -> GenericRep {
        for _ in 0..100 {
            let n = self.rng.gen_range(1..=max_segments);
            let segs = (0..n).map(|_| self.segment(world)).collect();
            if let Ok(r) = GenericRep::new(world, segs) {
                return r;
            }
        }
        GenericRep::new(world, vec![self.segment(world)]).unwrap()
    }

    fn world(&mut self) -> World {
        if self.rng.gen_bool(0.5) {
            World::ModL
        } else {
            World::LAdic
        }
    }
}

fn log_segments(log: &mut FactorLog, cat: &Catalog, p1: &GenericRep, p2: &GenericRep) {
    for a in p1.segments() {
        for b in p2.segments() {
            if let Ok(l) = l_segments(cat, a, b) {
                log.push((cat.clone(), a.clone(), b.clone(), l));
            }
        }
    }
}

fn contexts() -> impl Iterator<Item = PrimeContext> {
    CONTEXTS.iter().map(|&(l, q)| PrimeContext::new(l, q).expect("valid context"))
}

/// Brute-force `w` with `ρ2 ≅ χ_w ρ1^∨`, by twisting the contragredient.
fn twist_relation(cat: &Catalog, r1: &CuspidalSymbol, r2: &CuspidalSymbol) -> Option<Scalar> {
    let d = r1.dual(cat);
    if d.line().label != r2.line().label {
        return None;
    }
    let w = r2.twist().div(&d.twist());
    (d.twisted(&w) == *r2).then_some(w)
}

fn banal_by_definition(r: &CuspidalSymbol) -> bool {
    match r.world() {
        World::LAdic => true,
        World::ModL => r.is_supercuspidal() && !r.ctx().q_bar().pow(r.f() as i64).is_one(),
    }
}

/// `1/L = 1 − (wX)^f` checked coefficientwise (mod ℓ) or through distinct
/// `f`-th roots of `w^f` (ℓ-adically).
fn is_pole_family(l: &EulerFactor, w: &Scalar, f: u64) -> bool {
    match w {
        Scalar::Mod(w) => {
            let mut want = vec![ModScalar::one(w.ell()); f as usize + 1];
            for c in want.iter_mut().take(f as usize).skip(1) {
                *c = ModScalar::zero(w.ell());
            }
            want[f as usize] = w.pow(f as i64).neg();
            l.expand_mod() == want
        }
        Scalar::Adic(_) => {
            let wf = w.pow(f as i64);
            l.degree() == f && l.roots().iter().all(|(a, m)| *m == 1 && a.pow(f as i64) == wf)
        }
    }
}

fn cuspidal_suite(seed: u64, log: &mut FactorLog) -> SuiteReport {
    let mut rep = SuiteReport::new("cuspidal");
    let mut nontrivial = 0;
    for ctx in contexts() {
        let mut g = Gen::new(ctx, seed);
        for i in 0..120 {
            let world = if i % 2 == 0 { World::ModL } else { World::LAdic };
            let r1 = g.symbol(world);
            let r2 = if g.rng.gen_bool(0.5) {
                let d = r1.dual(&g.cat);
                let u = if g.rng.gen_bool(0.5) {
                    Scalar::one(world, ctx.ell())
                } else {
                    g.twist(world)
                };
                d.twisted(&u)
            } else {
                g.symbol(world)
            };
            let cat = g.cat.clone();
            let l = match l_cuspidal(&cat, &r1, &r2) {
                Ok(l) => l,
                Err(e) => {
                    rep.absorb(Err(e), || format!("{ctx:?} {r1} × {r2}"));
                    continue;
                }
            };
            let ok = match twist_relation(&cat, &r1, &r2) {
                Some(w) if banal_by_definition(&r1) => {
                    nontrivial += 1;
                    is_pole_family(&l, &w, r1.f())
                }
                _ => l.is_one(),
            };
            rep.check(ok, || format!("(ℓ,q)=({},{}) {r1} × {r2}: got {l}", ctx.ell(), ctx.q()));
            rep.check(l_cuspidal(&cat, &r2, &r1).ok() == Some(l.clone()), || {
                format!("asymmetric at {r1} × {r2}")
            });
            let s1 = Segment::new(&r1, 0, 0).unwrap();
            let s2 = Segment::new(&r2, 0, 0).unwrap();
            log.push((cat, s1, s2, l));
        }
    }
    rep.notes.push(format!("{nontrivial} pairs in the banal twist-dual case"));
    rep
}

fn degeneration_suite(seed: u64, log: &mut FactorLog, window: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("degeneration");
    for ctx in contexts().filter(|c| (c.q() - 1) % c.ell() == 0) {
        let mut g = Gen::new(ctx, seed);
        for _ in 0..100 {
            let (p1, p2) = (g.rep(World::ModL, 3), g.rep(World::ModL, 3));
            let l = l_generic(&g.cat, &p1, &p2)?;
            rep.check(l.is_one(), || {
                format!("({},{}) {} × {}: {l}", ctx.ell(), ctx.q(), p1.describe(), p2.describe())
            });
            log_segments(log, &g.cat, &p1, &p2);
        }
    }
    for (ell, q) in [(2u64, 3u64), (3, 4), (2, 5)] {
        let ctx = PrimeContext::new(ell, q)?;
        let model = Model::new(ModField::new(ell, zeta_order(&ctx)), q, window)?;
        let f = &model.field;
        for j in 0..q as i64 - 1 {
            let chi = Gl1Datum::new(&ctx, 0, 0, j).character(f, q);
            let triv = Gl1Datum::new(&ctx, 0, 0, 0).character(f, q);
            let cert = tate_l_via_ideal(&model, &chi, &triv)?;
            rep.check(cert.alpha.is_none(), || format!("oracle ℓ={ell} q={q} j={j}: ideal is not the full ring"));
            for rec in cert.records.iter().filter(|r| r.name.starts_with("1[p^")) {
                rep.check(rec.series.coeffs.iter().all(|c| f.is_zero(c)), || {
                    format!("oracle ℓ={ell} q={q}: {} does not vanish", rec.name)
                });
            }
        }
    }
    Ok(rep)
}

/// `{ζ·w·q^{−(k1−1+j)} : j < k2, ζ^f = 1}` for `St(ρ1,k1) × St(ρ2,k2)`,
/// `k1 ≥ k2` in GL-size, with `ρ2 ≅ χ_w ρ1^∨`.
fn segment_formula(cat: &Catalog, d1: &Segment, d2: &Segment) -> EulerFactor {
    let (d1, d2) = if d1.size() >= d2.size() { (d1, d2) } else { (d2, d1) };
    let world = d1.world();
    let Some(w) = twist_relation(cat, d1.start(), d2.start()) else {
        return EulerFactor::one(world);
    };
    let zetas = roots_of_unity_in_world(world, cat.ctx(), d1.start().f()).unwrap();
    let k1 = d1.len() as i64;
    let roots = (0..d2.len() as i64).flat_map(|j| {
        let base = w.mul(&Scalar::q_power(world, cat.ctx(), -(k1 - 1 + j)));
        zetas.iter().map(move |z| z.mul(&base)).collect::<Vec<_>>()
    });
    EulerFactor::from_roots(world, roots).unwrap()
}

fn segments_suite(log: &mut FactorLog) -> SuiteReport {
    let mut rep = SuiteReport::new("segments");
    for ctx in contexts() {
        let cat = suite_catalog(ctx);
        let mut segs = Vec::new();
        let mut twists = vec![ModScalar::one(ctx.ell()), ctx.q_bar()];
        if ctx.ell() != 2 {
            twists.push(ModScalar::from_int(ctx.ell(), -1));
        }
        for label in ["triv", "a", "b", "ram2", "sc2"] {
            for t in &twists {
                let rho = CuspidalSymbol::new(&cat, World::ModL, label, Scalar::Mod(*t), InertialTag::zero(), Structure::Supercuspidal).unwrap();
                let kmax = (rho.invariants().e.unwrap() - 1).min(4) as i64;
                for k in 1..=kmax {
                    segs.push(Segment::new(&rho, 0, k - 1).unwrap());
                }
            }
        }
        segs.sort();
        segs.dedup();
        for d1 in &segs {
            for d2 in &segs {
                let Ok(l) = l_segments(&cat, d1, d2) else {
                    rep.check(false, || format!("l_segments failed on {} × {}", d1.describe(), d2.describe()));
                    continue;
                };
                if !(d1.is_banal() && d2.is_banal()) {
                    rep.check(l.is_one(), || format!("non-banal {} × {} gave {l}", d1.describe(), d2.describe()));
                    continue;
                }
                let (t1, t2) = (lift(d1), lift(d2));
                let adic = l_segments(&cat, &t1, &t2).unwrap();
                let formula = segment_formula(&cat, &t1, &t2);
                rep.check(adic == formula, || {
                    format!("ℓ-adic {} × {}: engine {adic} vs formula {formula}", t1.describe(), t2.describe())
                });
                let reduced = formula.reduce(cat.ctx()).unwrap();
                rep.check(l == reduced, || {
                    format!(
                        "({},{}) {} × {}: {l} vs r(L) = {reduced}",
                        ctx.ell(),
                        ctx.q(),
                        d1.describe(),
                        d2.describe()
                    )
                });
                log.push((cat.clone(), t1, t2, adic));
                log.push((cat.clone(), d1.clone(), d2.clone(), l));
            }
        }
    }
    rep
}

fn lift(d: &Segment) -> Segment {
    Segment::new(&d.start().standard_lift(), 0, d.len() as i64 - 1).unwrap()
}

fn gamma_suite(seed: u64, log: &mut FactorLog) -> SuiteReport {
    let mut rep = SuiteReport::new("gamma-inductivity");
    for ctx in contexts() {
        let mut g = Gen::new(ctx, seed);
        let mut done = 0;
        while done < 200 {
            let world = g.world();
            let p1 = g.rep(world, 2);
            let (p2, p3) = (g.rep(world, 2), g.rep(world, 2));
            let Ok(p23) = p2.union(&p3) else { continue };
            done += 1;
            let cat = g.cat.clone();
            let lhs = gamma_generic(&cat, &p1, &p23);
            let rhs = gamma_generic(&cat, &p1, &p2).and_then(|a| a.mul(&gamma_generic(&cat, &p1, &p3)?));
            rep.check(lhs.is_ok() && lhs == rhs, || {
                format!("γ({}, {} ⊔ {})", p1.describe(), p2.describe(), p3.describe())
            });
            log_segments(log, &cat, &p1, &p23);

            let (d1, d2) = (g.segment(world), g.segment(world));
            let whole = gamma_generic(&cat, &single(&d1), &single(&d2)).unwrap();
            let mut prod = GammaClass::unit(world);
            for a in d1.symbols() {
                for b in d2.symbols() {
                    let ga = gamma_generic(&cat, &single(&Segment::new(&a, 0, 0).unwrap()), &single(&Segment::new(&b, 0, 0).unwrap())).unwrap();
                    prod = prod.mul(&ga).unwrap();
                }
            }
            rep.check(whole == prod, || {
                format!("Steinberg product fails for {} × {}", d1.describe(), d2.describe())
            });
        }
    }
    rep
}

fn single(d: &Segment) -> GenericRep {
    GenericRep::new(d.world(), vec![d.clone()]).unwrap()
}

fn banal_part_suite(seed: u64, log: &mut FactorLog) -> SuiteReport {
    let mut rep = SuiteReport::new("banal-part");
    let mut mixed = 0;
    for ctx in contexts() {
        let mut g = Gen::new(ctx, seed);
        for _ in 0..100 {
            let (p1, p2) = (g.rep(World::ModL, 3), g.rep(World::ModL, 3));
            let (b1, n1) = p1.banal_split().unwrap();
            let (b2, _) = p2.banal_split().unwrap();
            if !b1.segments().is_empty() && !n1.segments().is_empty() {
                mixed += 1;
            }
            let full = l_generic(&g.cat, &p1, &p2).unwrap();
            let mut part = EulerFactor::one(World::ModL);
            for a in b1.segments() {
                for b in b2.segments() {
                    part = part.mul(&l_segments(&g.cat, a, b).unwrap()).unwrap();
                }
            }
            rep.check(full == part, || {
                format!("{} × {}: {full} vs banal part {part}", p1.describe(), p2.describe())
            });
            log_segments(log, &g.cat, &p1, &p2);
        }
    }
    rep.notes.push(format!("{mixed} representations with both banal and non-banal segments"));
    rep
}

fn compat_suite(seed: u64, log: &mut FactorLog) -> SuiteReport {
    let mut rep = SuiteReport::new("compat");
    let mut strict = 0;
    for ctx in contexts() {
        let mut g = Gen::new(ctx, seed);
        for _ in 0..100 {
            let (p1, p2) = (g.rep(World::ModL, 2), g.rep(World::ModL, 2));
            match check_compat1(&g.cat, &p1, &p2) {
                Ok(r) => {
                    strict += r.strict() as usize;
                    rep.check(r.holds(), || format!("{} × {}: {:?}", p1.describe(), p2.describe(), r));
                }
                Err(e) => rep.absorb(Err(e), || format!("{} × {}", p1.describe(), p2.describe())),
            }
            log_segments(log, &g.cat, &p1, &p2);
        }
    }
    let ctx = PrimeContext::new(3, 7).unwrap();
    let cat = suite_catalog(ctx);
    let t = CuspidalSymbol::new(
        &cat,
        World::ModL,
        "triv",
        Scalar::one(World::ModL, 3),
        InertialTag::zero(),
        Structure::Supercuspidal,
    )
    .unwrap();
    let pi = single(&Segment::new(&t, 0, 0).unwrap());
    let r = check_compat1(&cat, &pi, &pi).unwrap();
    let want = EulerFactor::from_roots(World::ModL, [Scalar::one(World::ModL, 3)]).unwrap();
    rep.check(r.holds() && r.l_modl.is_one() && r.l_lift_reduced == want, || {
        format!("ℓ=3 q=7 trivial characters: {r:?}")
    });
    rep.notes
        .push(format!("ℓ=3 q=7 trivial characters: {} divides {}", r.l_modl, r.l_lift_reduced));
    rep.notes.push(format!("{strict} random pairs with strict division"));
    rep
}

/// Contexts and line types for the GCD suite.
fn gcd_segments(ctx: PrimeContext) -> (Catalog, Vec<Segment>) {
    let cat = suite_catalog(ctx);
    let ell = ctx.ell();
    let mut syms = Vec::new();
    for label in ["triv", "sc2"] {
        for t in [ModScalar::one(ell), ctx.q_bar().inv().unwrap()] {
            syms.push(CuspidalSymbol::new(&cat, World::ModL, label, Scalar::Mod(t), InertialTag::zero(), Structure::Supercuspidal).unwrap());
        }
    }
    let base = syms[0].clone();
    let st = Structure::NonSupercuspidal { r: 0, base: Box::new(base) };
    syms.push(CuspidalSymbol::new(&cat, World::ModL, "st", Scalar::one(World::ModL, ell), InertialTag::zero(), st).unwrap());
    let mut segs = Vec::new();
    for rho in &syms {
        let kmax = (rho.invariants().e.unwrap() - 1).min(3) as i64;
        for k in 1..=kmax {
            segs.push(Segment::new(rho, 0, k - 1).unwrap());
        }
    }
    segs.sort();
    segs.dedup();
    (cat, segs)
}

fn kind(d: &Segment) -> &'static str {
    match (d.start().is_supercuspidal(), d.is_banal()) {
        (_, true) => "banal",
        (true, false) => "non-banal supercuspidal",
        (false, false) => "non-banal St_r",
    }
}

fn gcd_suite(log: &mut FactorLog) -> SuiteReport {
    let mut rep = SuiteReport::new("gcd");
    let mut kinds: HashMap<&str, usize> = HashMap::new();
    for (ell, q) in [(3u64, 2u64), (5, 2), (7, 2), (2, 3), (3, 7)] {
        let ctx = PrimeContext::new(ell, q).unwrap();
        let (cat, segs) = gcd_segments(ctx);
        for d1 in &segs {
            for d2 in &segs {
                let (p1, p2) = (single(d1), single(d2));
                *kinds.entry(kind(d1)).or_default() += 1;
                match gcd_over_lifts(&cat, &p1, &p2) {
                    Ok((g, cert)) => {
                        rep.cases += 1;
                        let pair = cert.achieving.map_or("none".to_string(), |(i, j)| {
                            format!("{} ⊗ {}", cert.lifts_left[i].describe(), cert.lifts_right[j].describe())
                        });
                        rep.notes.push(format!(
                            "ℓ={ell} q={q} {} × {}: GCD over {}×{} lifts = {} attained by {pair}",
                            d1.describe(),
                            d2.describe(),
                            cert.lifts_left.len(),
                            cert.lifts_right.len(),
                            g.render()
                        ));
                        for (i, j, _) in &cert.reduced {
                            let (a, b) = (&cert.lifts_left[*i], &cert.lifts_right[*j]);
                            log_segments(log, &cat, a, b);
                        }
                        log.push((cat.clone(), d1.clone(), d2.clone(), g));
                    }
                    Err(e) => rep.absorb(Err(e), || format!("ℓ={ell} q={q} {} × {}", d1.describe(), d2.describe())),
                }
            }
        }
    }
    let mut kinds: Vec<_> = kinds.into_iter().collect();
    kinds.sort();
    rep.notes.insert(0, format!("left-segment types: {kinds:?}"));
    rep
}

/// Oracle results for one product character.
struct OracleEntry<E> {
    alpha: Option<E>,
    epsilon: (E, i64),
    consistent: bool,
    gamma: Rational<E>,
}

fn oracle_entry<F: CyclotomicField>(model: &Model<F>, prod: &Gl1Datum, ctx: &PrimeContext) -> Result<OracleEntry<F::E>> {
    let q = model.q();
    let c1 = prod.character(&model.field, q);
    let c2 = Gl1Datum::new(ctx, 0, 0, 0).character(&model.field, q);
    let cert = tate_l_via_ideal(model, &c1, &c2)?;
    let eps = epsilon_extract(model, &c1, &c2)?;
    let epsilon = eps.epsilon.clone().ok_or_else(|| Error::Certification("no ε extracted".into()))?;
    let gamma = gamma_rational(model, &c1, &c2, &epsilon)?;
    Ok(OracleEntry {
        alpha: cert.alpha,
        epsilon,
        consistent: eps.consistent,
        gamma,
    })
}

/// Engine factors against the GL₁ integral oracle for `χ1 × χ2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl1Comparison {
    pub engine_adic: EulerFactor,
    pub oracle_adic: EulerFactor,
    pub engine_mod: EulerFactor,
    pub oracle_mod: EulerFactor,
    /// `ε = c·X^k` in each world, `c` encoded.
    pub epsilon_adic: (String, i64),
    pub epsilon_mod: (String, i64),
    pub gamma_adic: String,
    pub gamma_mod: String,
    /// `ε` independent of the test function, in both worlds.
    pub consistent: bool,
    pub epsilon_unit: bool,
    pub gamma_reduces: bool,
    /// `r(ε) = ε mod ℓ`, checked for banal pairs only.
    pub epsilon_reduces: Option<bool>,
}

impl Gl1Comparison {
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.engine_adic != self.oracle_adic {
            out.push(format!("ℓ-adic engine {} vs oracle {}", self.engine_adic, self.oracle_adic));
        }
        if self.engine_mod != self.oracle_mod {
            out.push(format!("mod-ℓ engine {} vs oracle {}", self.engine_mod, self.oracle_mod));
        }
        if !self.consistent {
            out.push("ε depends on the test function".into());
        }
        if !self.epsilon_unit {
            out.push(format!("ε constant {} is not an ℓ-unit", self.epsilon_adic.0));
        }
        if !self.gamma_reduces {
            out.push("r(γ) differs from the mod-ℓ γ".into());
        }
        if self.epsilon_reduces == Some(false) {
            out.push("r(ε) differs from the mod-ℓ ε".into());
        }
        out
    }
}

struct OracleModels {
    ctx: PrimeContext,
    cat: Catalog,
    char0: Model<Cyclotomic>,
    modl: Model<ModField>,
}

impl OracleModels {
    fn new(ctx: PrimeContext, window: i64) -> Result<Self> {
        let n = zeta_order(&ctx);
        Ok(OracleModels {
            ctx,
            cat: gl1_catalog(ctx)?,
            char0: Model::new(Cyclotomic::new(n), ctx.q(), window)?,
            modl: Model::new(ModField::new(ctx.ell(), n), ctx.q(), window)?,
        })
    }

    fn compare(&self, c0: &OracleEntry<Vec<BigRational>>, m: &OracleEntry<ModScalar>, d1: &Gl1Datum, d2: &Gl1Datum) -> Result<Gl1Comparison> {
        let (ctx, cat, f0, fm) = (&self.ctx, &self.cat, &self.char0.field, &self.modl.field);
        let (ell, q, n) = (ctx.ell(), ctx.q(), zeta_order(ctx));
        let (a1, a2) = (d1.symbol(cat, World::LAdic)?, d2.symbol(cat, World::LAdic)?);
        let (m1, m2) = (d1.symbol(cat, World::ModL)?, d2.symbol(cat, World::ModL)?);
        let oracle_adic = match &c0.alpha {
            None => EulerFactor::one(World::LAdic),
            Some(a) => {
                let (e, j) = recognize_q_zeta(f0, q, a, 2 * self.char0.precision)?;
                EulerFactor::from_roots(World::LAdic, [Scalar::Adic(AdicUnit::q_power(ell, e).mul(&adic_zeta(ell, n, j)))])?
            }
        };
        let oracle_mod = match &m.alpha {
            None => EulerFactor::one(World::ModL),
            Some(a) => EulerFactor::from_roots(World::ModL, [Scalar::Mod(*a)])?,
        };
        let (c, k) = &c0.epsilon;
        let (cm, km) = &m.epsilon;
        let epsilon_unit = f0.inv(c).is_some_and(|ci| f0.is_ell_integral(c, ell) && f0.is_ell_integral(&ci, ell));
        let gamma_reduces = c0.gamma.map(fm, |x| f0.reduce_mod(x, ell)).is_some_and(|r| r.same(fm, &m.gamma));
        let epsilon_reduces = m1.is_banal().then(|| f0.reduce_mod(c, ell) == Some(*cm) && k == km);
        Ok(Gl1Comparison {
            engine_adic: l_cuspidal(cat, &a1, &a2)?,
            oracle_adic,
            engine_mod: l_cuspidal(cat, &m1, &m2)?,
            oracle_mod,
            epsilon_adic: (f0.encode(c), *k),
            epsilon_mod: (fm.encode(cm), *km),
            gamma_adic: c0.gamma.encode(f0),
            gamma_mod: m.gamma.encode(fm),
            consistent: c0.consistent && m.consistent,
            epsilon_unit,
            gamma_reduces,
            epsilon_reduces,
        })
    }
}

/// Runs the oracle on `χ1 × χ2` in both worlds and compares with the engine.
pub fn compare_gl1(ctx: PrimeContext, d1: &Gl1Datum, d2: &Gl1Datum, window: i64) -> Result<Gl1Comparison> {
    let models = OracleModels::new(ctx, window)?;
    let prod = d1.product(d2, &ctx);
    let c0 = oracle_entry(&models.char0, &prod, &ctx)?;
    let m = oracle_entry(&models.modl, &prod, &ctx)?;
    models.compare(&c0, &m, d1, d2)
}

/// Residue sizes and the primes `ℓ ∤ q` exercised by the oracle suite.
pub const ORACLE_CONTEXTS: [(u64, [u64; 3]); 4] = [(2, [3, 5, 7]), (3, [2, 5, 7]), (4, [3, 5, 7]), (5, [2, 3, 7])];

fn oracle_suite(window: i64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("oracle");
    let (mut eps_checked, mut adic_poles, mut mod_poles) = (0, 0, 0);
    for (q, ls) in ORACLE_CONTEXTS {
        // The characteristic-0 model depends on q only.
        let mut c0_cache: HashMap<Gl1Datum, OracleEntry<Vec<BigRational>>> = HashMap::new();
        for ell in ls {
            let ctx = PrimeContext::new(ell, q)?;
            let models = OracleModels::new(ctx, window)?;
            if ell == ls[0] {
                for (name, phi) in models.char0.family() {
                    let ok = fourier_inversion_holds(&models.char0.field, &models.char0.res, &phi);
                    rep.check(ok, || format!("q={q}: Fourier inversion fails on {name}"));
                }
            }
            let mut m_cache: HashMap<Gl1Datum, OracleEntry<ModScalar>> = HashMap::new();
            let data: Vec<Gl1Datum> = (0..2)
                .flat_map(|e| (0..2).flat_map(move |s| (0..q as i64 - 1).map(move |j| (e, s, j))))
                .map(|(e, s, j)| Gl1Datum::new(&ctx, e, s, j))
                .collect();
            for d1 in &data {
                for d2 in &data {
                    let prod = d1.product(d2, &ctx);
                    if let std::collections::hash_map::Entry::Vacant(e) = c0_cache.entry(prod) {
                        e.insert(oracle_entry(&models.char0, &prod, &ctx)?);
                    }
                    if let std::collections::hash_map::Entry::Vacant(e) = m_cache.entry(prod) {
                        e.insert(oracle_entry(&models.modl, &prod, &ctx)?);
                    }
                    let cmp = models.compare(&c0_cache[&prod], &m_cache[&prod], d1, d2)?;
                    adic_poles += !cmp.oracle_adic.is_one() as usize;
                    mod_poles += !cmp.oracle_mod.is_one() as usize;
                    eps_checked += cmp.epsilon_reduces.is_some() as usize;
                    let fails = cmp.failures();
                    rep.check(fails.is_empty(), || format!("q={q} ℓ={ell} {d1:?} × {d2:?}: {}", fails.join("; ")));
                }
            }
        }
    }
    rep.notes.push(format!("{eps_checked} banal pairs with r(ε) = ε mod ℓ"));
    rep.notes
        .push(format!("oracle poles: {adic_poles} ℓ-adic pairs, {mod_poles} mod-ℓ pairs"));
    Ok(rep)
}

fn poles_suite(seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("poles");
    let mut log = FactorLog::new();
    cuspidal_suite(seed, &mut log);
    degeneration_suite(seed, &mut log, ORACLE_WINDOW)?;
    segments_suite(&mut log);
    gamma_suite(seed, &mut log);
    banal_part_suite(seed, &mut log);
    compat_suite(seed, &mut log);
    gcd_suite(&mut log);
    for (cat, d1, d2, l) in &log {
        rep.check(pole_containment_holds(cat, d1, d2, l), || {
            format!("{} × {}: {l} escapes the pole set", d1.describe(), d2.describe())
        });
    }
    rep.notes
        .push(format!("{} segment-level factors checked for pole containment", log.len()));
    let mut disjoint = 0;
    for ctx in contexts() {
        let mut g = Gen::new(ctx, seed.wrapping_add(1));
        for _ in 0..100 {
            let world = g.world();
            let rho = single(&g.segment(world));
            let s1 = g.segment(world);
            let mut s2 = g.segment(world);
            while s1.start().offset_to(s2.start()).is_some() {
                s2 = g.segment(world);
            }
            let (p1, p2) = (line_rep(&mut g, &s1), line_rep(&mut g, &s2));
            let l1 = l_generic(&g.cat, &rho, &p1)?;
            let l2 = l_generic(&g.cat, &rho, &p2)?;
            disjoint += 1;
            rep.check(l1.gcd(&l2)?.is_one(), || {
                format!("{} shares a pole with {} and {}", rho.describe(), p1.describe(), p2.describe())
            });
        }
    }
    rep.notes.push(format!("{disjoint} distinct-line triples checked for disjoint poles"));
    Ok(rep)
}

/// A generic representation supported on the cuspidal line of `s`.
fn line_rep(g: &mut Gen, s: &Segment) -> GenericRep {
    let mut segs = vec![s.clone()];
    if g.rng.gen_bool(0.5) {
        let shift = g.rng.gen_range(-3..=3);
        let other = s.nu_shift(shift);
        if !linked(s, &other) {
            segs.push(other);
        }
    }
    GenericRep::new(s.world(), segs).unwrap()
}

fn linkage_suite() -> SuiteReport {
    let mut rep = SuiteReport::new("linkage");
    let ctx = PrimeContext::new(7, 2).unwrap();
    let cat = suite_catalog(ctx);
    let t = CuspidalSymbol::new(
        &cat,
        World::LAdic,
        "triv",
        Scalar::one(World::LAdic, 7),
        InertialTag::zero(),
        Structure::Supercuspidal,
    )
    .unwrap();
    let mut segs = Vec::new();
    for a in -6..=6 {
        for b in a..=(a + 3).min(6) {
            segs.push((a, b, Segment::new(&t, a, b).unwrap()));
        }
    }
    for (a1, b1, s1) in &segs {
        for (a2, b2, s2) in &segs {
            rep.check(linked_interval(s1, s2) == linked_by_extraction(s1, s2), || {
                format!("[{a1},{b1}] vs [{a2},{b2}]")
            });
        }
    }
    let m = CuspidalSymbol::new(
        &cat,
        World::ModL,
        "triv",
        Scalar::one(World::ModL, 7),
        InertialTag::zero(),
        Structure::Supercuspidal,
    )
    .unwrap();
    let seg = |a, b| Segment::new(&m, a, b).unwrap();
    let cases = [
        ((0, 1), (2, 2), true),
        ((0, 1), (0, 0), false),
        ((0, 0), (1, 1), true),
        ((0, 1), (1, 2), true),
        ((0, 0), (0, 0), false),
        ((1, 1), (0, 1), false),
        ((0, 1), (2, 3), true),
        ((0, 0), (2, 2), true),
        ((0, 1), (3, 4), false),
    ];
    for ((a1, b1), (a2, b2), want) in cases {
        let got = linked(&seg(a1, b1), &seg(a2, b2));
        rep.check(got == want, || format!("circle o=3: [{a1},{b1}] vs [{a2},{b2}] gave {got}"));
    }
    rep.notes.push(format!("{} circle spot checks at ℓ=7, q=2", cases.len()));
    rep
}
