use num_rational::Ratio;
use proptest::prelude::*;
use rankin_core::factors::{l_cuspidal, l_generic};
use rankin_core::reps::{generic_from_support, linked, Catalog, CuspidalSymbol, GenericRep, InertialTag, Segment, Structure};
use rankin_core::suites::{suite_catalog, CONTEXTS};
use rankin_core::{AdicUnit, EulerFactor, GammaClass, ModScalar, PrimeContext, Scalar, World};

const LINES: [&str; 7] = ["triv", "a", "b", "ram2", "sc2", "c3", "c3d"];

fn ctx_of(i: usize) -> PrimeContext {
    let (l, q) = CONTEXTS[i % CONTEXTS.len()];
    PrimeContext::new(l, q).unwrap()
}

#[derive(Clone, Debug)]
struct SymSpec {
    line: usize,
    a: i64,
    root: (u64, i64),
    tag: i64,
}

fn sym_spec() -> impl Strategy<Value = SymSpec> {
    (0..LINES.len(), -3i64..=3, prop_oneof![Just(1u64), Just(2), Just(4)], 0i64..4, -1i64..=1).prop_map(|(line, a, m, k, tag)| SymSpec {
        line,
        a,
        root: (m, k),
        tag,
    })
}

fn root(ctx: &PrimeContext, (m, k): (u64, i64)) -> ModScalar {
    let ell = ctx.ell();
    let m = if m % ell == 0 { 1 } else { m };
    ModScalar::root_of_unity(ell, m, k).unwrap()
}

fn build(cat: &Catalog, world: World, s: &SymSpec) -> CuspidalSymbol {
    let ctx = cat.ctx();
    let t = ctx.q_bar().pow(s.a).mul(&root(ctx, s.root));
    let (twist, tag) = match world {
        World::ModL => (Scalar::Mod(t), InertialTag::zero()),
        World::LAdic => (
            Scalar::Adic(AdicUnit::new(s.a, root(ctx, s.root), Ratio::new(0, 1)).unwrap()),
            InertialTag::new(Ratio::new(s.tag, ctx.ell() as i64)),
        ),
    };
    CuspidalSymbol::new(cat, world, LINES[s.line], twist, tag, Structure::Supercuspidal).unwrap()
}

fn world_of(b: bool) -> World {
    if b {
        World::ModL
    } else {
        World::LAdic
    }
}

fn seg(rho: &CuspidalSymbol, k: u64) -> Segment {
    let k = rho.invariants().e.map_or(k, |e| k.min(e - 1)).max(1);
    Segment::new(rho, 0, k as i64 - 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reduction_is_multiplicative(c in 0usize..7, a in -5i64..5, b in -5i64..5, r1 in sym_spec(), r2 in sym_spec()) {
        let ctx = ctx_of(c);
        let x = AdicUnit::new(a, root(&ctx, r1.root), Ratio::new(r1.tag, ctx.ell() as i64)).unwrap();
        let y = AdicUnit::new(b, root(&ctx, r2.root), Ratio::new(r2.tag, ctx.ell() as i64)).unwrap();
        prop_assert_eq!(x.mul(&y).reduce(&ctx), x.reduce(&ctx).mul(&y.reduce(&ctx)));
        prop_assert_eq!(x.inv().reduce(&ctx), x.reduce(&ctx).inv().unwrap());
    }

    #[test]
    fn euler_factor_lattice(c in 0usize..7, xs in prop::collection::vec(-4i64..4, 0..5), ys in prop::collection::vec(-4i64..4, 0..5), modl in any::<bool>()) {
        let ctx = ctx_of(c);
        let w = world_of(modl);
        let f = |v: &Vec<i64>| EulerFactor::from_roots(w, v.iter().map(|&e| Scalar::q_power(w, &ctx, e))).unwrap();
        let (a, b) = (f(&xs), f(&ys));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        prop_assert_eq!(g.clone(), b.gcd(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().degree(), a.degree() + b.degree());
        prop_assert!(a.divides(&a.mul(&b).unwrap()).unwrap());
    }

    #[test]
    fn reduce_commutes_with_product(c in 0usize..7, xs in prop::collection::vec(-4i64..4, 0..5), ys in prop::collection::vec(-4i64..4, 0..5)) {
        let ctx = ctx_of(c);
        let f = |v: &Vec<i64>| EulerFactor::from_roots(World::LAdic, v.iter().map(|&e| Scalar::q_power(World::LAdic, &ctx, e))).unwrap();
        let (a, b) = (f(&xs), f(&ys));
        let lhs = a.mul(&b).unwrap().reduce(&ctx).unwrap();
        let rhs = a.reduce(&ctx).unwrap().mul(&b.reduce(&ctx).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_reduction_is_multiplicative(c in 0usize..7, xs in prop::collection::vec(-3i64..3, 0..4), ys in prop::collection::vec(-3i64..3, 0..4)) {
        let ctx = ctx_of(c);
        let f = |v: &[i64]| EulerFactor::from_roots(World::LAdic, v.iter().map(|&e| Scalar::q_power(World::LAdic, &ctx, e))).unwrap();
        let g1 = GammaClass::make(&f(&xs), &f(&ys)).unwrap();
        let g2 = GammaClass::make(&f(&ys), &f(&xs[..xs.len() / 2])).unwrap();
        let lhs = g1.mul(&g2).unwrap().reduce_modl(&ctx).unwrap();
        let rhs = g1.reduce_modl(&ctx).unwrap().mul(&g2.reduce_modl(&ctx).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embeddings_are_compatible(c in 0usize..7, k in 0i64..12, j in 0i64..12) {
        let ctx = ctx_of(c);
        let ell = ctx.ell();
        let orders: Vec<u64> = [2u64, 3, 4, 6].into_iter().filter(|m| (2 * m) % ell != 0).collect();
        for &m in &orders {
            let z = ModScalar::root_of_unity(ell, m, k).unwrap();
            let big = ModScalar::root_of_unity(ell, 2 * m, 2 * k).unwrap();
            prop_assert_eq!(z, big);
            let prod = z.mul(&ModScalar::root_of_unity(ell, m, j).unwrap());
            prop_assert_eq!(prod, ModScalar::root_of_unity(ell, m, k + j).unwrap());
        }
    }

    #[test]
    fn dual_and_twist_are_involutive(c in 0usize..7, s in sym_spec(), modl in any::<bool>(), t in sym_spec()) {
        let ctx = ctx_of(c);
        let cat = suite_catalog(ctx);
        let w = world_of(modl);
        let r = build(&cat, w, &s);
        prop_assert_eq!(r.dual(&cat).dual(&cat), r.clone());
        let u = build(&cat, w, &SymSpec { line: 0, ..t }).twist();
        prop_assert_eq!(r.twisted(&u).twisted(&u.inv()), r.clone());
        prop_assert_eq!(r.nu_shift(2).nu_shift(-2), r.clone());
        prop_assert_eq!(r.twisted(&u).dual(&cat), r.dual(&cat).twisted(&u.inv()));
    }

    #[test]
    fn linkage_is_symmetric_under_dual_and_twist(c in 0usize..7, s in sym_spec(), a1 in -4i64..4, k1 in 1i64..4, a2 in -4i64..4, k2 in 1i64..4, modl in any::<bool>()) {
        let ctx = ctx_of(c);
        let cat = suite_catalog(ctx);
        let r = build(&cat, world_of(modl), &s);
        let (Ok(d1), Ok(d2)) = (Segment::new(&r, a1, a1 + k1 - 1), Segment::new(&r, a2, a2 + k2 - 1)) else { return Ok(()) };
        prop_assert_eq!(linked(&d1, &d2), linked(&d2, &d1));
        prop_assert_eq!(linked(&d1, &d2), linked(&d1.dual(&cat), &d2.dual(&cat)));
        let u = Scalar::q_power(r.world(), &ctx, 1);
        prop_assert_eq!(linked(&d1, &d2), linked(&d1.twisted(&u), &d2.twisted(&u)));
    }

    #[test]
    fn banal_split_partitions(c in 0usize..7, specs in prop::collection::vec((sym_spec(), 1u64..4), 1..4)) {
        let ctx = ctx_of(c);
        let cat = suite_catalog(ctx);
        let segs: Vec<Segment> = specs.iter().map(|(s, k)| seg(&build(&cat, World::ModL, s), *k)).collect();
        let Ok(pi) = GenericRep::new(World::ModL, segs) else { return Ok(()) };
        let (b, n) = pi.banal_split().unwrap();
        prop_assert!(b.segments().iter().all(|s| s.is_banal()));
        prop_assert!(n.segments().iter().all(|s| !s.is_banal()));
        prop_assert_eq!(b.union(&n).unwrap(), pi.clone());
        prop_assert_eq!(b.size() + n.size(), pi.size());
    }

    #[test]
    fn support_rebuilds_generic(c in 0usize..7, s in sym_spec(), pos in prop::collection::vec(-3i64..4, 1..6)) {
        let ctx = ctx_of(c);
        let cat = suite_catalog(ctx);
        let base = build(&cat, World::LAdic, &SymSpec { tag: 0, ..s });
        let segs = generic_from_support(&base, &pos).unwrap();
        let total: u64 = segs.iter().map(|s| s.len()).sum();
        prop_assert_eq!(total as usize, pos.len());
        for (i, a) in segs.iter().enumerate() {
            for b in &segs[i + 1..] {
                prop_assert!(!linked(a, b));
            }
        }
    }

    #[test]
    fn l_factor_is_symmetric(c in 0usize..7, specs in prop::collection::vec((sym_spec(), 1u64..4, any::<bool>()), 2..5), modl in any::<bool>()) {
        let ctx = ctx_of(c);
        let cat = suite_catalog(ctx);
        let w = world_of(modl);
        let segs: Vec<Segment> = specs.iter().map(|(s, k, _)| seg(&build(&cat, w, s), *k)).collect();
        let (left, right): (Vec<_>, Vec<_>) = segs.into_iter().zip(&specs).partition(|(_, (_, _, side))| *side);
        let mk = |v: Vec<(Segment, &(SymSpec, u64, bool))>| GenericRep::new(w, v.into_iter().map(|p| p.0).collect());
        let (Ok(p1), Ok(p2)) = (mk(left), mk(right)) else { return Ok(()) };
        prop_assert_eq!(l_generic(&cat, &p1, &p2).unwrap(), l_generic(&cat, &p2, &p1).unwrap());
    }

    #[test]
    fn poles_follow_twist_relation(c in 0usize..7, s in sym_spec(), t in sym_spec(), modl in any::<bool>()) {
        let ctx = ctx_of(c);
        let cat = suite_catalog(ctx);
        let w = world_of(modl);
        let r1 = build(&cat, w, &s);
        let u = build(&cat, w, &SymSpec { line: 0, ..t }).twist();
        let r2 = r1.dual(&cat).twisted(&u);
        let l = l_cuspidal(&cat, &r1, &r2).unwrap();
        if r1.is_banal() {
            prop_assert_eq!(l.degree(), r1.f());
            let uf = u.pow(r1.f() as i64);
            for alpha in l.roots().keys() {
                prop_assert_eq!(alpha.pow(r1.f() as i64), uf);
            }
        } else {
            prop_assert!(l.is_one());
        }
    }
}
