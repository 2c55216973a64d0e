//! Combinatorial data model: cuspidal lines and symbols, segments, linkage,
//! generic representations, duals, twists and lifts.

mod generic;
mod line;
mod segment;
mod symbol;

pub use generic::{lift_family_segment, GenericRep};
pub use line::{Catalog, CuspidalLine, InertialTag, TagMap};
pub use segment::{generic_from_support, linked, linked_by_extraction, linked_interval, Segment};
pub use symbol::{cusp_twist_dual, CuspidalSymbol, Invariants, Structure};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalars::{AdicUnit, ModScalar, PrimeContext, Scalar, World};
    use num_rational::Ratio;

    fn line(label: &str, n: u64, f: u64, dual: &str, ell: u64) -> CuspidalLine {
        CuspidalLine {
            label: label.into(),
            n,
            f,
            dual_label: dual.into(),
            dual_twist: AdicUnit::one(ell),
            tag_map: TagMap::Negation,
        }
    }

    fn catalog(ell: u64, q: u64) -> Catalog {
        let ctx = PrimeContext::new(ell, q).unwrap();
        Catalog::new(
            ctx,
            [
                line("triv", 1, 1, "triv", ell),
                line("a", 1, 1, "b", ell),
                line("b", 1, 1, "a", ell),
                line("sc2", 2, 2, "sc2", ell),
            ],
        )
        .unwrap()
    }

    fn sym(cat: &Catalog, world: World, line: &str, twist: i64) -> CuspidalSymbol {
        let t = Scalar::Mod(ModScalar::from_int(cat.ctx().ell(), twist));
        let t = if world == World::LAdic { t.teichmuller_lift() } else { t };
        CuspidalSymbol::new(cat, world, line, t, InertialTag::zero(), Structure::Supercuspidal).unwrap()
    }

    #[test]
    fn invariants_examples() {
        let c = catalog(7, 2);
        let inv = sym(&c, World::ModL, "triv", 1).invariants();
        assert_eq!((inv.o, inv.e, inv.banal), (Some(3), Some(3), true));
        assert_eq!(inv.q_rho, Scalar::Mod(ModScalar::from_int(7, 2)));
        let c = catalog(3, 2);
        let inv = sym(&c, World::ModL, "sc2", 1).invariants();
        assert_eq!((inv.o, inv.e, inv.banal), (Some(1), Some(3), false));
        let inv = sym(&c, World::LAdic, "sc2", 1).invariants();
        assert_eq!((inv.o, inv.e, inv.banal), (None, None, true));
    }

    #[test]
    fn twist_dual_examples() {
        let c = catalog(5, 2);
        let t = sym(&c, World::ModL, "triv", 1);
        assert_eq!(cusp_twist_dual(&c, &t, &t), Some(Scalar::Mod(ModScalar::one(5))));
        assert_eq!(cusp_twist_dual(&c, &t, &sym(&c, World::ModL, "sc2", 1)), None);
        let c = catalog(3, 7);
        let a = sym(&c, World::LAdic, "triv", 1);
        let b = CuspidalSymbol::new(
            &c,
            World::LAdic,
            "triv",
            a.twist(),
            InertialTag::new(Ratio::new(1, 3)),
            Structure::Supercuspidal,
        )
        .unwrap();
        assert_eq!(cusp_twist_dual(&c, &a, &b), None);
        assert!(cusp_twist_dual(&c, &b, &b).is_none());
        let c = catalog(5, 2);
        let x = sym(&c, World::ModL, "a", 2);
        let y = sym(&c, World::ModL, "b", 3);
        assert_eq!(cusp_twist_dual(&c, &x, &y), Some(Scalar::Mod(ModScalar::one(5))));
        assert_eq!(cusp_twist_dual(&c, &x, &x), None);
    }

    #[test]
    fn twists_in_torsion_coset_are_identified() {
        let c = catalog(7, 2);
        let a = sym(&c, World::ModL, "sc2", 1);
        let b = sym(&c, World::ModL, "sc2", 6);
        assert_eq!(a, b);
        assert_ne!(a, sym(&c, World::ModL, "sc2", 2));
    }

    #[test]
    fn segment_construction_and_dual() {
        let c = catalog(7, 2);
        let t = sym(&c, World::ModL, "triv", 1);
        assert_eq!(Segment::new(&t, 0, 2), Err(Error::NotGeneric { k: 3, e: 3 }));
        let s = Segment::new(&t, 0, 1).unwrap();
        let d = s.dual(&c);
        assert_eq!(d, Segment::new(&t.dual(&c), -1, 0).unwrap());
        assert_eq!(d.dual(&c), s);
        assert_eq!(s.twisted(&Scalar::Mod(ModScalar::one(7))), s);
    }

    #[test]
    fn linkage_examples() {
        let c = catalog(7, 2);
        let t = sym(&c, World::LAdic, "triv", 1);
        let seg = |a, b| Segment::new(&t, a, b).unwrap();
        assert!(linked(&seg(0, 1), &seg(1, 2)));
        assert!(linked_by_extraction(&seg(0, 1), &seg(1, 2)));
        assert!(!linked(&seg(0, 1), &seg(0, 1)));
        assert!(!linked_by_extraction(&seg(0, 1), &seg(0, 1)));
        assert!(linked(&seg(0, 0), &seg(1, 1)));
        assert!(!linked(&seg(0, 0), &seg(2, 2)));
        let m = sym(&c, World::ModL, "triv", 1);
        let mseg = |a, b| Segment::new(&m, a, b).unwrap();
        assert!(linked(&mseg(0, 1), &mseg(2, 2)));
        assert!(!linked(&mseg(0, 1), &mseg(0, 0)));
        let other = sym(&c, World::ModL, "a", 1);
        assert!(!linked(&mseg(0, 1), &Segment::new(&other, 2, 2).unwrap()));
    }

    #[test]
    fn generic_rep_construction() {
        let c = catalog(7, 2);
        let t = sym(&c, World::LAdic, "triv", 1);
        assert_eq!(GenericRep::new(World::LAdic, vec![]).unwrap().size(), 0);
        let a = sym(&c, World::LAdic, "a", 1);
        let ok = GenericRep::new(World::LAdic, vec![Segment::new(&t, 0, 1).unwrap(), Segment::new(&a, 0, 0).unwrap()]);
        assert_eq!(ok.unwrap().size(), 3);
        let bad = GenericRep::new(World::LAdic, vec![Segment::new(&t, 0, 1).unwrap(), Segment::new(&t, 1, 2).unwrap()]);
        assert!(matches!(bad, Err(Error::Linked(_, _))));
    }

    #[test]
    fn banal_split_examples() {
        let c = catalog(3, 2);
        let t = Segment::new(&sym(&c, World::ModL, "triv", 1), 0, 0).unwrap();
        let s = Segment::new(&sym(&c, World::ModL, "sc2", 1), 0, 0).unwrap();
        let pi = GenericRep::new(World::ModL, vec![t.clone(), s.clone()]).unwrap();
        let (b, n) = pi.banal_split().unwrap();
        assert_eq!(b.segments(), &[t]);
        assert_eq!(n.segments(), &[s]);
        let c = catalog(3, 4);
        let t = Segment::new(&sym(&c, World::ModL, "triv", 1), 0, 0).unwrap();
        let pi = GenericRep::new(World::ModL, vec![t]).unwrap();
        let (b, n) = pi.banal_split().unwrap();
        assert!(b.segments().is_empty());
        assert_eq!(n, pi);
        assert!(pi.standard_lift().unwrap().banal_split().is_err());
    }

    #[test]
    fn support_decomposition() {
        let c = catalog(7, 2);
        let t = sym(&c, World::LAdic, "triv", 1);
        let segs = generic_from_support(&t, &[0, 1, 0]).unwrap();
        let mut want = vec![Segment::new(&t, 0, 1).unwrap(), Segment::new(&t, 0, 0).unwrap()];
        want.sort();
        assert_eq!(segs, want);
        assert_eq!(generic_from_support(&t, &[0, 1, 2]).unwrap(), vec![Segment::new(&t, 0, 2).unwrap()]);
        assert_eq!(generic_from_support(&t, &[0]).unwrap(), vec![Segment::new(&t, 0, 0).unwrap()]);
    }

    #[test]
    fn lift_families() {
        let c = catalog(3, 7);
        let t = Segment::new(&sym(&c, World::ModL, "triv", 1), 0, 0).unwrap();
        let fam = lift_family_segment(&t).unwrap();
        assert_eq!(fam.len(), 2);
        let tags: Vec<String> = fam.iter().map(|r| r.segments()[0].start().tag().to_string()).collect();
        assert_eq!(tags, vec!["0", "1/3"]);
        let c = catalog(7, 2);
        let t = Segment::new(&sym(&c, World::ModL, "triv", 3), 0, 1).unwrap();
        let fam = lift_family_segment(&t).unwrap();
        assert_eq!(fam, vec![GenericRep::new(World::ModL, vec![t]).unwrap().standard_lift().unwrap()]);
    }

    #[test]
    fn non_supercuspidal_lift_family() {
        let ctx = PrimeContext::new(3, 2).unwrap();
        let cat = Catalog::new(ctx, [line("triv", 1, 1, "triv", 3), line("st", 2, 2, "st", 3)]).unwrap();
        let mu = sym(&cat, World::ModL, "triv", 1);
        let st = Structure::NonSupercuspidal { r: 0, base: Box::new(mu) };
        let rho = CuspidalSymbol::new(&cat, World::ModL, "st", Scalar::Mod(ModScalar::one(3)), InertialTag::zero(), st).unwrap();
        assert!(!rho.is_banal());
        let seg = Segment::new(&rho, 0, 1).unwrap();
        let fam = lift_family_segment(&seg).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(fam.iter().all(|r| r.size() == seg.size()));
        assert!(fam[1].segments().iter().all(|s| s.start().n() < rho.n()));
        let bad = Structure::NonSupercuspidal {
            r: 1,
            base: Box::new(sym(&cat, World::ModL, "triv", 1)),
        };
        assert!(CuspidalSymbol::new(&cat, World::ModL, "st", Scalar::Mod(ModScalar::one(3)), InertialTag::zero(), bad).is_err());
    }

    #[test]
    fn catalog_validation() {
        let ctx = PrimeContext::new(5, 2).unwrap();
        let e = Catalog::new(ctx, [line("x", 1, 1, "y", 5)]).unwrap_err();
        assert!(e.to_string().contains("\"y\""));
        assert!(Catalog::new(ctx, [line("x", 2, 3, "x", 5)]).is_err());
    }
}
