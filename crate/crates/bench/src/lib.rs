//! Benchmark fixtures for the `rankin-core` engine.

use rankin_core::suites::suite_catalog;
use rankin_core::{Catalog, CuspidalSymbol, GenericRep, InertialTag, PrimeContext, Scalar, Segment, Structure, World};

/// Catalog at `(ℓ, q)` with the trivial-character symbol in `world`.
pub fn trivial(ell: u64, q: u64, world: World) -> (Catalog, CuspidalSymbol) {
    let cat = suite_catalog(PrimeContext::new(ell, q).expect("valid context"));
    let sym = CuspidalSymbol::new(
        &cat,
        world,
        "triv",
        Scalar::one(world, ell),
        InertialTag::zero(),
        Structure::Supercuspidal,
    )
    .expect("valid symbol");
    (cat, sym)
}

/// `Σ St(ν^{2i} ρ, k)` for `i < count`, spaced so no two segments are linked.
pub fn spaced_rep(rho: &CuspidalSymbol, k: i64, count: i64) -> GenericRep {
    let segs = (0..count)
        .map(|i| Segment::new(rho, i * (k + 2), i * (k + 2) + k - 1).expect("generic"))
        .collect();
    GenericRep::new(rho.world(), segs).expect("unlinked")
}
