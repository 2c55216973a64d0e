use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rankin_bench::{spaced_rep, trivial};
use rankin_core::factors::{gamma_generic, gcd_over_lifts, l_generic};
use rankin_core::suites::compare_gl1;
use rankin_core::tate::Gl1Datum;
use rankin_core::{PrimeContext, World};

fn factors(c: &mut Criterion) {
    let (cat, rho) = trivial(7, 2, World::LAdic);
    let p = spaced_rep(&rho, 2, 4);
    c.bench_function("l_generic l-adic 4x4 segments", |b| {
        b.iter(|| l_generic(&cat, black_box(&p), black_box(&p)).unwrap())
    });
    c.bench_function("gamma_generic l-adic 4x4 segments", |b| {
        b.iter(|| gamma_generic(&cat, black_box(&p), black_box(&p)).unwrap())
    });

    let (cat, rho) = trivial(7, 2, World::ModL);
    let st2 = spaced_rep(&rho, 2, 1);
    let ch = spaced_rep(&rho, 1, 1);
    c.bench_function("gcd_over_lifts St2 x chi at l=7 q=2", |b| {
        b.iter(|| gcd_over_lifts(&cat, black_box(&st2), black_box(&ch)).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let ctx = PrimeContext::new(3, 4).unwrap();
    let (d1, d2) = (Gl1Datum::new(&ctx, 1, 0, 1), Gl1Datum::new(&ctx, 0, 0, 0));
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("tate oracle q=4 l=3 M=20", |b| {
        b.iter(|| compare_gl1(ctx, black_box(&d1), black_box(&d2), 20).unwrap())
    });
    g.finish();
}

criterion_group!(benches, factors, oracle);
criterion_main!(benches);
