use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use skein_bench::{links, rational_terms};
use skein_core::invariants::{default_orientation, homfly, kauffman};
use skein_core::jaeger::jaeger_kauffman;
use skein_core::schur::{build_rep, divided_power_failures, presentation_failures, theta_rank};
use skein_core::RatFun;

fn ring(c: &mut Criterion) {
    let xs = rational_terms();
    c.bench_function("ratfun/sum of six", |b| b.iter(|| black_box(&xs).iter().fold(RatFun::zero(), |acc, x| &acc + x)));
    c.bench_function("ratfun/product of six", |b| b.iter(|| black_box(&xs).iter().fold(RatFun::one(), |acc, x| &acc * x)));
}

fn invariants(c: &mut Criterion) {
    for (name, d) in links() {
        c.bench_function(&format!("kauffman/{name}"), |b| b.iter(|| kauffman(black_box(&d))));
        let o = default_orientation(&d);
        c.bench_function(&format!("homfly/{name}"), |b| b.iter(|| homfly(black_box(&o)).unwrap()));
    }
    let (_, fig8) = links().swap_remove(1);
    c.bench_function("jaeger/figure-eight", |b| b.iter(|| jaeger_kauffman(black_box(&fig8))));
}

fn schur(c: &mut Criterion) {
    let mut g = c.benchmark_group("schur");
    g.sample_size(10);
    g.bench_function("theta rank n=3 N=3", |b| b.iter(|| theta_rank(3, 3).unwrap()));
    let ctx = build_rep(3, 4).unwrap();
    g.bench_function("presentation n=3 d=4", |b| b.iter(|| presentation_failures(black_box(&ctx)).unwrap()));
    g.bench_function("divided powers n=3 d=4", |b| b.iter(|| divided_power_failures(black_box(&ctx)).unwrap()));
    g.finish();
}

criterion_group!(benches, ring, invariants, schur);
criterion_main!(benches);
