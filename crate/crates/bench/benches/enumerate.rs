use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use mcds_core::generate::{gnp, random_connected, rng_from_seed};
use mcds_core::probe::greedy_probe;
use mcds_core::{enumerate_downward_closed, enumerate_mcds, Algo, ProbeParams, RunConfig};

fn oracle_vs_structured(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for n in [10usize, 12, 14] {
        let g = gnp(n, 0.4, &mut rng_from_seed(n as u64)).unwrap();
        for algo in [Algo::Oracle, Algo::Structured] {
            let cfg = RunConfig {
                algo,
                ..RunConfig::default()
            };
            group.bench_with_input(BenchmarkId::new(format!("{algo:?}"), n), &g, |b, g| {
                b.iter(|| enumerate_mcds(black_box(g), &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn probe(c: &mut Criterion) {
    let mut rng = rng_from_seed(3);
    let g = random_connected(2_000, 0.005, &mut rng).unwrap();
    let params = ProbeParams::new(3, 8, mcds_core::Fraction::from_parts(1, 60)).unwrap();
    c.bench_function("probe n=2000", |b| {
        b.iter(|| greedy_probe(black_box(&g), &params))
    });
}

fn downward_family(c: &mut Criterion) {
    let g = gnp(16, 0.3, &mut rng_from_seed(5)).unwrap();
    c.bench_function("independent sets n=16", |b| {
        b.iter(|| {
            enumerate_downward_closed(&g.vertices(), |s: &mcds_core::VertexSet| {
                g.is_independent(s)
            })
            .count()
        })
    });
}

criterion_group!(benches, oracle_vs_structured, probe, downward_family);
criterion_main!(benches);
