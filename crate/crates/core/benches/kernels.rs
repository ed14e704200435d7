//! Parallel against sequential on the kernels that fan out: dense products,
//! fusion certification, the fusion identities and random-structure sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polyad_core::random::{self, pool, random_matrix, random_structure};
use polyad_core::{fixtures, par, PrimeField, Rationals};

const MODES: [(&str, bool); 2] = [("parallel", true), ("sequential", false)];

fn matmul(c: &mut Criterion) {
    let f = PrimeField::new(101).unwrap();
    let mut g = c.benchmark_group("matmul F101");
    for n in [64, 192] {
        let mut rng = random::rng(n as u64);
        let (a, b) = (random_matrix(&f, n, n, &mut rng), random_matrix(&f, n, n, &mut rng));
        for (mode, on) in MODES {
            par::set_parallel(on);
            g.bench_with_input(BenchmarkId::new(mode, n), &n, |bch, _| bch.iter(|| black_box(a.mul(&b))));
        }
    }
    g.finish();
}

fn fusion(c: &mut Criterion) {
    let q = Rationals;
    let h = fixtures::hopf_category(&q, &fixtures::sweedler_algebra(&q), 2);
    let mut g = c.benchmark_group("hopfcat(sweedler,2)");
    g.sample_size(10);
    for (mode, on) in MODES {
        par::set_parallel(on);
        g.bench_function(BenchmarkId::new("is_hopf", mode), |b| b.iter(|| black_box(h.is_hopf())));
        g.bench_function(BenchmarkId::new("fusion identities", mode), |b| {
            b.iter(|| black_box(h.check_fusion_identities(&[(1, 1, 1)])))
        });
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let f = PrimeField::new(101).unwrap();
    let p = pool(&f);
    let mut g = c.benchmark_group("random sweep");
    g.sample_size(10);
    for (mode, on) in MODES {
        par::set_parallel(on);
        g.bench_function(mode, |b| {
            b.iter(|| {
                let mut rng = random::rng(1);
                for _ in 0..10 {
                    let (_, s) = random_structure(&f, &p, &mut rng);
                    black_box(s.check_fusion_identities(&[(1, 1, 1)]).passed());
                }
            })
        });
    }
    g.finish();
    par::set_parallel(true);
}

criterion_group!(benches, matmul, fusion, sweep);
criterion_main!(benches);
