use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dcmkit::offline::{solve_cp_offline, solve_dcm_offline, OfflineOptions};
use dcmkit::online::{dcmon, gcsr};
use dcmkit_bench::synthetic_instance;

fn offline(c: &mut Criterion) {
    let mut g = c.benchmark_group("offline");
    g.sample_size(10);
    for servers in [50u32, 200] {
        let inst = synthetic_instance(7, servers, 3);
        g.bench_with_input(BenchmarkId::new("joint", servers), &inst, |b, i| {
            b.iter(|| solve_dcm_offline(black_box(i), &OfflineOptions::default()).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("servers", servers), &inst, |b, i| {
            b.iter(|| solve_cp_offline(black_box(i)))
        });
    }
    g.finish();
}

fn online(c: &mut Criterion) {
    let inst = synthetic_instance(7, 200, 3);
    let mut g = c.benchmark_group("online");
    g.sample_size(10);
    for w in [0usize, 4, 24] {
        g.bench_with_input(BenchmarkId::new("gcsr", w), &w, |b, &w| b.iter(|| gcsr(black_box(&inst), w).unwrap()));
        g.bench_with_input(BenchmarkId::new("dcmon", w), &w, |b, &w| b.iter(|| dcmon(black_box(&inst), w).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, offline, online);
criterion_main!(benches);
