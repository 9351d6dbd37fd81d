use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use orbicurve::sweep::{index_scan_sweep, random_complex_checks, sweep, Executor};

const EXECUTORS: [(&str, Executor); 2] = [("sequential", Executor::Sequential), ("parallel", Executor::Parallel)];

fn cone_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("cone_sweep");
    group.sample_size(10);
    for (name, exec) in EXECUTORS {
        group.bench_with_input(BenchmarkId::new(name, 20), &20, |b, &p_max| {
            b.iter(|| sweep(p_max, exec).unwrap())
        });
    }
    group.finish();
}

fn index_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("index_scan");
    for (name, exec) in EXECUTORS {
        group.bench_with_input(BenchmarkId::new(name, 60), &60, |b, &p_max| {
            b.iter(|| index_scan_sweep(p_max, exec))
        });
    }
    group.finish();
}

fn random_complexes(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_complexes");
    for (name, exec) in EXECUTORS {
        group.bench_with_input(BenchmarkId::new(name, 100), &100, |b, &count| {
            b.iter(|| random_complex_checks(0, count, 200, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, cone_sweep, index_scan, random_complexes);
criterion_main!(benches);
