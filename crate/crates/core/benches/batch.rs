use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shortcircuit::batch;
use shortcircuit::braid::random_pure_braid;
use shortcircuit::closure::{short_circuit_close, LongKnotDiagram};
use shortcircuit::invariants::fingerprint;
use shortcircuit::suites::{run_suite_sequential, Suite, SUITE_CROSSING_CAP};

const CASES: usize = 64;

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for suite in Suite::ALL {
        group.bench_with_input(BenchmarkId::new("sequential", suite), &suite, |b, &s| {
            b.iter(|| run_suite_sequential(s, 7, CASES, SUITE_CROSSING_CAP))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", suite), &suite, |b, &s| {
            b.iter(|| shortcircuit::suites::run_suite(s, 7, CASES, SUITE_CROSSING_CAP))
        });
    }
    group.finish();
}

fn fingerprints(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let diagrams: Vec<LongKnotDiagram> = (0..256)
        .map(|i| short_circuit_close(&random_pure_braid(3 + 2 * (i % 4), 24, &mut rng)).unwrap())
        .collect();
    let mut group = c.benchmark_group("fingerprints");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| batch::map_sequential(&diagrams, |d| fingerprint(d, SUITE_CROSSING_CAP).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| batch::map_parallel(&diagrams, |d| fingerprint(d, SUITE_CROSSING_CAP).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, suites, fingerprints);
criterion_main!(benches);
