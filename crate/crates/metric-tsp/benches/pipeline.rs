use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use metric_tsp::batch::{run_experiment_sequential, ExperimentConfig};
use metric_tsp::corpus::{euclidean_unit_square, InstanceFamily};
use metric_tsp::pipeline::{solve_problem_a, SolveOptions};

fn bench_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    for n in [50usize, 100, 200] {
        let instance = euclidean_unit_square(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &instance, |b, m| {
            b.iter(|| solve_problem_a(m, &SolveOptions::default()).unwrap());
        });
    }
    group.finish();
}

fn experiment_config() -> ExperimentConfig {
    ExperimentConfig {
        n_min: 8,
        n_max: 12,
        trials: 16,
        seed: 99,
        family: InstanceFamily::EuclideanUnitSquare,
        oracle: true,
    }
}

/// Sequential vs rayon batch execution over the same trial grid.
fn bench_experiment(c: &mut Criterion) {
    let mut group = c.benchmark_group("experiment");
    group.sample_size(10);
    let cfg = experiment_config();
    group.bench_function("sequential", |b| {
        b.iter(|| run_experiment_sequential(&cfg).unwrap());
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| metric_tsp::batch::run_experiment_parallel(&cfg).unwrap());
    });
    group.finish();
}

criterion_group!(benches, bench_solve, bench_experiment);
criterion_main!(benches);
