//! Brute-force search benchmarks comparing the rayon-parallel engines
//! against a single worker thread (the sequential execution profile).
//!
//! With the `parallel` feature disabled the same entry points run the
//! sequential fallback and the two groups coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rearrange_core::framework::{circular_extrema_brute, entry_by_key};
use rearrange_core::kperm::{v_extrema_brute, w_extrema_brute, KPermProblem};
use rearrange_core::pool::{pool_extrema_brute, BlockObjective, PoolProblem};
use rearrange_core::progression::ArithProgression;
use rearrange_core::sequence::OrderedSequence;
use rearrange_core::{Limits, Rational};

fn int_problem(n: usize, k: usize) -> KPermProblem {
    KPermProblem::new(ArithProgression::integers(n).to_sequence(), k).unwrap()
}

#[cfg(feature = "parallel")]
fn run_with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[cfg(not(feature = "parallel"))]
fn run_with_threads<R: Send>(_threads: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

fn thread_counts() -> Vec<usize> {
    if cfg!(feature = "parallel") {
        vec![1, num_threads()]
    } else {
        vec![1]
    }
}

fn num_threads() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(4)
        .max(2)
}

fn bench_kperm(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("kperm_extrema");
    group.sample_size(10);
    for threads in thread_counts() {
        group.bench_with_input(
            BenchmarkId::new("v_n4_k4", threads),
            &threads,
            |bench, &t| {
                let p = int_problem(4, 4);
                bench.iter(|| run_with_threads(t, || v_extrema_brute(&p, &limits).unwrap()));
            },
        );
        group.bench_with_input(
            BenchmarkId::new("w_n4_k3", threads),
            &threads,
            |bench, &t| {
                let p = int_problem(4, 3);
                bench.iter(|| run_with_threads(t, || w_extrema_brute(&p, &limits).unwrap()));
            },
        );
    }
    group.finish();
}

fn bench_pool(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("pool_extrema");
    group.sample_size(10);
    for threads in thread_counts() {
        group.bench_with_input(
            BenchmarkId::new("v_n3_k3", threads),
            &threads,
            |bench, &t| {
                let p = PoolProblem::integers(3, 3);
                bench.iter(|| {
                    run_with_threads(t, || {
                        pool_extrema_brute(&p, BlockObjective::V, &limits).unwrap()
                    })
                });
            },
        );
        group.bench_with_input(
            BenchmarkId::new("w_n4_k2", threads),
            &threads,
            |bench, &t| {
                let p = PoolProblem::integers(4, 2);
                bench.iter(|| {
                    run_with_threads(t, || {
                        pool_extrema_brute(&p, BlockObjective::W, &limits).unwrap()
                    })
                });
            },
        );
    }
    group.finish();
}

fn bench_circular(c: &mut Criterion) {
    let limits = Limits::default();
    let entry = entry_by_key("times:sum").unwrap();
    let seq = OrderedSequence::sorted((1..=9i64).map(Rational::from_int).collect()).unwrap();
    let mut group = c.benchmark_group("circular_extrema");
    group.sample_size(10);
    for threads in thread_counts() {
        group.bench_with_input(BenchmarkId::new("n9", threads), &threads, |bench, &t| {
            bench.iter(|| {
                run_with_threads(t, || circular_extrema_brute(&entry, &seq, &limits).unwrap())
            });
        });
    }
    group.finish();
}

criterion_group!(benches, bench_kperm, bench_pool, bench_circular);
criterion_main!(benches);
