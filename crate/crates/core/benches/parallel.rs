//! Parallel against sequential execution on the heavy exact kernels.

use std::hint::black_box;

use ag_core::verify::check_tau_nondeg;
use ag_core::{AlgebraTable, Execution, RootSystemSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn spec(s: &str) -> RootSystemSpec {
    s.parse().expect("valid type")
}

fn table_build(c: &mut Criterion) {
    let mut g = c.benchmark_group("table_build");
    g.sample_size(10);
    for ty in ["G2", "B3"] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, ty), &spec(ty), |b, &s| {
                b.iter(|| AlgebraTable::build(black_box(s), exec).unwrap())
            });
        }
    }
    g.finish();
}

fn tau_gram_rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("tau_gram_rank");
    g.sample_size(10);
    for ty in ["G2", "C3"] {
        let t = AlgebraTable::build(spec(ty), Execution::Parallel).unwrap();
        let gram = t.tau_gram();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, ty), &gram, |b, m| {
                b.iter(|| black_box(m).rank_with(exec))
            });
        }
    }
    g.finish();
}

fn verify_nondeg(c: &mut Criterion) {
    let t = AlgebraTable::build(spec("B3"), Execution::Parallel).unwrap();
    let mut g = c.benchmark_group("check_tau_nondeg");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| check_tau_nondeg(black_box(&t), exec)));
    }
    g.finish();
}

criterion_group!(benches, table_build, tau_gram_rank, verify_nondeg);
criterion_main!(benches);
