use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use diagcalc::ehresmann::{check_ehresmann, check_grrac};
use diagcalc::{Exec, Family, DEFAULT_BUDGET};

const EXECS: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn brute_force(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute-force PP_5^fd");
    g.sample_size(10);
    for (name, exec) in EXECS {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| Family::PPnFd.brute_force(5, exec))
        });
    }
    g.finish();
}

fn checkers(c: &mut Criterion) {
    let pnfd = Family::PnFd.closure(4, DEFAULT_BUDGET).unwrap();
    let ppnfd = Family::PPnFd.closure(5, DEFAULT_BUDGET).unwrap();
    let mut g = c.benchmark_group("checkers");
    g.sample_size(10);
    for (name, exec) in EXECS {
        g.bench_function(BenchmarkId::new("ehresmann P_4^fd", name), |b| {
            b.iter(|| check_ehresmann(&pnfd, exec))
        });
        g.bench_function(BenchmarkId::new("grrac PP_5^fd", name), |b| {
            b.iter(|| check_grrac(&ppnfd, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, brute_force, checkers);
criterion_main!(benches);
