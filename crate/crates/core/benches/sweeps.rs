use std::hint::black_box;

use bott_kit::bott::line_bundle_table;
use bott_kit::oracle::{index_bound_sweep, min_dim_scan, SweepSpec};
use bott_kit::{ABConfig, DynkinDiagram, Execution, NodeSet, RootSystem};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse::<DynkinDiagram>().unwrap())
}

fn sweep(c: &mut Criterion) {
    let f4 = rs("F4");
    let sigma: NodeSet = [2, 3].into_iter().collect();
    let cfg = ABConfig::for_parabolic(sigma, NodeSet::singleton(1), NodeSet::EMPTY).unwrap();
    let spec = SweepSpec::uniform(4, sigma, cfg, -6, 6);
    let mut g = c.benchmark_group("index_bound_sweep/F4");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| index_bound_sweep(&f4, black_box(&spec), exec).unwrap())
        });
    }
    g.finish();
}

fn table(c: &mut Criterion) {
    let e6 = rs("E6");
    let sigma: NodeSet = [1, 2, 3, 4].into_iter().collect();
    let mut g = c.benchmark_group("line_bundle_table/E6");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| line_bundle_table(&e6, black_box(sigma), -10..=10, exec).unwrap())
        });
    }
    g.finish();
}

fn scan(c: &mut Criterion) {
    let e7 = "E7".parse::<DynkinDiagram>().unwrap().components()[0].kind;
    let mut g = c.benchmark_group("min_dim_scan/E7");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| min_dim_scan(black_box(e7), 2, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, sweep, table, scan);
criterion_main!(benches);
