//! Sequential against rayon execution on the three batch workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use weylgroupoid::catalog::{cartan_bicharacter, super_bicharacter};
use weylgroupoid::groupoid::{enumerate, Caps};
use weylgroupoid::hamilton::{backtrack_search, Require};
use weylgroupoid::{par, Catalog, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn axioms(c: &mut Criterion) {
    let g = enumerate(&super_bicharacter(5, 2, None).unwrap(), Caps::default()).unwrap();
    let mut group = c.benchmark_group("axioms/super-N5-m2");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| g.verify_axioms(exec)));
    }
    group.finish();
}

fn backtrack(c: &mut Criterion) {
    let g = enumerate(&cartan_bicharacter("B3").unwrap(), Caps::default()).unwrap();
    let mut group = c.benchmark_group("backtrack/B3-special-2-convenient");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| backtrack_search(&g, Require::SpecialConvenient(1), 5_000_000, exec))
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let catalog = Catalog::builtin();
    let entries: Vec<_> = catalog
        .entries()
        .iter()
        .filter(|e| e.expected.vertices.is_none_or(|v| v <= 2000))
        .cloned()
        .collect();
    let mut group = c.benchmark_group("sweep/builtin-enumerate");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                par::map(exec, &entries, |e| {
                    enumerate(&e.chi, Caps::default()).map(|g| g.vertex_count()).unwrap_or(0)
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, axioms, backtrack, sweep);
criterion_main!(benches);
