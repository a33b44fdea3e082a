use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pomset_codes::{
    brute_force_dual_enumerator, chain_dual_enumerator, field_dim2_dual_enumerator, fourier_dual_enumerator,
    DEFAULT_BUDGET,
};
use pomset_codes_bench::{chain_instances, ordinal_instance};

fn chain_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain_dual_enumerator");
    for inst in chain_instances() {
        group.bench_with_input(BenchmarkId::new("theorem", inst.name), &inst, |b, i| {
            b.iter(|| chain_dual_enumerator(&i.code, &i.pomset, &i.structure).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brute_force", inst.name), &inst, |b, i| {
            b.iter(|| brute_force_dual_enumerator(&i.code, &i.pomset, &i.structure, DEFAULT_BUDGET).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fourier", inst.name), &inst, |b, i| {
            b.iter(|| fourier_dual_enumerator(&i.code, &i.pomset, &i.structure, DEFAULT_BUDGET).unwrap())
        });
        if inst.structure.dims().iter().all(|&d| d == 2) {
            group.bench_with_input(BenchmarkId::new("corollary", inst.name), &inst, |b, i| {
                b.iter(|| field_dim2_dual_enumerator(&i.code, &i.pomset, &i.structure).unwrap())
            });
        }
    }
    group.finish();
}

fn composition_paths(c: &mut Criterion) {
    let inst = ordinal_instance();
    let mut group = c.benchmark_group("ordinal_sum");
    group.bench_function("fourier", |b| {
        b.iter(|| fourier_dual_enumerator(&inst.code, &inst.pomset, &inst.structure, DEFAULT_BUDGET).unwrap())
    });
    group.bench_function("brute_force", |b| {
        b.iter(|| brute_force_dual_enumerator(&inst.code, &inst.pomset, &inst.structure, DEFAULT_BUDGET).unwrap())
    });
    group.finish();
}

criterion_group!(benches, chain_paths, composition_paths);
criterion_main!(benches);
