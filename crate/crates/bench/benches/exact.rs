use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use twsurf_bench::generator_pairs;
use twsurf_core::classify::classify_generators;
use twsurf_core::curvature::{jacobian_derived, jacobian_direct};
use twsurf_core::powerlaw::{collect_terms, rational_grid, scan_exponents, Condition};
use twsurf_core::rat;

fn jacobians(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobian");
    for degree in [1u32, 2, 4] {
        let gen = &generator_pairs(degree, degree, 1)[0];
        group.bench_with_input(BenchmarkId::new("direct", degree), gen, |b, g| {
            b.iter(|| jacobian_direct(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("derived", degree), gen, |b, g| {
            b.iter(|| jacobian_derived(black_box(g)))
        });
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let pairs = generator_pairs(3, 2, 16);
    c.bench_function("classify 16 cubic-quadratic pairs", |b| {
        b.iter(|| {
            for g in &pairs {
                black_box(classify_generators(g).ok());
            }
        })
    });
}

fn power_law(c: &mut Criterion) {
    c.bench_function("collect_terms jacobian p=q=1/3", |b| {
        b.iter(|| {
            collect_terms(
                Condition::Jacobian,
                black_box(&rat(1, 3)),
                black_box(&rat(1, 3)),
            )
        })
    });
    let grid = rational_grid(3, -3, 6);
    c.bench_function("scan second gaussian thirds", |b| {
        b.iter(|| {
            scan_exponents(
                Condition::SecondGaussian,
                black_box(&grid),
                black_box(&grid),
            )
        })
    });
}

criterion_group!(benches, jacobians, classification, power_law);
criterion_main!(benches);
