use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use twsurf_core::numeric::{
    build_mesh, kii_oracle, lw_fit, numeric_weingarten_test, parse_expr, Rect, TranslationSurface,
    DEFAULT_ORACLE_STEP, DEFAULT_STEP,
};

const SCHERK: (&str, &str) = ("log(abs(cos(u)))", "-log(abs(cos(v)))");

fn parsing(c: &mut Criterion) {
    c.bench_function("parse and differentiate thrice", |b| {
        b.iter(|| TranslationSurface::parse(black_box(SCHERK.0), black_box(SCHERK.1)))
    });
    c.bench_function("parse cmc generator", |b| {
        b.iter(|| parse_expr(black_box("sqrt(2)*sqrt(1 - u^2)")))
    });
}

fn grids(c: &mut Criterion) {
    let s = TranslationSurface::parse(SCHERK.0, SCHERK.1).unwrap();
    let rect = Rect::square(1.4);
    let grid = rect.grid(21);
    c.bench_function("weingarten test 21x21", |b| {
        b.iter(|| numeric_weingarten_test(&s, black_box(&grid), 1e-6, DEFAULT_STEP))
    });
    let samples: Vec<_> = grid
        .iter()
        .map(|&(u, v)| s.eval_curvatures(u, v).unwrap())
        .collect();
    c.bench_function("lw_fit 441 samples", |b| {
        b.iter(|| lw_fit(black_box(&samples)))
    });
    c.bench_function("kii oracle point", |b| {
        b.iter(|| kii_oracle(&s, black_box(0.3), black_box(-0.2), DEFAULT_ORACLE_STEP))
    });
    c.bench_function("mesh 50x50", |b| b.iter(|| build_mesh(&s, &rect, 50)));
}

criterion_group!(benches, parsing, grids);
criterion_main!(benches);
