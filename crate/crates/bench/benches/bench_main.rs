use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use hecke_herm::exactfield::q;
use hecke_herm::{dvr_diagonalize, hkl_regular, Normalization, WeylGroup};
use hecke_herm_bench::principal;

fn gram(c: &mut Criterion) {
    let b2 = principal("B2", &[1, 0]);
    let g2 = principal("G2", &[0, 1, -1]);
    c.bench_function("gram B2 principal", |b| {
        b.iter(|| black_box(&b2).gram_family(&Normalization::Auto).unwrap())
    });
    c.bench_function("gram G2 principal", |b| {
        b.iter(|| black_box(&g2).gram_family(&Normalization::Auto).unwrap())
    });
}

fn jantzen(c: &mut Criterion) {
    let b2 = principal("B2", &[1, 0]).gram_family(&Normalization::Auto).unwrap();
    let g2 = principal("G2", &[0, 1, -1]).gram_family(&Normalization::Auto).unwrap();
    c.bench_function("dvr_diagonalize B2 at 1", |b| b.iter(|| dvr_diagonalize(black_box(&b2), &q(1)).unwrap()));
    c.bench_function("dvr_diagonalize G2 at 1", |b| b.iter(|| dvr_diagonalize(black_box(&g2), &q(1)).unwrap()));
}

fn regular(c: &mut Criterion) {
    let g = Arc::new(WeylGroup::from_label("B2").unwrap());
    let s = vec![q(2), q(1)];
    let mut group = c.benchmark_group("hkl_regular");
    group.sample_size(10);
    group.bench_function("B2 rho", |b| b.iter(|| hkl_regular(&g, black_box(&s)).unwrap()));
    group.finish();
}

criterion_group!(benches, gram, jantzen, regular);
criterion_main!(benches);
