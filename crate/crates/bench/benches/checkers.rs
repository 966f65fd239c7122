use criterion::{criterion_group, criterion_main, Criterion};

use isopair_core::constructions::{isoquaternionic_pair, series_gl};
use isopair_core::pairs::verify;
use isopair_core::reps::{check_rep, isoquaternion_fundamental};
use isopair_core::supercore::{catalog_entry, validate_identity};
use isopair_core::tkk::{check_superalgebra, superalgebra_from_pair};

fn pairs(c: &mut Criterion) {
    let gl21 = series_gl(2, 1).unwrap().pair;
    c.bench_function("verify gl(2,1)", |b| b.iter(|| verify(&gl21)));
    let gl11 = series_gl(1, 1).unwrap().pair;
    c.bench_function("verify gl(1,1)", |b| b.iter(|| verify(&gl11)));
    let sj = catalog_entry("super-jordan");
    c.bench_function("validate super-jordan", |b| b.iter(|| validate_identity(&sj.adopted.lhs, &sj.adopted.rhs).unwrap()));
}

fn algebras(c: &mut Criterion) {
    let iq = isoquaternionic_pair().pair;
    c.bench_function("superalgebra of gl(2,0)", |b| b.iter(|| superalgebra_from_pair(&iq).unwrap()));
    let a = superalgebra_from_pair(&iq).unwrap();
    c.bench_function("check superalgebra of gl(2,0)", |b| b.iter(|| check_superalgebra(&a)));
}

fn reps(c: &mut Criterion) {
    c.bench_function("fundamental module", |b| b.iter(|| isoquaternion_fundamental().unwrap()));
    let (r, _) = isoquaternion_fundamental().unwrap();
    c.bench_function("check fundamental rep", |b| b.iter(|| check_rep(&r)));
}

criterion_group!(benches, pairs, algebras, reps);
criterion_main!(benches);
