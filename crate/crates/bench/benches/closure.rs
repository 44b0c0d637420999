use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rp_bench::{example_pair, integral_pair, mixed_ideal};
use rp_core::{
    betti_table, dual_vertices, external_sum, integral_closure_power, nu_star, parse_rational,
    verify_rational_expansion, ExponentVector,
};

fn lp(c: &mut Criterion) {
    let m = mixed_ideal().exponent_matrix();
    let a = ExponentVector::new(vec![5, 4, 6]);
    c.bench_function("nu_star/3x3", |b| b.iter(|| nu_star(black_box(&m), black_box(&a))));
    c.bench_function("dual_vertices/3x3", |b| b.iter(|| dual_vertices(black_box(&m))));
}

fn closures(c: &mut Criterion) {
    let i = mixed_ideal();
    c.bench_function("closure/mixed k=2", |b| {
        b.iter(|| integral_closure_power(black_box(&i), 2))
    });
    let (i, j) = example_pair();
    let (sum, _) = external_sum(&i, &j).unwrap();
    c.bench_function("closure/example sum k=2", |b| {
        b.iter(|| integral_closure_power(black_box(&sum), 2))
    });
}

fn expansion(c: &mut Criterion) {
    let (i, j) = example_pair();
    let u = parse_rational("7/3").unwrap();
    c.bench_function("verify_rational_expansion/example u=7/3", |b| {
        b.iter(|| verify_rational_expansion(black_box(&i), black_box(&j), &u))
    });
}

fn betti(c: &mut Criterion) {
    let (i, j) = integral_pair();
    let (sum, _) = external_sum(&i, &j).unwrap();
    let closure = integral_closure_power(&sum, 2).unwrap();
    c.bench_function("betti_table/closure of (I+J)^2", |b| {
        b.iter(|| betti_table(black_box(&closure)))
    });
}

criterion_group!(benches, lp, closures, expansion, betti);
criterion_main!(benches);
