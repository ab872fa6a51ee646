use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hankel_bench::representative_specs;
use hankel_core::{
    bareiss_det, explicit_det, explicit_inverse, gauss_inverse, gram_schmidt, kernel_inverse,
    moment_matrix,
};

fn inverses(c: &mut Criterion) {
    let n = 12;
    let mut group = c.benchmark_group("inverse_n12");
    for spec in representative_specs() {
        let name = spec.family().name();
        let m = moment_matrix(&spec, n);
        group.bench_with_input(BenchmarkId::new("explicit", name), &spec, |b, s| {
            b.iter(|| explicit_inverse(s, n))
        });
        group.bench_with_input(BenchmarkId::new("kernel", name), &spec, |b, s| {
            b.iter(|| kernel_inverse(&gram_schmidt(s, n).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("gauss", name), &m, |b, m| {
            b.iter(|| gauss_inverse(m).unwrap())
        });
    }
    group.finish();
}

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for n in [4usize, 8, 12] {
        for spec in representative_specs() {
            let id = format!("{}/{n}", spec.family().name());
            let m = moment_matrix(&spec, n);
            group.bench_with_input(BenchmarkId::new("explicit", &id), &spec, |b, s| {
                b.iter(|| explicit_det(s, n))
            });
            group.bench_with_input(BenchmarkId::new("bareiss", &id), &m, |b, m| {
                b.iter(|| bareiss_det(m))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, inverses, determinants);
criterion_main!(benches);
