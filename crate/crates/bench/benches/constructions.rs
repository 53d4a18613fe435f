use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dgbr_core::brauer::{sandwich_iso, structure_realize};
use dgbr_core::dg::{tensor_product, KComplex};
use dgbr_core::hom::end_dg_algebra;
use dgbr_core::matrix_dg::{good_grading_matrix_algebra, MatrixDgAlgebra};
use dgbr_core::samples::{dual_numbers, hamilton_quaternions, mat2_walkthrough, mat2_walkthrough_matrix};
use dgbr_core::{FieldSpec, GradedVectorSpace};

const Q: FieldSpec = FieldSpec::Rationals;

/// Two disks and a sphere: `u0 → v0`, `u1 → v1`, `w`.
fn five_term_complex() -> KComplex {
    let space = GradedVectorSpace::new(vec![-1, 0, 0, 1, 0]);
    KComplex::new(Q, space, vec![vec![(1, Q.one())], vec![], vec![(3, Q.from_i64(2))], vec![], vec![]]).unwrap()
}

fn tensor(c: &mut Criterion) {
    let dual = dual_numbers(Q);
    let mat = mat2_walkthrough();
    let quat = hamilton_quaternions();
    c.bench_function("tensor dual⊗Mat2", |b| b.iter(|| tensor_product(black_box(&dual), black_box(&mat)).unwrap()));
    c.bench_function("tensor Mat2⊗H", |b| b.iter(|| tensor_product(black_box(&mat), black_box(&quat)).unwrap()));
}

fn sandwich(c: &mut Criterion) {
    let mat = mat2_walkthrough();
    let quat = hamilton_quaternions();
    c.bench_function("sandwich Mat2", |b| b.iter(|| sandwich_iso(black_box(&mat)).unwrap()));
    c.bench_function("sandwich H", |b| b.iter(|| sandwich_iso(black_box(&quat)).unwrap()));
}

fn structure(c: &mut Criterion) {
    let mat2 = mat2_walkthrough_matrix();
    let mat3 = good_grading_matrix_algebra(Q, 3, vec![1, 0]).unwrap();
    let mat3 = mat3.with_inner_differential(&mat3.unit_matrix(0, 2)).unwrap();
    let end5 = MatrixDgAlgebra::end_of_complex(&five_term_complex()).unwrap();
    c.bench_function("structure Mat2", |b| b.iter(|| structure_realize(black_box(&mat2)).unwrap()));
    c.bench_function("structure Mat3", |b| b.iter(|| structure_realize(black_box(&mat3)).unwrap()));
    c.bench_function("structure End(C) dim 25", |b| b.iter(|| structure_realize(black_box(&end5)).unwrap()));
}

fn endomorphisms(c: &mut Criterion) {
    let cx = five_term_complex();
    c.bench_function("End(C) dim 25", |b| b.iter(|| end_dg_algebra(black_box(&cx)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = tensor, sandwich, structure, endomorphisms
}
criterion_main!(benches);
