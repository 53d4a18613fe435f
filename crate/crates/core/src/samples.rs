//! Standard small dg-algebras and complexes, and random generators for them.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::brauer::quaternion_algebra;
use crate::dg::{trivial_dg, DgAlgebra, KComplex};
use crate::field::{FieldSpec, Scalar};
use crate::graded::GradedVectorSpace;
use crate::linalg::{Matrix, SparseVec};
use crate::matrix_dg::{good_grading_matrix_algebra, MatrixDgAlgebra};

/// `K ⊕ K·X` with `|X| = -1`, `X² = 0`, `d(X) = 1`.
pub fn dual_numbers(field: FieldSpec) -> DgAlgebra {
    let space = GradedVectorSpace::with_labels(vec![0, -1], vec!["1".into(), "X".into()]);
    let one = field.one();
    DgAlgebra::from_fn(
        field,
        space,
        |i, j| if i + j <= 1 { vec![(i + j, one.clone())] } else { Vec::new() },
        vec![field.one(), field.zero()],
        |i| if i == 1 { vec![(0, one.clone())] } else { Vec::new() },
    )
    .expect("dual numbers are a dg-algebra")
}

/// `Mat₂(ℚ)` with `deg(e12) = 1` and differential `d = [e12, -]`.
pub fn mat2_walkthrough_matrix() -> MatrixDgAlgebra {
    let m = good_grading_matrix_algebra(FieldSpec::Rationals, 2, vec![1]).expect("valid grading");
    m.with_inner_differential(&m.unit_matrix(0, 1)).expect("e12 squares to zero")
}

pub fn mat2_walkthrough() -> DgAlgebra {
    mat2_walkthrough_matrix().into_algebra()
}

/// The rational quaternions `(-1, -1)`.
pub fn hamilton_quaternions() -> DgAlgebra {
    let q = FieldSpec::Rationals;
    quaternion_algebra(q, q.from_i64(-1), q.from_i64(-1)).expect("nonzero parameters")
}

fn small_scalar<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec) -> Scalar {
    field.from_i64(rng.gen_range(-3..=3))
}

fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec) -> Scalar {
    loop {
        let c = small_scalar(rng, field);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A good-graded `Mat_n` with `n ≤ max_n`, `|f(i)| ≤ 2`, and `d = 0`.
pub fn random_good_graded<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, max_n: usize) -> MatrixDgAlgebra {
    let n = rng.gen_range(1..=max_n.max(1));
    let f = (0..n - 1).map(|_| rng.gen_range(-2..=2)).collect();
    good_grading_matrix_algebra(field, n, f).expect("valid grading")
}

/// A degree-1 element `z` of `m` with `z² = 0`, or zero when there is no
/// degree-1 matrix unit. Random combinations are tried first; a single
/// off-diagonal unit is the fallback.
pub fn random_inner_element<R: Rng + ?Sized>(rng: &mut R, m: &MatrixDgAlgebra) -> Vec<Scalar> {
    let a = m.algebra();
    let field = a.field();
    let degree_one: Vec<usize> = (0..a.dim()).filter(|&p| a.degree(p) == 1).collect();
    if degree_one.is_empty() {
        return a.zero_vector();
    }
    for _ in 0..4 {
        let mut z = a.zero_vector();
        let terms = rng.gen_range(1..=degree_one.len().min(3));
        for &p in degree_one.choose_multiple(rng, terms) {
            z[p] = nonzero_scalar(rng, field);
        }
        if a.mul(&z, &z).iter().all(Scalar::is_zero) {
            return z;
        }
    }
    let mut z = a.zero_vector();
    z[*degree_one.choose(rng).expect("nonempty")] = nonzero_scalar(rng, field);
    z
}

/// [`random_good_graded`] followed by the inner differential of
/// [`random_inner_element`].
pub fn random_matrix_dg<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, max_n: usize) -> MatrixDgAlgebra {
    let base = random_good_graded(rng, field, max_n);
    let z = random_inner_element(rng, &base);
    base.with_inner_differential(&z).expect("z squares to zero")
}

/// An ungraded algebra placed in degree 0: a truncated polynomial ring, a
/// product of copies of `K`, or a matrix algebra with the trivial grading.
pub fn random_trivial_dg<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec) -> DgAlgebra {
    let one = field.one();
    match rng.gen_range(0..3) {
        0 => {
            let k: usize = rng.gen_range(1..=3);
            let labels = (0..k).map(|i| if i == 0 { "1".into() } else { format!("x^{i}") }).collect();
            let mult = (0..k * k)
                .map(|idx| {
                    let s = idx / k + idx % k;
                    if s < k {
                        vec![(s, one.clone())]
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            let mut unit = vec![field.zero(); k];
            unit[0] = one.clone();
            trivial_dg(field, labels, mult, unit).expect("truncated polynomials are associative")
        }
        1 => {
            let k: usize = rng.gen_range(1..=3);
            let labels = (0..k).map(|i| format!("p{}", i + 1)).collect();
            let mult = (0..k * k)
                .map(|idx| if idx / k == idx % k { vec![(idx / k, one.clone())] } else { Vec::new() })
                .collect();
            trivial_dg(field, labels, mult, vec![one.clone(); k]).expect("a product of fields")
        }
        _ => {
            let n = rng.gen_range(1..=2);
            good_grading_matrix_algebra(field, n, vec![0; n - 1]).expect("valid grading").into_algebra()
        }
    }
}

/// A complex of total dimension between 1 and `max_dim`, built from disks
/// `u → v` and spheres, followed by a random change of basis in each degree.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec, max_dim: usize) -> KComplex {
    let total = rng.gen_range(1..=max_dim.max(1));
    let mut degrees = Vec::new();
    let mut diff: Vec<SparseVec> = Vec::new();
    while degrees.len() < total {
        let k = rng.gen_range(-2..=1);
        if degrees.len() + 2 <= total && rng.gen_bool(0.5) {
            let u = degrees.len();
            degrees.extend([k, k + 1]);
            diff.push(vec![(u + 1, field.one())]);
            diff.push(Vec::new());
        } else {
            degrees.push(k);
            diff.push(Vec::new());
        }
    }
    let space = GradedVectorSpace::new(degrees.clone());
    let n = degrees.len();
    let d = Matrix::from_columns(field, n, &diff.iter().map(|s| crate::linalg::to_dense(field, n, s)).collect::<Vec<_>>());
    // Degree-preserving invertible P; the new differential is P d P^{-1}.
    let p = loop {
        let candidate = Matrix::from_fn(field, n, n, |r, c| {
            if degrees[r] != degrees[c] {
                field.zero()
            } else if r == c {
                nonzero_scalar(rng, field)
            } else {
                small_scalar(rng, field)
            }
        });
        if candidate.rank() == n {
            break candidate;
        }
    };
    let conj = p.mul(&d).mul(&p.inverse().expect("invertible"));
    let cols = conj.columns().iter().map(|c| crate::linalg::to_sparse(c)).collect();
    KComplex::new(field, space, cols).expect("conjugate of a square-zero differential")
}

/// One of the dual numbers, a random matrix dg-algebra, or a random trivial
/// dg-algebra.
pub fn random_dg_algebra<R: Rng + ?Sized>(rng: &mut R, field: FieldSpec) -> DgAlgebra {
    match rng.gen_range(0..3) {
        0 => dual_numbers(field),
        1 => random_matrix_dg(rng, field, 3).into_algebra(),
        _ => random_trivial_dg(rng, field),
    }
}
