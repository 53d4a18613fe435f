//! Good ℤ-gradings on `Mat_n(K)` and inner differentials `d_z(a) = za - (-1)^{|a|} az`.

use crate::dg::{DgAlgebra, KComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::GradedVectorSpace;
use crate::linalg::{is_zero_vec, sub_vec, to_sparse, SparseVec};

/// The grading with `deg(e_{i,i+1}) = f(i)`; indices here are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GoodGrading {
    n: usize,
    f: Vec<i64>,
}

impl GoodGrading {
    pub fn new(n: usize, f: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrixAlgebra);
        }
        if f.len() != n - 1 {
            return Err(Error::BadGradingLength { n, expected: n - 1, found: f.len() });
        }
        Ok(GoodGrading { n, f })
    }

    /// Everything in degree 0.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(n, vec![0; n.saturating_sub(1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &[i64] {
        &self.f
    }

    /// `deg(e_{i,j})`, 0-based.
    pub fn degree(&self, i: usize, j: usize) -> i64 {
        if i <= j {
            self.f[i..j].iter().sum()
        } else {
            -self.f[j..i].iter().sum::<i64>()
        }
    }

    /// Degrees of all matrix units in row-major order.
    pub fn degrees(&self) -> Vec<i64> {
        (0..self.n * self.n).map(|k| self.degree(k / self.n, k % self.n)).collect()
    }
}

/// Label of `e_{i,j}` (0-based arguments, 1-based names).
pub fn unit_label(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{}_{}", i + 1, j + 1)
    }
}

/// `Mat_n(K)` with a good grading and a differential, basis `e_{i,j}` in
/// row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDgAlgebra {
    grading: GoodGrading,
    algebra: DgAlgebra,
}

pub fn good_grading_matrix_algebra(field: FieldSpec, n: usize, f: Vec<i64>) -> Result<MatrixDgAlgebra> {
    let grading = GoodGrading::new(n, f)?;
    let labels = (0..n * n).map(|k| unit_label(n, k / n, k % n)).collect();
    let space = GradedVectorSpace::with_labels(grading.degrees(), labels);
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let algebra = DgAlgebra::from_fn(
        field,
        space,
        |p, q| {
            let (i, j, k, l) = (p / n, p % n, q / n, q % n);
            if j == k {
                vec![(i * n + l, field.one())]
            } else {
                Vec::new()
            }
        },
        unit,
        |_| Vec::new(),
    )?;
    Ok(MatrixDgAlgebra { grading, algebra })
}

/// `d_z` on any dg-algebra; `z` must be zero or homogeneous of degree 1 and
/// `d_z` must square to zero.
pub fn inner_differential(a: &DgAlgebra, z: &[Scalar]) -> Result<DgAlgebra> {
    if z.len() != a.dim() {
        return Err(Error::DimensionMismatch { context: "inner element".into(), expected: a.dim(), found: z.len() });
    }
    if !is_zero_vec(z) && a.space().degree_of(z) != Some(1) {
        return Err(Error::BadInnerElement);
    }
    let field = a.field();
    let diff: Vec<Vec<Scalar>> = (0..a.dim())
        .map(|i| {
            let e = a.basis_vector(i);
            let sign = field.sign(a.degree(i));
            let right: Vec<Scalar> = a.mul(&e, z).iter().map(|c| &sign * c).collect();
            sub_vec(&a.mul(z, &e), &right)
        })
        .collect();
    // d_z²(a) = z²a - az²; report the first basis vector where it is nonzero.
    let z2 = a.mul(z, z);
    for i in 0..a.dim() {
        let e = a.basis_vector(i);
        let value = sub_vec(&a.mul(&z2, &e), &a.mul(&e, &z2));
        if !is_zero_vec(&value) {
            return Err(Error::NotSquareZero { witness: i, value: a.format_vector(&value) });
        }
    }
    a.with_differential(diff.iter().map(|v| to_sparse(v)).collect())
}

impl MatrixDgAlgebra {
    pub fn grading(&self) -> &GoodGrading {
        &self.grading
    }

    pub fn algebra(&self) -> &DgAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> DgAlgebra {
        self.algebra
    }

    pub fn n(&self) -> usize {
        self.grading.n
    }

    /// Basis index of `e_{i,j}`, 0-based.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.grading.n + j
    }

    pub fn unit_matrix(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(self.index(i, j))
    }

    pub fn with_inner_differential(&self, z: &[Scalar]) -> Result<Self> {
        Ok(MatrixDgAlgebra { grading: self.grading.clone(), algebra: inner_differential(&self.algebra, z)? })
    }

    pub fn with_differential(&self, diff: Vec<SparseVec>) -> Result<Self> {
        Ok(MatrixDgAlgebra { grading: self.grading.clone(), algebra: self.algebra.with_differential(diff)? })
    }

    /// Recognizes a dg-algebra whose basis is the matrix units `e_{i,j}` in
    /// row-major order with a good grading.
    pub fn recognize(a: &DgAlgebra) -> Option<Self> {
        let dim = a.dim();
        let n = (1..=dim).find(|k| k * k >= dim).filter(|k| k * k == dim)?;
        let f: Vec<i64> = (0..n.saturating_sub(1)).map(|i| a.degree(i * n + i + 1)).collect();
        let grading = GoodGrading::new(n, f).ok()?;
        if grading.degrees() != a.space().degrees() {
            return None;
        }
        let model = good_grading_matrix_algebra(a.field(), n, grading.f.clone()).ok()?;
        let same_table = (0..dim).all(|p| (0..dim).all(|q| model.algebra.mult_basis(p, q) == a.mult_basis(p, q)));
        if !same_table || model.algebra.unit() != a.unit() {
            return None;
        }
        Some(MatrixDgAlgebra { grading, algebra: a.clone() })
    }

    /// `End•(C)` for a complex `C` presented as a matrix algebra: `e_{t,s}`
    /// sends basis vector `s` to basis vector `t`. The grading is good exactly
    /// when it is determined by consecutive differences, which always holds.
    pub fn end_of_complex(c: &KComplex) -> Result<Self> {
        let n = c.dim();
        if n == 0 {
            return Err(Error::ZeroComplex);
        }
        let field = c.field();
        let f: Vec<i64> = (0..n - 1).map(|i| c.space().degree(i) - c.space().degree(i + 1)).collect();
        let base = good_grading_matrix_algebra(field, n, f)?;
        // d(E) = d_C E - (-1)^{|E|} E d_C on matrix units.
        let dc = c.differential_matrix();
        let diff = (0..n * n)
            .map(|p| {
                let (t, s) = (p / n, p % n);
                let sign = field.sign(base.grading.degree(t, s));
                let mut out = SparseVec::new();
                for r in 0..n {
                    // (d_C E_{t,s})_{r,s} = d_C[r,t]
                    if !dc[(r, t)].is_zero() {
                        out.push((r * n + s, dc[(r, t)].clone()));
                    }
                    // (E_{t,s} d_C)_{t,r} = d_C[s,r]
                    if !dc[(s, r)].is_zero() {
                        out.push((t * n + r, -(&sign * &dc[(s, r)])));
                    }
                }
                out
            })
            .collect();
        base.with_differential(diff)
    }
}

/// All good gradings with `|f(i)| ≤ bound`, in lexicographic order of `f`.
pub fn enumerate_good_gradings(n: usize, bound: u32) -> Vec<GoodGrading> {
    if n == 0 {
        return Vec::new();
    }
    let b = i64::from(bound);
    let mut out = vec![Vec::new()];
    for _ in 0..n - 1 {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-b..=b).map(move |v| {
                    let mut f = prefix.clone();
                    f.push(v);
                    f
                })
            })
            .collect();
    }
    out.into_iter().map(|f| GoodGrading { n, f }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::center;
    use crate::graded::Dims;
    use std::collections::BTreeSet;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn dims(pairs: &[(i64, usize)]) -> Dims {
        pairs.iter().copied().collect()
    }

    #[test]
    fn size_one_is_the_ground_field() {
        let m = good_grading_matrix_algebra(Q, 1, vec![]).unwrap();
        assert_eq!(m.algebra().space().dims(), dims(&[(0, 1)]));
        assert_eq!(m.algebra().mult_basis(0, 0), DgAlgebra::ground(Q).mult_basis(0, 0));
    }

    #[test]
    fn graded_dimensions() {
        let m2 = good_grading_matrix_algebra(Q, 2, vec![1]).unwrap();
        assert_eq!(m2.algebra().space().dims(), dims(&[(-1, 1), (0, 2), (1, 1)]));
        let m3 = good_grading_matrix_algebra(Q, 3, vec![1, 0]).unwrap();
        assert_eq!(m3.grading().degree(0, 2), 1);
        assert_eq!(m3.grading().degree(1, 2), 0);
        assert_eq!(m3.algebra().space().dims(), dims(&[(-1, 2), (0, 5), (1, 2)]));
        assert!(matches!(
            good_grading_matrix_algebra(Q, 3, vec![1]),
            Err(Error::BadGradingLength { n: 3, expected: 2, found: 1 })
        ));
        assert!(matches!(good_grading_matrix_algebra(Q, 0, vec![]), Err(Error::EmptyMatrixAlgebra)));
    }

    #[test]
    fn degree_additivity_is_exhaustive() {
        let g = GoodGrading::new(4, vec![2, -1, 3]).unwrap();
        for i in 0..4 {
            assert_eq!(g.degree(i, i), 0);
            for j in 0..4 {
                for k in 0..4 {
                    assert_eq!(g.degree(i, j) + g.degree(j, k), g.degree(i, k));
                }
            }
        }
    }

    #[test]
    fn walkthrough_inner_differential() {
        let m = good_grading_matrix_algebra(Q, 2, vec![1]).unwrap();
        let z = m.unit_matrix(0, 1);
        let a = m.with_inner_differential(&z).unwrap();
        let alg = a.algebra();
        let e = |i, j| m.unit_matrix(i, j);
        let neg = |v: Vec<Scalar>| v.iter().map(|c| -c.clone()).collect::<Vec<_>>();
        assert_eq!(alg.d(&e(0, 0)), neg(e(0, 1)));
        assert_eq!(alg.d(&e(1, 1)), e(0, 1));
        assert_eq!(alg.d(&e(1, 0)), crate::linalg::add_vec(&e(0, 0), &e(1, 1)));
        assert!(is_zero_vec(&alg.d(&e(0, 1))));
    }

    #[test]
    fn zero_inner_element_gives_zero_differential() {
        let m = good_grading_matrix_algebra(Q, 3, vec![1, 0]).unwrap();
        let a = m.with_inner_differential(&m.algebra().zero_vector()).unwrap();
        assert!(a.algebra().has_zero_differential());
    }

    #[test]
    fn non_central_square_is_rejected() {
        let m = good_grading_matrix_algebra(Q, 3, vec![1, 1]).unwrap();
        let z = crate::linalg::add_vec(&m.unit_matrix(0, 1), &m.unit_matrix(1, 2));
        assert_eq!(m.algebra().mul(&z, &z), m.unit_matrix(0, 2));
        match m.with_inner_differential(&z) {
            Err(Error::NotSquareZero { .. }) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
        // Wrong degree.
        assert!(matches!(m.with_inner_differential(&m.unit_matrix(0, 2)), Err(Error::BadInnerElement)));
        assert!(matches!(m.with_inner_differential(&m.unit_matrix(1, 0)), Err(Error::BadInnerElement)));
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        assert_eq!(enumerate_good_gradings(1, 5).len(), 1);
        let two = enumerate_good_gradings(2, 1);
        assert_eq!(two.iter().map(|g| g.degree(0, 1)).collect::<Vec<_>>(), vec![-1, 0, 1]);
        let three = enumerate_good_gradings(3, 1);
        assert_eq!(three.len(), 9);
        let distinct: BTreeSet<Vec<i64>> = three.iter().map(GoodGrading::degrees).collect();
        assert_eq!(distinct.len(), 9);
        assert_eq!(enumerate_good_gradings(4, 2).len(), 125);
    }

    #[test]
    fn matrix_algebras_have_one_dimensional_center() {
        for g in enumerate_good_gradings(3, 1) {
            let m = good_grading_matrix_algebra(Q, 3, g.f().to_vec()).unwrap();
            let c = center(m.algebra());
            assert_eq!(c.dims(), dims(&[(0, 1)]));
        }
    }

    #[test]
    fn recognize_round_trip() {
        let m = good_grading_matrix_algebra(Q, 3, vec![1, -2]).unwrap();
        let r = MatrixDgAlgebra::recognize(m.algebra()).unwrap();
        assert_eq!(r.grading(), m.grading());
        assert!(MatrixDgAlgebra::recognize(&crate::samples::dual_numbers(Q)).is_none());
    }

    #[test]
    fn end_of_complex_matches_hom_construction() {
        let c = KComplex::new(Q, GradedVectorSpace::new(vec![-1, 0, 0]), vec![vec![(1, Q.one()), (2, Q.from_i64(2))], vec![], vec![]])
            .unwrap();
        let m = MatrixDgAlgebra::end_of_complex(&c).unwrap();
        let end = crate::hom::end_dg_algebra(&c).unwrap();
        assert_eq!(m.algebra().space().dims(), end.algebra.space().dims());
        // Same differential on each matrix unit, read through the two bases.
        let n = c.dim();
        for t in 0..n {
            for s in 0..n {
                let mut e = crate::linalg::Matrix::zeros(Q, n, n);
                e[(t, s)] = Q.one();
                let via_hom = end.matrix_of(&end.algebra.d(&end.coords_of(&e)));
                let via_matrix = m.algebra().d(&m.unit_matrix(t, s));
                let back = crate::linalg::Matrix::from_fn(Q, n, n, |r, c| via_matrix[r * n + c].clone());
                assert_eq!(via_hom, back);
            }
        }
    }
}
