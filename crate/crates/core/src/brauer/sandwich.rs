use super::iso::{verify_dg_iso, IsoWitness};
use crate::dg::{center, koszul_odd, opposite, tensor_product, DgAlgebra, KComplex};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graded::HomogeneousMap;
use crate::hom::{end_dg_algebra, EndAlgebra};
use crate::linalg::Matrix;

/// `λ_a(x) = a x`.
pub fn lambda_map(a: &DgAlgebra, x: &[Scalar]) -> Matrix {
    a.left_mult_matrix(x)
}

/// `ρ_a(x) = (-1)^{|a||x|} x a`, extended linearly over the homogeneous
/// components of `a`.
pub fn rho_map(a: &DgAlgebra, x: &[Scalar]) -> Matrix {
    let field = a.field();
    let n = a.dim();
    let mut out = Matrix::zeros(field, n, n);
    for (deg, local) in a.space().components(x) {
        let part = a.space().embed(field, deg, &local);
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let sign = field.sign(i64::from(koszul_odd(deg, a.degree(j))));
                a.mul(&a.basis_vector(j), &part).iter().map(|c| &sign * c).collect()
            })
            .collect();
        out = out.add(&Matrix::from_columns(field, n, &cols));
    }
    out
}

/// Evidence for or against central simplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSimplicity {
    pub dimension: usize,
    pub center_dimension: usize,
    /// Rank of the ungraded map `a⊗b ↦ (x ↦ a x b)` into `End_K(A)`.
    pub sandwich_rank: usize,
}

impl CentralSimplicity {
    pub fn holds(&self) -> bool {
        self.dimension > 0 && self.center_dimension == 1 && self.sandwich_rank == self.dimension * self.dimension
    }
}

pub fn central_simplicity(a: &DgAlgebra) -> CentralSimplicity {
    let n = a.dim();
    let field = a.field();
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        let left = a.left_mult_matrix(&a.basis_vector(i));
        for j in 0..n {
            let m = left.mul(&a.right_mult_matrix(&a.basis_vector(j)));
            cols.push((0..n).flat_map(|c| (0..n).map(move |r| (r, c))).map(|(r, c)| m[(r, c)].clone()).collect());
        }
    }
    let sandwich_rank = if n == 0 { 0 } else { Matrix::from_columns(field, n * n, &cols).rank() };
    CentralSimplicity { dimension: n, center_dimension: center(a).dim(), sandwich_rank }
}

/// Ungraded central simplicity: 1-dimensional center and a bijective
/// sandwich map `A⊗A^op → End_K(A)`.
pub fn is_central_simple(a: &DgAlgebra) -> bool {
    central_simplicity(a).holds()
}

/// The sandwich map `a⊗b ↦ λ_a ∘ ρ_b` from `A⊗A^op` to `End•(A)`, with both
/// algebras it connects.
#[derive(Clone, Debug)]
pub struct SandwichMap {
    pub tensor: DgAlgebra,
    pub end: EndAlgebra,
    pub map: HomogeneousMap,
}

pub fn sandwich_map(a: &DgAlgebra) -> Result<SandwichMap> {
    let field = a.field();
    let op = opposite(a);
    let tensor = tensor_product(a, &op)?;
    let end = end_dg_algebra(&KComplex::of_algebra(a))?;
    let n = a.dim();
    let rhos: Vec<Matrix> = (0..n).map(|j| rho_map(a, &a.basis_vector(j))).collect();
    let mut cols = Vec::with_capacity(n * n);
    for i in 0..n {
        let lam = lambda_map(a, &a.basis_vector(i));
        for rho in &rhos {
            cols.push(end.coords_of(&lam.mul(rho)));
        }
    }
    let dense = Matrix::from_columns(field, end.algebra.dim(), &cols);
    let map = HomogeneousMap::from_dense(field, tensor.space().clone(), end.algebra.space().clone(), 0, &dense)?;
    Ok(SandwichMap { tensor, end, map })
}

/// Verified isomorphism `A⊗A^op ≅ End•(A)` for central simple `A`.
pub fn sandwich_iso(a: &DgAlgebra) -> Result<IsoWitness> {
    if !is_central_simple(a) {
        return Err(Error::NotCentralSimple);
    }
    let s = sandwich_map(a)?;
    verify_dg_iso(&s.tensor, &s.end.algebra, &s.map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::quaternion_algebra;
    use crate::field::FieldSpec;
    use crate::hom::d_hom;
    use crate::samples;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn lambda_and_rho_of_unit_are_identity() {
        for a in [samples::dual_numbers(Q), samples::mat2_walkthrough()] {
            let id = Matrix::identity(Q, a.dim());
            assert_eq!(lambda_map(&a, a.unit()), id);
            assert_eq!(rho_map(&a, a.unit()), id);
        }
    }

    #[test]
    fn dual_number_multiplications() {
        let a = samples::dual_numbers(Q);
        let x = a.basis_vector(1);
        let lam = lambda_map(&a, &x);
        assert_eq!(lam.apply(&a.basis_vector(0)), x);
        assert!(crate::linalg::is_zero_vec(&lam.apply(&x)));
        assert!(crate::linalg::is_zero_vec(&rho_map(&a, &x).apply(&x)));
    }

    #[test]
    fn mat2_lambda_rank_and_commutation() {
        let a = samples::mat2_walkthrough();
        let e12 = a.basis_vector(a.index_of("e12").unwrap());
        assert_eq!(lambda_map(&a, &e12).rank(), 2);
        for i in 0..4 {
            for j in 0..4 {
                let lam = lambda_map(&a, &a.basis_vector(i));
                let rho = rho_map(&a, &a.basis_vector(j));
                let sign = Q.sign(i64::from(koszul_odd(a.degree(i), a.degree(j))));
                assert_eq!(rho.mul(&lam), lam.mul(&rho).scaled(&sign));
            }
        }
    }

    #[test]
    fn lambda_and_rho_intertwine_differentials() {
        for a in [samples::dual_numbers(Q), samples::mat2_walkthrough()] {
            let d = a.differential_matrix();
            for i in 0..a.dim() {
                let e = a.basis_vector(i);
                let deg = a.degree(i);
                assert_eq!(lambda_map(&a, &a.d(&e)), d_hom(&d, &lambda_map(&a, &e), &d, deg));
                assert_eq!(rho_map(&a, &a.d(&e)), d_hom(&d, &rho_map(&a, &e), &d, deg));
            }
        }
    }

    #[test]
    fn central_simplicity_examples() {
        assert!(is_central_simple(&DgAlgebra::ground(Q)));
        assert!(!is_central_simple(&samples::dual_numbers(Q)));
        assert!(is_central_simple(&samples::mat2_walkthrough()));
        let h = quaternion_algebra(Q, Q.from_i64(-1), Q.from_i64(-1)).unwrap();
        assert!(is_central_simple(&h));
        let split = quaternion_algebra(Q, Q.one(), Q.one()).unwrap();
        assert!(is_central_simple(&split));
    }

    #[test]
    fn sandwich_on_ground_field_and_mat2() {
        let k = sandwich_iso(&DgAlgebra::ground(Q)).unwrap();
        assert!(k.all());
        assert_eq!(k.map.to_dense(), Matrix::identity(Q, 1));
        let w = sandwich_iso(&samples::mat2_walkthrough()).unwrap();
        assert!(w.all(), "{:?}", w.checks);
        assert_eq!(w.target.dim(), 16);
        assert!(matches!(sandwich_iso(&samples::dual_numbers(Q)), Err(Error::NotCentralSimple)));
    }
}
