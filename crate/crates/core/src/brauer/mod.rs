//! Brauer-theoretic tools: left and right multiplication maps, the sandwich
//! isomorphism, central simplicity, the structure theorem for matrix
//! dg-algebras, verification of isomorphism and equivalence witnesses, the
//! forgetful descriptor and Künneth checks.

mod iso;
mod sandwich;
mod structure;

pub use iso::{equivalence_sides, inverse_map, verify_dg_iso, verify_equivalence, IsoChecks, IsoWitness};
pub use sandwich::{
    central_simplicity, is_central_simple, lambda_map, rho_map, sandwich_iso, sandwich_map, CentralSimplicity,
    SandwichMap,
};
pub use structure::{
    choose_structure_idempotent, idempotent_containment, structure_realize, Containment, IdempotentChoice,
    StructureRealization,
};

use crate::dg::{center, homology, tensor_product, DgAlgebra, KComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{convolve_dims, Dims, GradedVectorSpace, HomogeneousMap};
use crate::matrix_dg::MatrixDgAlgebra;

/// What survives after forgetting the grading and the differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UngradedDescriptor {
    pub dimension: usize,
    pub center_dimension: usize,
    pub is_central_simple: bool,
}

pub fn forget_descriptor(a: &DgAlgebra) -> UngradedDescriptor {
    UngradedDescriptor {
        dimension: a.dim(),
        center_dimension: center(a).dim(),
        is_central_simple: is_central_simple(a),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport {
    pub tensor_homology: Dims,
    pub convolution: Dims,
    pub holds: bool,
}

/// Compares `dim H(A⊗B)_n` with `Σ_k dim H(A)_k · dim H(B)_{n-k}`.
pub fn kunneth_check(a: &DgAlgebra, b: &DgAlgebra) -> Result<KunnethReport> {
    let tensor_homology = homology(&tensor_product(a, b)?)?.dims();
    let convolution = convolve_dims(&homology(a)?.dims(), &homology(b)?.dims());
    let holds = tensor_homology == convolution;
    Ok(KunnethReport { tensor_homology, convolution, holds })
}

/// The quaternion algebra `(a, b)` with basis `1, i, j, k`, `i² = a`,
/// `j² = b`, `ij = k = -ji`, in degree 0 with zero differential.
pub fn quaternion_algebra(field: FieldSpec, a: Scalar, b: Scalar) -> Result<DgAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    for x in [&a, &b] {
        if x.field() != field {
            return Err(Error::FieldMismatch { left: field, right: x.field() });
        }
        if x.is_zero() {
            return Err(Error::ZeroParameter);
        }
    }
    let one = field.one();
    let neg = |x: &Scalar| -x.clone();
    let ab = &a * &b;
    // Products of i, j, k; 1 is handled separately.
    let table = |p: usize, q: usize| -> Vec<(usize, Scalar)> {
        match (p, q) {
            (0, q) => vec![(q, one.clone())],
            (p, 0) => vec![(p, one.clone())],
            (1, 1) => vec![(0, a.clone())],
            (1, 2) => vec![(3, one.clone())],
            (1, 3) => vec![(2, a.clone())],
            (2, 1) => vec![(3, neg(&one))],
            (2, 2) => vec![(0, b.clone())],
            (2, 3) => vec![(1, neg(&b))],
            (3, 1) => vec![(2, neg(&a))],
            (3, 2) => vec![(1, b.clone())],
            (3, 3) => vec![(0, neg(&ab))],
            _ => unreachable!(),
        }
    };
    let space = GradedVectorSpace::with_labels(vec![0; 4], ["1", "i", "j", "k"].map(String::from).to_vec());
    let mut unit = vec![field.zero(); 4];
    unit[0] = field.one();
    DgAlgebra::from_fn(field, space, table, unit, |_| Vec::new())
}

/// For a matrix dg-algebra `A` realized as `End•(L)`, the map
/// `a⊗1 ↦ 1⊗φ(a)` from `A⊗End•(K)` to `K⊗End•(L)`, verified as an
/// equivalence witness between `A` and the ground field.
pub fn trivial_class_witness(mat: &MatrixDgAlgebra) -> Result<(StructureRealization, IsoWitness)> {
    let a = mat.algebra();
    let field = a.field();
    let real = structure_realize(mat)?;
    let k = DgAlgebra::ground(field);
    let point = KComplex::graded_space(field, GradedVectorSpace::new(vec![0]));
    let (lhs, rhs) = equivalence_sides(a, &k, &point, &real.complex)?;
    // Both tensor bases are indexed like the factors, since the other factor is 1-dimensional.
    let dense = real.witness.map.to_dense();
    let map = HomogeneousMap::from_dense(field, lhs.space().clone(), rhs.space().clone(), 0, &dense)?;
    let w = verify_equivalence(a, &k, &point, &real.complex, &map)?;
    Ok((real, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::{forget_structure, trivial_dg};
    use crate::samples;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn dims(pairs: &[(i64, usize)]) -> Dims {
        pairs.iter().copied().collect()
    }

    #[test]
    fn descriptors() {
        let d = |dimension, center_dimension, is_central_simple| UngradedDescriptor {
            dimension,
            center_dimension,
            is_central_simple,
        };
        assert_eq!(forget_descriptor(&DgAlgebra::ground(Q)), d(1, 1, true));
        assert_eq!(forget_descriptor(&samples::mat2_walkthrough()), d(4, 1, true));
        assert_eq!(forget_descriptor(&samples::dual_numbers(Q)), d(2, 2, false));
    }

    #[test]
    fn forgetting_after_embedding_is_identity() {
        let h = quaternion_algebra(Q, Q.from_i64(-1), Q.from_i64(-1)).unwrap();
        let n = h.dim();
        let mult = (0..n * n).map(|idx| h.mult_basis(idx / n, idx % n).clone()).collect();
        let embedded = trivial_dg(Q, h.space().labels(), mult, h.unit().to_vec()).unwrap();
        assert_eq!(forget_descriptor(&embedded), forget_descriptor(&h));
        let m = samples::mat2_walkthrough();
        assert_eq!(forget_descriptor(&forget_structure(&m)), forget_descriptor(&m));
    }

    #[test]
    fn quaternion_validation() {
        assert!(matches!(quaternion_algebra(Q, Q.zero(), Q.one()), Err(Error::ZeroParameter)));
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(quaternion_algebra(f2, f2.one(), f2.one()), Err(Error::CharacteristicTwo)));
        let h = quaternion_algebra(Q, Q.from_i64(2), Q.from_i64(-3)).unwrap();
        let (i, j, k) = (h.basis_vector(1), h.basis_vector(2), h.basis_vector(3));
        assert_eq!(h.mul(&k, &k), h.combination(&[(0, Q.from_i64(6))]));
        assert_eq!(h.mul(&i, &j), k);
    }

    #[test]
    fn kunneth_examples() {
        let dual = samples::dual_numbers(Q);
        let mat = samples::mat2_walkthrough();
        let r = kunneth_check(&dual, &mat).unwrap();
        assert!(r.holds);
        assert!(r.tensor_homology.is_empty());
        let h = quaternion_algebra(Q, Q.from_i64(-1), Q.from_i64(-1)).unwrap();
        let r = kunneth_check(&h, &h).unwrap();
        assert!(r.holds);
        assert_eq!(r.tensor_homology, dims(&[(0, 16)]));
    }

    #[test]
    fn walkthrough_has_trivial_class() {
        let (real, w) = trivial_class_witness(&samples::mat2_walkthrough_matrix()).unwrap();
        assert!(w.all());
        assert_eq!(real.complex.space().dims(), dims(&[(-1, 1), (0, 1)]));
        // Symmetry: the inverse map witnesses the reverse equivalence.
        let k = DgAlgebra::ground(Q);
        let point = KComplex::graded_space(Q, GradedVectorSpace::new(vec![0]));
        let inv = inverse_map(&w.map).unwrap();
        let back = verify_equivalence(&k, &samples::mat2_walkthrough(), &real.complex, &point, &inv).unwrap();
        assert!(back.all());
    }
}
