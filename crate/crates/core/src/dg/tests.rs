use super::*;
use crate::brauer::{is_central_simple, quaternion_algebra, verify_dg_iso};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::graded::{compose_maps, Dims, GradedVectorSpace, HomogeneousMap};
use crate::linalg::{add_vec, is_zero_vec, Matrix};
use crate::samples::{dual_numbers, mat2_walkthrough};

const Q: FieldSpec = FieldSpec::Rationals;

fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

fn dims(pairs: &[(i64, usize)]) -> Dims {
    pairs.iter().copied().collect()
}

fn tables_equal(a: &DgAlgebra, b: &DgAlgebra) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.mult_basis(i, j) == b.mult_basis(i, j)))
}

fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|c| -c.clone()).collect()
}

/// `K[x]/(x^3)` in degree 0: commutative, all degrees even.
fn truncated_cubic() -> DgAlgebra {
    let mult = (0..9)
        .map(|idx| {
            let s = idx / 3 + idx % 3;
            if s < 3 {
                vec![(s, Q.one())]
            } else {
                vec![]
            }
        })
        .collect();
    trivial_dg(Q, vec!["1".into(), "x".into(), "x^2".into()], mult, vec![Q.one(), Q.zero(), Q.zero()]).unwrap()
}

#[test]
fn dual_numbers_validate_and_bad_degree_is_named() {
    let a = dual_numbers(Q);
    assert!(a.validate().is_valid());
    let err = a.with_differential(vec![vec![], vec![(1, Q.one())]]).unwrap_err();
    match err {
        Error::Axioms(r) => {
            assert!(r.failed_axioms().contains(&Axiom::DifferentialDegree));
            assert!(r.to_string().contains("degree"));
        }
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn broken_associativity_is_reported() {
    // Basis 1, a, b with a·a = b and b·a = a: (aa)a = a but a(aa) = ab = 0.
    let space = GradedVectorSpace::new(vec![0, 0, 0]);
    let zero = Vec::new;
    let e = |k: usize| vec![(k, Q.one())];
    let mult = vec![e(0), e(1), e(2), e(1), e(2), zero(), e(2), e(1), zero()];
    let err = DgAlgebra::new(Q, space, mult, vec![Q.one(), Q.zero(), Q.zero()], vec![vec![]; 3]).unwrap_err();
    match err {
        Error::Axioms(r) => {
            assert_eq!(r.failed_axioms(), vec![Axiom::Associativity]);
            assert!(r.violations.iter().any(|v| v.witness == vec![1, 1, 1]));
        }
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn walkthrough_validates() {
    assert!(mat2_walkthrough().validate().is_valid());
}

#[test]
fn opposite_examples() {
    let c = truncated_cubic();
    assert!(tables_equal(&opposite(&c), &c));
    for a in [dual_numbers(Q), mat2_walkthrough()] {
        assert!(tables_equal(&opposite(&opposite(&a)), &a));
    }
    let m = mat2_walkthrough();
    let op = opposite(&m);
    let [e12, e21, e22] = ["e12", "e21", "e22"].map(|l| m.basis_vector(m.index_of(l).unwrap()));
    assert_eq!(op.mul(&e12, &e21), neg(&e22));
}

#[test]
fn tensor_examples() {
    let m = mat2_walkthrough();
    let k = DgAlgebra::ground(Q);
    let mk = tensor_product(&m, &k).unwrap();
    assert!(tables_equal(&mk, &m));
    assert_eq!(mk.space().degrees(), m.space().degrees());

    let f = f2();
    let a = dual_numbers(f);
    let t = tensor_product(&a, &a).unwrap();
    assert_eq!(t.space().dims(), dims(&[(-2, 1), (-1, 2), (0, 1)]));
    // Basis: 1⊗1, 1⊗X, X⊗1, X⊗X.
    let expected = add_vec(&t.basis_vector(1), &t.basis_vector(2));
    assert_eq!(t.d(&t.basis_vector(3)), expected);

    let a = dual_numbers(Q);
    let t = tensor_product(&a, &a).unwrap();
    assert_eq!(t.d(&t.basis_vector(3)), crate::linalg::sub_vec(&t.basis_vector(1), &t.basis_vector(2)));
    assert_eq!(t.mul(&t.basis_vector(1), &t.basis_vector(2)), neg(&t.basis_vector(3)));
}

#[test]
fn tensor_field_mismatch() {
    assert!(matches!(tensor_product(&dual_numbers(Q), &dual_numbers(f2())), Err(Error::FieldMismatch { .. })));
}

#[test]
fn swap_examples() {
    let m = mat2_walkthrough();
    let c = truncated_cubic();
    assert_eq!(swap_map(&c, &m, true), swap_map(&c, &m, false));

    let d = dual_numbers(Q);
    let forward = swap_map(&d, &m, true);
    let back = swap_map(&m, &d, true);
    let round = compose_maps(&back, &forward).unwrap();
    assert_eq!(round, HomogeneousMap::identity(Q, forward.source()));

    let w = swap_iso(&d, &m).unwrap();
    assert!(w.all(), "{:?}", w.checks);
}

#[test]
fn homology_examples() {
    let c = truncated_cubic();
    let h = homology(&c).unwrap();
    assert!(tables_equal(&h.algebra, &c));
    assert!(homology(&dual_numbers(Q)).unwrap().is_acyclic());
    let h = homology(&mat2_walkthrough()).unwrap();
    assert!(h.is_acyclic());
    assert_eq!(h.cycles.dims(), h.boundaries.dims());
    assert_eq!(h.cycles.dim(), 2);
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel_subalgebra(&dual_numbers(Q)).unwrap().algebra.space().dims(), dims(&[(0, 1)]));
    let f = f2();
    let a = dual_numbers(f);
    let t = tensor_product(&a, &a).unwrap();
    let ker = kernel_subalgebra(&t).unwrap();
    assert_eq!(ker.algebra.space().dims(), dims(&[(-1, 1), (0, 1)]));
    let z = add_vec(&t.basis_vector(1), &t.basis_vector(2));
    assert!(ker.basis.contains(&z));
    assert!(is_zero_vec(&t.mul(&z, &z)));
    let c = truncated_cubic();
    assert_eq!(kernel_subalgebra(&c).unwrap().algebra.dim(), 3);
}

#[test]
fn kernel_of_tensor_can_grow() {
    let f = f2();
    let a = dual_numbers(f);
    let t = tensor_product(&a, &a).unwrap();
    let k = |x: &DgAlgebra| kernel_dims(x).values().sum::<usize>();
    assert!(k(&t) > k(&a) * k(&a));
}

#[test]
fn contracting_examples() {
    let a = dual_numbers(Q);
    let c = contracting_element(&a).unwrap();
    assert_eq!(c.z, a.basis_vector(1));
    assert!(c.certified());
    assert_eq!(c.kernel_dim, 1);

    assert!(contracting_element(&truncated_cubic()).is_none());

    let m = mat2_walkthrough();
    let c = contracting_element(&m).unwrap();
    assert_eq!(c.z, m.basis_vector(m.index_of("e21").unwrap()));
    assert!(c.certified());
    assert_eq!(c.kernel_dim * 2, m.dim());
}

#[test]
fn center_examples() {
    assert_eq!(center(&truncated_cubic()).dim(), 3);
    assert_eq!(center(&mat2_walkthrough()).dims(), dims(&[(0, 1)]));
    let h = quaternion_algebra(Q, Q.from_i64(-1), Q.from_i64(-1)).unwrap();
    assert_eq!(center(&h).dims(), dims(&[(0, 1)]));
}

#[test]
fn semisimplicity_examples() {
    assert_eq!(is_semisimple_ungraded(&DgAlgebra::ground(Q)), Semisimplicity::Semisimple);
    assert_eq!(is_semisimple_ungraded(&mat2_walkthrough()), Semisimplicity::Semisimple);
    match is_semisimple_ungraded(&dual_numbers(Q)) {
        Semisimplicity::NotSemisimple { radical } => assert_eq!(radical, vec![vec![Q.zero(), Q.one()]]),
        other => panic!("{other:?}"),
    }

    let f = f2();
    let a = dual_numbers(f);
    let ker = kernel_subalgebra(&tensor_product(&a, &a).unwrap()).unwrap();
    match is_semisimple_ungraded(&ker.algebra) {
        Semisimplicity::NotSemisimple { radical } => {
            assert_eq!(radical.len(), 1);
            let z_index = (0..ker.algebra.dim()).find(|&i| ker.algebra.degree(i) == -1).unwrap();
            assert_eq!(radical[0], ker.algebra.basis_vector(z_index));
        }
        other => panic!("{other:?}"),
    }
    // 𝔽₂ × 𝔽₂ is semisimple and found by exhaustive search.
    let prod = trivial_dg(
        f,
        vec!["p1".into(), "p2".into()],
        vec![vec![(0, f.one())], vec![], vec![], vec![(1, f.one())]],
        vec![f.one(), f.one()],
    )
    .unwrap();
    assert_eq!(is_semisimple_ungraded(&prod), Semisimplicity::Semisimple);
}

#[test]
fn semisimplicity_is_indeterminate_beyond_the_search_bound() {
    let f = f2();
    let n = 13; // 2^13 > 4096 elements, characteristic below the dimension
    let mult = (0..n * n).map(|idx| if idx / n == idx % n { vec![(idx / n, f.one())] } else { vec![] }).collect();
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    let a = trivial_dg(f, labels, mult, vec![f.one(); n]).unwrap();
    assert_eq!(is_semisimple_ungraded(&a), Semisimplicity::Indeterminate);
}

#[test]
fn tgr_examples() {
    let r = is_tgr_semisimple(&dual_numbers(Q)).unwrap();
    assert!(r.holds);
    assert_eq!(r.failed_clause(), None);

    let r = is_tgr_semisimple(&DgAlgebra::ground(Q)).unwrap();
    assert!(!r.holds);
    assert_eq!(r.failed_clause(), Some("acyclic"));

    let f = f2();
    let a = dual_numbers(f);
    assert!(is_tgr_semisimple(&a).unwrap().holds);
    let r = is_tgr_semisimple(&tensor_product(&a, &a).unwrap()).unwrap();
    assert!(r.acyclic);
    assert!(!r.holds);
    assert_eq!(r.failed_clause(), Some("ker(d) semisimple"));
}

#[test]
fn trivial_dg_examples() {
    let k = trivial_dg(Q, vec!["1".into()], vec![vec![(0, Q.one())]], vec![Q.one()]).unwrap();
    assert!(tables_equal(&k, &DgAlgebra::ground(Q)));
    let h = quaternion_algebra(Q, Q.from_i64(-1), Q.from_i64(-1)).unwrap();
    let n = h.dim();
    let mult = (0..n * n).map(|idx| h.mult_basis(idx / n, idx % n).clone()).collect();
    let t = trivial_dg(Q, h.space().labels(), mult, h.unit().to_vec()).unwrap();
    assert!(is_central_simple(&t));
}

#[test]
fn induced_subalgebra_rejects_non_closed_span() {
    let m = mat2_walkthrough();
    let e12 = m.basis_vector(m.index_of("e12").unwrap());
    let e21 = m.basis_vector(m.index_of("e21").unwrap());
    assert!(induced_subalgebra(&m, vec![m.unit().to_vec(), e12, e21], false).is_err());
}

#[test]
fn identity_iso_on_kernel() {
    let a = dual_numbers(Q);
    let ker = kernel_subalgebra(&a).unwrap();
    let id = HomogeneousMap::from_dense(Q, ker.algebra.space().clone(), ker.algebra.space().clone(), 0, &Matrix::identity(Q, 1))
        .unwrap();
    assert!(verify_dg_iso(&ker.algebra, &ker.algebra, &id).unwrap().all());
}
