//! Randomized invariants of the constructions, driven by seeded generators.

use dgbr_core::brauer::{
    forget_descriptor, inverse_map, is_central_simple, kunneth_check, lambda_map, rho_map, sandwich_iso,
    structure_realize, verify_dg_iso, verify_equivalence, equivalence_sides,
};
use dgbr_core::dg::{
    contracting_element, forget_structure, homology, kernel_dims, opposite, swap_iso, tensor_product, DgAlgebra,
};
use dgbr_core::graded::HomogeneousMap;
use dgbr_core::hom::{d_hom, end_dg_algebra};
use dgbr_core::matrix_dg::{enumerate_good_gradings, MatrixDgAlgebra};
use dgbr_core::samples::{random_complex, random_dg_algebra, random_matrix_dg};
use dgbr_core::{Error, FieldSpec};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field_for(choice: u8) -> FieldSpec {
    match choice % 3 {
        0 => FieldSpec::Rationals,
        1 => FieldSpec::prime(2).unwrap(),
        _ => FieldSpec::prime(5).unwrap(),
    }
}

fn tables_equal(a: &DgAlgebra, b: &DgAlgebra) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.mult_basis(i, j) == b.mult_basis(i, j)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_and_opposite_stay_valid(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = field_for(f);
        let a = random_dg_algebra(&mut rng, field);
        let b = random_dg_algebra(&mut rng, field);
        let t = tensor_product(&a, &b).unwrap();
        prop_assert!(t.validate().is_valid());
        let op = opposite(&a);
        prop_assert!(op.validate().is_valid());
        prop_assert!(tables_equal(&opposite(&op), &a));
    }

    #[test]
    fn kunneth_and_kernel_growth(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = field_for(f);
        let a = random_dg_algebra(&mut rng, field);
        let b = random_dg_algebra(&mut rng, field);
        let r = kunneth_check(&a, &b).unwrap();
        prop_assert!(r.holds, "{:?}", r);
        let total = |x: &DgAlgebra| kernel_dims(x).values().sum::<usize>();
        prop_assert!(total(&tensor_product(&a, &b).unwrap()) >= total(&a) * total(&b));
    }

    #[test]
    fn swap_is_always_an_isomorphism(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = field_for(f);
        let a = random_dg_algebra(&mut rng, field);
        let b = random_dg_algebra(&mut rng, field);
        prop_assert!(swap_iso(&a, &b).unwrap().all());
    }

    #[test]
    fn contracting_element_forces_acyclicity(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_dg_algebra(&mut rng, field_for(f));
        if let Some(c) = contracting_element(&a) {
            prop_assert!(c.certified());
            prop_assert!(homology(&a).unwrap().is_acyclic());
            prop_assert_eq!(c.kernel_dim * 2, a.dim());
        }
    }

    #[test]
    fn end_of_random_complex(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, field_for(f), 3);
        let end = end_dg_algebra(&c).unwrap();
        prop_assert_eq!(end.algebra.dim(), c.dim() * c.dim());
        prop_assert!(end.algebra.validate().is_valid());
        prop_assert!(is_central_simple(&end.algebra));
        // Leibniz for composition, read off matrices.
        let d = c.differential_matrix();
        for i in 0..end.algebra.dim() {
            for j in 0..end.algebra.dim() {
                let (g, h) = (end.hom.basis_map(i), end.hom.basis_map(j));
                let (dg, dh) = (end.algebra.degree(i), end.algebra.degree(j));
                let lhs = d_hom(&d, &g.mul(h), &d, dg + dh);
                let sign = c.field().sign(dg);
                let rhs = d_hom(&d, g, &d, dg).mul(h).add(&g.mul(&d_hom(&d, h, &d, dh)).scaled(&sign));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn lambda_rho_are_dg_representations(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_dg_algebra(&mut rng, field_for(f));
        let op = opposite(&a);
        let d = a.differential_matrix();
        for i in 0..a.dim() {
            let x = a.basis_vector(i);
            prop_assert_eq!(lambda_map(&a, &a.d(&x)), d_hom(&d, &lambda_map(&a, &x), &d, a.degree(i)));
            prop_assert_eq!(rho_map(&a, &a.d(&x)), d_hom(&d, &rho_map(&a, &x), &d, a.degree(i)));
            for j in 0..a.dim() {
                let y = a.basis_vector(j);
                prop_assert_eq!(lambda_map(&a, &a.mul(&x, &y)), lambda_map(&a, &x).mul(&lambda_map(&a, &y)));
                prop_assert_eq!(rho_map(&a, &op.mul(&x, &y)), rho_map(&a, &x).mul(&rho_map(&a, &y)));
            }
        }
    }

    #[test]
    fn forgetting_an_embedded_algebra_is_identity(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_dg_algebra(&mut rng, field_for(f));
        let flat = forget_structure(&a);
        prop_assert_eq!(forget_descriptor(&forget_structure(&flat)), forget_descriptor(&flat));
        prop_assert_eq!(forget_descriptor(&flat), forget_descriptor(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sandwich_on_random_matrix_algebras(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix_dg(&mut rng, field_for(f), 2);
        let w = sandwich_iso(m.algebra()).unwrap();
        prop_assert!(w.all());
        prop_assert_eq!(w.target.dim(), m.algebra().dim().pow(2));
    }

    #[test]
    fn structure_theorem_on_random_matrix_algebras(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix_dg(&mut rng, field_for(f), 3);
        match structure_realize(&m) {
            Ok(r) => {
                prop_assert!(r.witness.all());
                prop_assert!(r.opposite_witness.all());
                prop_assert_eq!(r.complex.dim(), m.n());
            }
            Err(Error::NoSuitableIdempotent(data)) => {
                prop_assert_eq!(data.len(), m.n());
                prop_assert!(data.iter().all(|c| c.contained()));
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn structure_theorem_recovers_endomorphism_algebras(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, field_for(f), 3);
        let m = MatrixDgAlgebra::end_of_complex(&c).unwrap();
        let r = structure_realize(&m).unwrap();
        prop_assert!(r.witness.all());
        prop_assert_eq!(r.end.algebra.dim(), m.algebra().dim());
    }

    #[test]
    fn equivalence_is_symmetric(seed in any::<u64>(), f in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let field = field_for(f);
        let a = random_dg_algebra(&mut rng, field);
        let c = random_complex(&mut rng, field, 2);
        let (lhs, _) = equivalence_sides(&a, &a, &c, &c).unwrap();
        let id = HomogeneousMap::identity(field, lhs.space());
        prop_assert!(verify_equivalence(&a, &a, &c, &c, &id).unwrap().all());
        // Swap the two sides and invert a nontrivial witness: the swap A⊗E ≅ E⊗A.
        let e = end_dg_algebra(&c).unwrap().algebra;
        let w = swap_iso(&a, &e).unwrap();
        let inv = inverse_map(&w.map).unwrap();
        let back = verify_dg_iso(&w.target, &w.source, &inv).unwrap();
        prop_assert!(back.all());
    }
}

#[test]
fn good_gradings_are_distinct_and_valid() {
    let all = enumerate_good_gradings(3, 1);
    assert_eq!(all.len(), 9);
    for (i, g) in all.iter().enumerate() {
        for h in &all[i + 1..] {
            assert_ne!(g.degrees(), h.degrees());
        }
        let m = dgbr_core::good_grading_matrix_algebra(FieldSpec::Rationals, 3, g.f().to_vec()).unwrap();
        assert!(m.algebra().validate().is_valid());
        assert_eq!(dgbr_core::center(m.algebra()).dim(), 1);
    }
}
