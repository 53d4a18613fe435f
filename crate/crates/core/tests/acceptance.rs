//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use dgbr_core::brauer::{
    choose_structure_idempotent, forget_descriptor, idempotent_containment, is_central_simple, kunneth_check,
    sandwich_iso, structure_realize, trivial_class_witness, verify_dg_iso, UngradedDescriptor,
};
use dgbr_core::dg::{
    center, forget_structure, homology, is_semisimple_ungraded, is_tgr_semisimple, kernel_dims, kernel_subalgebra,
    opposite, swap_map, tensor_product, trivial_dg, DgAlgebra, Semisimplicity,
};
use dgbr_core::graded::Dims;
use dgbr_core::hom::end_dg_algebra;
use dgbr_core::linalg::{add_vec, is_zero_vec};
use dgbr_core::matrix_dg::{enumerate_good_gradings, good_grading_matrix_algebra};
use dgbr_core::samples::{
    dual_numbers, hamilton_quaternions, mat2_walkthrough, mat2_walkthrough_matrix, random_complex, random_dg_algebra,
    random_good_graded, random_inner_element, random_matrix_dg, random_trivial_dg,
};
use dgbr_core::FieldSpec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const Q: FieldSpec = FieldSpec::Rationals;

fn dims(pairs: &[(i64, usize)]) -> Dims {
    pairs.iter().copied().collect()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn dual_numbers_example() -> Outcome {
    let a = dual_numbers(Q);
    ensure!(a.validate().is_valid(), "dual numbers fail validation");
    ensure!(homology(&a).map_err(err)?.is_acyclic(), "homology is nonzero");
    ensure!(kernel_dims(&a) == dims(&[(0, 1)]), "ker(d) dims {:?}", kernel_dims(&a));
    ensure!(is_tgr_semisimple(&a).map_err(err)?.holds, "not acyclic with semisimple kernel");
    ensure!(!is_central_simple(&a), "reported central simple");
    let expected = UngradedDescriptor { dimension: 2, center_dimension: 2, is_central_simple: false };
    ensure!(forget_descriptor(&a) == expected, "descriptor {:?}", forget_descriptor(&a));
    Ok(())
}

fn tensor_square_over_f2() -> Outcome {
    let f2 = FieldSpec::prime(2).map_err(err)?;
    let a = dual_numbers(f2);
    let t = tensor_product(&a, &a).map_err(err)?;
    ensure!(t.space().dims() == dims(&[(0, 1), (-1, 2), (-2, 1)]), "dims {:?}", t.space().dims());
    // Basis order 1⊗1, 1⊗X, X⊗1, X⊗X.
    let z = add_vec(&t.basis_vector(2), &t.basis_vector(1));
    ensure!(t.d(&t.basis_vector(3)) == z, "D(X⊗X) = {}", t.format_vector(&t.d(&t.basis_vector(3))));
    let ker = kernel_subalgebra(&t).map_err(err)?;
    ensure!(ker.algebra.space().dims() == dims(&[(0, 1), (-1, 1)]), "ker dims {:?}", ker.algebra.space().dims());
    ensure!(ker.basis.contains(&z), "Z = X⊗1 + 1⊗X is not a kernel basis vector");
    ensure!(is_zero_vec(&t.mul(&z, &z)), "Z² != 0");
    ensure!(
        matches!(is_semisimple_ungraded(&ker.algebra), Semisimplicity::NotSemisimple { .. }),
        "ker(D) reported semisimple"
    );
    ensure!(!is_tgr_semisimple(&t).map_err(err)?.holds, "A⊗A passes the criterion");
    ensure!(is_tgr_semisimple(&a).map_err(err)?.holds, "A fails the criterion");
    Ok(())
}

fn sandwich_cases() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = random_complex(&mut rng, Q, 3);
    let end = end_dg_algebra(&c).map_err(err)?.algebra;
    let cases = [("Mat2 walkthrough", mat2_walkthrough()), ("quaternions", hamilton_quaternions()), ("End(C)", end)];
    for (name, a) in cases {
        let w = sandwich_iso(&a).map_err(|e| format!("{name}: {e}"))?;
        ensure!(w.all(), "{name}: failed {:?}", w.checks.failures());
        ensure!(w.target.dim() == a.dim() * a.dim(), "{name}: End has dim {}", w.target.dim());
    }
    Ok(())
}

fn has_odd(a: &DgAlgebra) -> bool {
    a.space().degrees().iter().any(|d| d.rem_euclid(2) == 1)
}

fn swap_on_random_pairs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let (mut odd_pairs, mut unsigned_failures) = (0, 0);
    for k in 0..20 {
        let a = random_dg_algebra(&mut rng, Q);
        let b = random_dg_algebra(&mut rng, Q);
        let (ab, ba) = (tensor_product(&a, &b).map_err(err)?, tensor_product(&b, &a).map_err(err)?);
        let w = verify_dg_iso(&ab, &ba, &swap_map(&a, &b, true)).map_err(err)?;
        ensure!(w.all(), "pair {k}: signed swap fails {:?}", w.checks.failures());
        if has_odd(&a) && has_odd(&b) {
            odd_pairs += 1;
            let u = verify_dg_iso(&ab, &ba, &swap_map(&a, &b, false)).map_err(err)?;
            if !u.checks.is_algebra_hom {
                unsigned_failures += 1;
            }
        }
    }
    ensure!(unsigned_failures >= 1, "unsigned swap never failed multiplicativity ({odd_pairs} pairs with odd degrees)");
    Ok(())
}

fn structure_walkthrough() -> Outcome {
    let m = mat2_walkthrough_matrix();
    let choice = choose_structure_idempotent(&m).map_err(err)?;
    ensure!(choice.index == 1, "chose index {}", choice.index);
    let second = idempotent_containment(&m, 1);
    ensure!(second.contained(), "A e22 not contained in A d(e22): {second:?}");
    let r = structure_realize(&m).map_err(err)?;
    ensure!(r.complex.space().dims() == dims(&[(-1, 1), (0, 1)]), "L dims {:?}", r.complex.space().dims());
    ensure!(r.witness.all(), "A -> End(L) fails {:?}", r.witness.checks.failures());
    ensure!(r.opposite_witness.all(), "A^op -> End(L)^op fails {:?}", r.opposite_witness.checks.failures());
    let high = r.complex.space().indices_in_degree(0)[0];
    let low = r.complex.space().indices_in_degree(-1)[0];
    ensure!(r.complex.diff_basis(low) == &vec![(high, Q.one())], "d_L on the degree -1 class");
    Ok(())
}

fn trivial_class_and_descriptors() -> Outcome {
    let (_, w) = trivial_class_witness(&mat2_walkthrough_matrix()).map_err(err)?;
    ensure!(w.all(), "equivalence witness fails {:?}", w.checks.failures());
    let mut algebras = vec![("quaternions".to_string(), hamilton_quaternions())];
    for g in enumerate_good_gradings(3, 1) {
        let m = good_grading_matrix_algebra(Q, 3, g.f().to_vec()).map_err(err)?;
        algebras.push((format!("Mat3 f={:?}", g.f()), m.into_algebra()));
    }
    for (name, a) in algebras {
        let flat = forget_structure(&a);
        let n = flat.dim();
        let mult = (0..n * n).map(|idx| flat.mult_basis(idx / n, idx % n).clone()).collect();
        let embedded = trivial_dg(Q, flat.space().labels(), mult, flat.unit().to_vec()).map_err(err)?;
        let expected = UngradedDescriptor { dimension: n, center_dimension: 1, is_central_simple: true };
        ensure!(forget_descriptor(&embedded) == expected, "{name}: {:?}", forget_descriptor(&embedded));
        ensure!(forget_descriptor(&a) == expected, "{name}: descriptor of the graded algebra");
    }
    Ok(())
}

fn kunneth_pairs() -> Outcome {
    let f2 = FieldSpec::prime(2).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rational = vec![
        DgAlgebra::ground(Q),
        dual_numbers(Q),
        mat2_walkthrough(),
        hamilton_quaternions(),
        random_matrix_dg(&mut rng, Q, 3).into_algebra(),
        random_trivial_dg(&mut rng, Q),
    ];
    let mut count = 0;
    for a in &rational {
        for b in &rational {
            let r = kunneth_check(a, b).map_err(err)?;
            ensure!(r.holds, "H(A⊗B) {:?} vs convolution {:?}", r.tensor_homology, r.convolution);
            count += 1;
        }
    }
    let d2 = dual_numbers(f2);
    let r = kunneth_check(&d2, &d2).map_err(err)?;
    ensure!(r.holds, "over F2: {:?} vs {:?}", r.tensor_homology, r.convolution);
    count += 1;
    ensure!(count >= 10, "only {count} pairs");
    Ok(())
}

fn good_grading_enumeration() -> Outcome {
    let all = enumerate_good_gradings(3, 1);
    ensure!(all.len() == 9, "{} gradings", all.len());
    for (i, g) in all.iter().enumerate() {
        ensure!(all[i + 1..].iter().all(|h| h.degrees() != g.degrees()), "duplicate degrees for {:?}", g.f());
        let m = good_grading_matrix_algebra(Q, 3, g.f().to_vec()).map_err(err)?;
        ensure!(m.algebra().validate().is_valid(), "{:?} fails validation", g.f());
        ensure!(m.algebra().has_zero_differential(), "nonzero differential");
        ensure!(center(m.algebra()).dims() == dims(&[(0, 1)]), "center of {:?}", g.f());
    }
    Ok(())
}

fn axiom_closure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let fields = [Q, FieldSpec::prime(2).map_err(err)?, FieldSpec::prime(3).map_err(err)?];
    for k in 0..100 {
        let field = fields[k % 3];
        let a = match k % 4 {
            0 => {
                let x = random_dg_algebra(&mut rng, field);
                let y = random_dg_algebra(&mut rng, field);
                tensor_product(&x, &y).map_err(err)?
            }
            1 => opposite(&random_dg_algebra(&mut rng, field)),
            2 => end_dg_algebra(&random_complex(&mut rng, field, 3)).map_err(err)?.algebra,
            _ => {
                let base = random_good_graded(&mut rng, field, 3);
                let z = random_inner_element(&mut rng, &base);
                ensure!(is_zero_vec(&base.algebra().pow(&z, 2)), "construction {k}: z² != 0");
                base.with_inner_differential(&z).map_err(err)?.into_algebra()
            }
        };
        let report = a.validate();
        ensure!(report.is_valid(), "construction {k}: {report}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dual numbers: acyclic, simple kernel, descriptor {2, 2, false}", dual_numbers_example),
        ("F2 tensor square: non-semisimple kernel breaks the criterion", tensor_square_over_f2),
        ("sandwich isomorphism on Mat2, quaternions, End(C)", sandwich_cases),
        ("Koszul-signed swap on 20 random pairs; unsigned swap fails", swap_on_random_pairs),
        ("structure theorem on the Mat2 walkthrough", structure_walkthrough),
        ("trivial class of Mat2 walkthrough; forget after embed is identity", trivial_class_and_descriptors),
        ("Kunneth dimension formula on catalog pairs", kunneth_pairs),
        ("good gradings of Mat3 with bound 1", good_grading_enumeration),
        ("axioms hold on 100 random constructions", axiom_closure),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {reason} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
