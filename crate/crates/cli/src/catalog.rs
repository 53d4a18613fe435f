//! Built-in worked examples. Each entry recomputes its example from scratch
//! and records every claim it checks.

use dgbr_core::brauer::{
    central_simplicity, choose_structure_idempotent, forget_descriptor, idempotent_containment, kunneth_check,
    lambda_map, rho_map, sandwich_iso, structure_realize, trivial_class_witness, verify_dg_iso, UngradedDescriptor,
};
use dgbr_core::dg::{
    contracting_element, forget_structure, homology, is_semisimple_ungraded, is_tgr_semisimple, kernel_dims,
    kernel_subalgebra, swap_map, tensor_product, trivial_dg, DgAlgebra, KComplex, Semisimplicity,
};
use dgbr_core::graded::{Dims, GradedVectorSpace};
use dgbr_core::hom::end_dg_algebra;
use dgbr_core::linalg::{add_vec, is_zero_vec};
use dgbr_core::matrix_dg::{enumerate_good_gradings, good_grading_matrix_algebra};
use dgbr_core::samples::{dual_numbers, hamilton_quaternions, mat2_walkthrough, mat2_walkthrough_matrix};
use dgbr_core::{FieldSpec, Result};

const Q: FieldSpec = FieldSpec::Rationals;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
}

/// Accumulated checks of one catalog run.
#[derive(Clone, Debug, Default)]
pub struct Checks {
    pub checks: Vec<Check>,
}

impl Checks {
    pub fn check(&mut self, claim: impl Into<String>, passed: bool) {
        self.checks.push(Check { claim: claim.into(), passed });
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    body: fn(&mut Checks) -> Result<()>,
}

impl Entry {
    /// Runs the example. A library error becomes a failed check.
    pub fn run(&self) -> Checks {
        let mut checks = Checks::default();
        if let Err(e) = (self.body)(&mut checks) {
            checks.check(format!("computation finished without error ({e})"), false);
        }
        checks
    }
}

pub static ENTRIES: &[Entry] = &[
    Entry {
        name: "examplesimpledg",
        summary: "dual numbers K[X]/X^2 with |X| = -1 and d(X) = 1: acyclic with semisimple kernel",
        body: example_simple_dg,
    },
    Entry {
        name: "tensorproductofdualnumbers",
        summary: "over F2 the tensor square of the dual numbers fails the acyclic-semisimple-kernel test",
        body: tensor_of_dual_numbers,
    },
    Entry {
        name: "brabelina-swap",
        summary: "a⊗b ↦ (-1)^{|a||b|} b⊗a is a dg-isomorphism A⊗B ≅ B⊗A; the unsigned swap is not",
        body: brabelina_swap,
    },
    Entry {
        name: "inverseofA-mat2",
        summary: "sandwich map A⊗A^op → End(A) for Mat2 with deg(e12) = 1 and d = [e12, -]",
        body: inverse_of_a_mat2,
    },
    Entry {
        name: "progenerator-mat2",
        summary: "structure theorem: the Mat2 example is the endomorphism algebra of a two-term complex",
        body: progenerator_mat2,
    },
    Entry {
        name: "derivedbruaergroup-kernel",
        summary: "the Mat2 example is equivalent to K; forgetting after embedding preserves descriptors",
        body: derived_brauer_kernel,
    },
    Entry {
        name: "kunneth",
        summary: "H(A⊗B) is the graded convolution of H(A) and H(B); ker of the tensor differential grows",
        body: kunneth,
    },
];

pub fn find(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

fn dims(pairs: &[(i64, usize)]) -> Dims {
    pairs.iter().copied().collect()
}

/// `u → v` with `|u| = -1`, plus `w` in degree 0.
fn small_complex() -> Result<KComplex> {
    let space = GradedVectorSpace::with_labels(vec![-1, 0, 0], vec!["u".into(), "v".into(), "w".into()]);
    KComplex::new(Q, space, vec![vec![(1, Q.one())], vec![], vec![]])
}

/// Named rational algebras used by the pairwise checks.
fn catalog_algebras() -> Result<Vec<(String, DgAlgebra)>> {
    let mat3 = good_grading_matrix_algebra(Q, 3, vec![1, 0])?;
    let mat3 = mat3.with_inner_differential(&mat3.unit_matrix(0, 2))?;
    Ok(vec![
        ("K".into(), DgAlgebra::ground(Q)),
        ("dual numbers".into(), dual_numbers(Q)),
        ("Mat2 walkthrough".into(), mat2_walkthrough()),
        ("quaternions".into(), hamilton_quaternions()),
        ("End(u→v ⊕ w)".into(), end_dg_algebra(&small_complex()?)?.algebra),
        ("Mat3 f=(1,0), d=[e13,-]".into(), mat3.into_algebra()),
    ])
}

fn example_simple_dg(c: &mut Checks) -> Result<()> {
    let a = dual_numbers(Q);
    c.check("dual numbers satisfy every dg-algebra axiom", a.validate().is_valid());
    c.check("d(1) = 0", a.diff_basis(0).is_empty());
    c.check("d(X) = 1", a.d(&a.basis_vector(1)) == a.basis_vector(0));
    c.check("(A, d) is acyclic", homology(&a)?.is_acyclic());
    c.check("ker(d) = K·1, dims {0:1}", kernel_dims(&a) == dims(&[(0, 1)]));
    let ker = kernel_subalgebra(&a)?;
    c.check("ker(d) is semisimple", is_semisimple_ungraded(&ker.algebra) == Semisimplicity::Semisimple);
    c.check("bounded, acyclic, semisimple kernel", is_tgr_semisimple(&a)?.holds);
    let z = contracting_element(&a);
    c.check(
        "contracting element z = X with A = ker(d) ⊕ z·ker(d)",
        z.is_some_and(|z| z.certified() && z.z == a.basis_vector(1)),
    );
    let f2 = FieldSpec::prime(2)?;
    c.check("the same holds over F2", is_tgr_semisimple(&dual_numbers(f2))?.holds);
    Ok(())
}

fn tensor_of_dual_numbers(c: &mut Checks) -> Result<()> {
    let f2 = FieldSpec::prime(2)?;
    let a = dual_numbers(f2);
    let t = tensor_product(&a, &a)?;
    c.check("A⊗A has dims {-2:1, -1:2, 0:1}", t.space().dims() == dims(&[(0, 1), (-1, 2), (-2, 1)]));
    // Basis order 1⊗1, 1⊗X, X⊗1, X⊗X.
    let z = add_vec(&t.basis_vector(2), &t.basis_vector(1));
    c.check(format!("D(X⊗X) = {}", t.format_vector(&t.d(&t.basis_vector(3)))), t.d(&t.basis_vector(3)) == z);
    let ker = kernel_subalgebra(&t)?;
    c.check("ker(D) has dims {-1:1, 0:1}", ker.algebra.space().dims() == dims(&[(0, 1), (-1, 1)]));
    c.check("ker(D) is spanned by 1⊗1 and Z = X⊗1 + 1⊗X", ker.basis.contains(&z));
    c.check("Z² = 0", is_zero_vec(&t.mul(&z, &z)));
    c.check(
        "ker(D) is not semisimple",
        matches!(is_semisimple_ungraded(&ker.algebra), Semisimplicity::NotSemisimple { .. }),
    );
    let report = is_tgr_semisimple(&t)?;
    c.check(
        format!("A⊗A fails the test (clause: {})", report.failed_clause().unwrap_or("none")),
        !report.holds,
    );
    c.check("A itself passes the test", is_tgr_semisimple(&a)?.holds);
    Ok(())
}

fn brabelina_swap(c: &mut Checks) -> Result<()> {
    let algebras = catalog_algebras()?;
    let mut verified = 0;
    for (na, a) in &algebras {
        for (nb, b) in &algebras {
            if a.dim() * b.dim() > 36 {
                continue;
            }
            let (ab, ba) = (tensor_product(a, b)?, tensor_product(b, a)?);
            let w = verify_dg_iso(&ab, &ba, &swap_map(a, b, true))?;
            if !w.all() {
                c.check(format!("signed swap on {na} ⊗ {nb}: fails {:?}", w.checks.failures()), false);
            } else {
                verified += 1;
            }
        }
    }
    c.check(format!("signed swap verified as a dg-isomorphism on {verified} pairs"), verified >= 10);
    let (a, b) = (dual_numbers(Q), mat2_walkthrough());
    let (ab, ba) = (tensor_product(&a, &b)?, tensor_product(&b, &a)?);
    let u = verify_dg_iso(&ab, &ba, &swap_map(&a, &b, false))?;
    let witness = u
        .product_failure
        .map(|(i, j)| format!(" at ({}) · ({})", ab.label(i), ab.label(j)))
        .unwrap_or_default();
    c.check(
        format!("unsigned swap on dual numbers ⊗ Mat2 is not multiplicative{witness}"),
        !u.checks.is_algebra_hom && u.product_failure.is_some(),
    );
    Ok(())
}

fn inverse_of_a_mat2(c: &mut Checks) -> Result<()> {
    let a = mat2_walkthrough();
    let cs = central_simplicity(&a);
    c.check(
        format!("central simple: center dim {}, sandwich rank {} of {}", cs.center_dimension, cs.sandwich_rank, a.dim().pow(2)),
        cs.holds(),
    );
    let mut commute = true;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            let sign = Q.sign(a.degree(i) * a.degree(j));
            let lhs = rho_map(&a, &y).mul(&lambda_map(&a, &x));
            let rhs = lambda_map(&a, &x).mul(&rho_map(&a, &y)).scaled(&sign);
            commute &= lhs == rhs;
        }
    }
    c.check("ρ_b λ_a = (-1)^{|a||b|} λ_a ρ_b on all basis pairs", commute);
    let w = sandwich_iso(&a)?;
    c.check("A⊗A^op and End(A) both have dimension 16", w.source.dim() == 16 && w.target.dim() == 16);
    c.check("sandwich map is an algebra homomorphism", w.checks.is_algebra_hom);
    c.check("sandwich map is unital", w.checks.is_unital);
    c.check("sandwich map commutes with differentials", w.checks.commutes_with_d);
    c.check("sandwich map is bijective", w.checks.is_bijective);
    Ok(())
}

fn progenerator_mat2(c: &mut Checks) -> Result<()> {
    let m = mat2_walkthrough_matrix();
    let choice = choose_structure_idempotent(&m)?;
    c.check(format!("idempotent e{0}{0} is chosen", choice.index), choice.index == 1);
    let second = idempotent_containment(&m, 1);
    c.check(
        format!(
            "e22 is rejected: A e22 ⊆ A d(e22) (ranks {}, {}, joint {})",
            second.ae_rank, second.ade_rank, second.joint_rank
        ),
        second.contained(),
    );
    let r = structure_realize(&m)?;
    c.check(
        format!("L = M/N has dims {{-1:1, 0:1}} with basis {}", r.complex.space().labels().join(", ")),
        r.complex.space().dims() == dims(&[(-1, 1), (0, 1)]),
    );
    let low = r.complex.space().indices_in_degree(-1)[0];
    let high = r.complex.space().indices_in_degree(0)[0];
    c.check("d_L is an isomorphism from degree -1 to degree 0", r.complex.diff_basis(low) == &vec![(high, Q.one())]);
    c.check("a ↦ (left multiplication by a on L) is a dg-isomorphism A ≅ End(L)", r.witness.all());
    c.check("the same map is a dg-isomorphism A^op ≅ End(L)^op", r.opposite_witness.all());
    Ok(())
}

fn derived_brauer_kernel(c: &mut Checks) -> Result<()> {
    let (r, w) = trivial_class_witness(&mat2_walkthrough_matrix())?;
    c.check(
        format!("A⊗End(K) ≅ K⊗End(L) verified with C2 = L of dims {:?}", r.complex.space().dims()),
        w.all(),
    );
    let mut algebras = vec![("quaternions".to_string(), hamilton_quaternions())];
    for g in enumerate_good_gradings(3, 1) {
        let m = good_grading_matrix_algebra(Q, 3, g.f().to_vec())?;
        algebras.push((format!("Mat3 f={:?}", g.f()), m.into_algebra()));
    }
    for (name, a) in algebras {
        let flat = forget_structure(&a);
        let n = flat.dim();
        let mult = (0..n * n).map(|idx| flat.mult_basis(idx / n, idx % n).clone()).collect();
        let embedded = trivial_dg(Q, flat.space().labels(), mult, flat.unit().to_vec())?;
        let expected = UngradedDescriptor { dimension: n, center_dimension: 1, is_central_simple: true };
        c.check(
            format!("{name}: forget after embed keeps descriptor (dim {n}, central simple)"),
            forget_descriptor(&embedded) == expected && forget_descriptor(&a) == expected,
        );
    }
    Ok(())
}

fn kunneth(c: &mut Checks) -> Result<()> {
    let algebras = catalog_algebras()?;
    let mut pairs = 0;
    for (na, a) in &algebras {
        for (nb, b) in &algebras {
            if a.dim() * b.dim() > 36 {
                continue;
            }
            let r = kunneth_check(a, b)?;
            if !r.holds {
                c.check(format!("{na} ⊗ {nb}: H {:?} vs convolution {:?}", r.tensor_homology, r.convolution), false);
            }
            pairs += 1;
        }
    }
    c.check(format!("Künneth dimension formula holds on {pairs} pairs"), pairs >= 10);
    let f2 = FieldSpec::prime(2)?;
    let d = dual_numbers(f2);
    let r = kunneth_check(&d, &d)?;
    c.check("Künneth holds for the F2 dual numbers squared", r.holds);
    let total = |x: &DgAlgebra| kernel_dims(x).values().sum::<usize>();
    let t = tensor_product(&d, &d)?;
    c.check(
        format!(
            "dim ker(D) on A⊗A is {} while dim ker(d) ⊗ ker(d) is {}",
            total(&t),
            total(&d) * total(&d)
        ),
        total(&t) > total(&d) * total(&d),
    );
    Ok(())
}
