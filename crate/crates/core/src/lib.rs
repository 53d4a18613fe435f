//! Exact computations with finite-dimensional differential graded algebras
//! over `ℚ` and `𝔽_p`: graded linear algebra, dg-algebras and modules, Hom
//! complexes, good gradings on matrix algebras, and verification of
//! Brauer-type isomorphisms and equivalences.
//!
//! Every algebra is given by structure constants on a homogeneous basis and is
//! validated exhaustively on construction, so values of [`DgAlgebra`] always
//! satisfy the axioms.

pub mod brauer;
pub mod dg;
pub mod error;
pub mod field;
pub mod graded;
pub mod hom;
pub mod linalg;
pub mod matrix_dg;
pub mod samples;

pub use brauer::{
    choose_structure_idempotent, forget_descriptor, is_central_simple, kunneth_check, lambda_map, quaternion_algebra,
    rho_map, sandwich_iso, structure_realize, verify_dg_iso, verify_equivalence, Containment, IsoChecks, IsoWitness,
    KunnethReport, StructureRealization, UngradedDescriptor,
};
pub use dg::{
    center, contracting_element, homology, is_semisimple_ungraded, is_tgr_semisimple, kernel_subalgebra, opposite,
    swap_iso, swap_map, tensor_product, trivial_dg, Axiom, DgAlgebra, DgModule, KComplex, Semisimplicity,
    ValidationReport,
};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use graded::{
    compose_maps, image_of, kernel_of, quotient_by, tensor_of_spaces, Dims, GradedVectorSpace, HomogeneousMap,
};
pub use hom::{end_dg_algebra, hom_complex, EndAlgebra, HomComplex, Linearity};
pub use linalg::{Matrix, SparseVec};
pub use matrix_dg::{enumerate_good_gradings, good_grading_matrix_algebra, inner_differential, GoodGrading, MatrixDgAlgebra};
