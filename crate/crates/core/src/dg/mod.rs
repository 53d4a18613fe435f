//! Finite-dimensional dg-algebras, dg-modules, complexes, and the basic
//! constructions on them.

mod algebra;
mod module;
mod ops;
mod semisimple;

pub use algebra::{Axiom, AxiomViolation, DgAlgebra, ValidationReport};
pub(crate) use algebra::koszul_odd;
pub use module::{validate_module, DgModule, KComplex};
pub use ops::{
    center, contracting_element, forget_structure, homology, induced_subalgebra, kernel_dims, kernel_subalgebra,
    opposite, swap_iso, swap_map, tensor_product, trivial_dg, ContractingElement, Homology, Subalgebra,
};
pub use semisimple::{is_semisimple_ungraded, is_tgr_semisimple, Semisimplicity, TgrReport, MAX_EXHAUSTIVE};

#[cfg(test)]
mod tests;
