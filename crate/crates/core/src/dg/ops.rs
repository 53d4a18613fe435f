use std::collections::BTreeMap;

use super::algebra::{koszul_odd, DgAlgebra};
use crate::brauer::{verify_dg_iso, IsoWitness};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graded::{image_of, kernel_of, tensor_of_spaces, Dims, GradedVectorSpace, HomogeneousMap, Subspace};
use crate::linalg::{is_zero_vec, sub_vec, to_sparse, Coordinatizer, Matrix, SparseVec};

/// `x ·op y = (-1)^{|x||y|} y x`, same space and differential.
pub fn opposite(a: &DgAlgebra) -> DgAlgebra {
    let field = a.field();
    let minus = field.from_i64(-1);
    DgAlgebra::from_fn(
        field,
        a.space().clone(),
        |i, j| {
            let prod = a.mult_basis(j, i).clone();
            if koszul_odd(a.degree(i), a.degree(j)) {
                prod.into_iter().map(|(k, c)| (k, &minus * &c)).collect()
            } else {
                prod
            }
        },
        a.unit().to_vec(),
        |i| a.diff_basis(i).clone(),
    )
    .expect("opposite of a valid dg-algebra is valid")
}

/// Graded tensor product: `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd` and
/// `d(a⊗b) = d(a)⊗b + (-1)^{|a|} a⊗d(b)`. Basis `a_i⊗b_j` at `i * dim B + j`.
pub fn tensor_product(a: &DgAlgebra, b: &DgAlgebra) -> Result<DgAlgebra> {
    let field = a.field();
    if field != b.field() {
        return Err(Error::FieldMismatch { left: field, right: b.field() });
    }
    let nb = b.dim();
    let space = tensor_of_spaces(a.space(), b.space());
    let mut unit = vec![field.zero(); a.dim() * nb];
    for (i, x) in a.unit().iter().enumerate() {
        for (j, y) in b.unit().iter().enumerate() {
            unit[i * nb + j] = x * y;
        }
    }
    DgAlgebra::from_fn(
        field,
        space,
        |p, q| {
            let (ai, bi) = (p / nb, p % nb);
            let (aj, bj) = (q / nb, q % nb);
            let sign = field.sign(i64::from(koszul_odd(b.degree(bi), a.degree(aj))));
            let mut out = SparseVec::new();
            for (k, x) in a.mult_basis(ai, aj) {
                for (l, y) in b.mult_basis(bi, bj) {
                    out.push((k * nb + l, &sign * &(x * y)));
                }
            }
            out
        },
        unit,
        |p| {
            let (ai, bi) = (p / nb, p % nb);
            let mut out: SparseVec = a.diff_basis(ai).iter().map(|(k, c)| (k * nb + bi, c.clone())).collect();
            let sign = field.sign(a.degree(ai));
            out.extend(b.diff_basis(bi).iter().map(|(l, c)| (ai * nb + l, &sign * c)));
            out
        },
    )
}

/// `a⊗b ↦ (-1)^{|a||b|} b⊗a` as a degree-0 map from `A⊗B` to `B⊗A`.
/// With `signed = false` the Koszul sign is dropped (useful only as a foil).
pub fn swap_map(a: &DgAlgebra, b: &DgAlgebra, signed: bool) -> HomogeneousMap {
    let field = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let source = tensor_of_spaces(a.space(), b.space());
    let target = tensor_of_spaces(b.space(), a.space());
    let mut m = Matrix::zeros(field, na * nb, na * nb);
    for i in 0..na {
        for j in 0..nb {
            let odd = signed && koszul_odd(a.degree(i), b.degree(j));
            m[(j * na + i, i * nb + j)] = field.sign(i64::from(odd));
        }
    }
    HomogeneousMap::from_dense(field, source, target, 0, &m).expect("swap preserves degrees")
}

/// The commutativity isomorphism `A⊗B ≅ B⊗A`, machine-verified.
pub fn swap_iso(a: &DgAlgebra, b: &DgAlgebra) -> Result<IsoWitness> {
    let ab = tensor_product(a, b)?;
    let ba = tensor_product(b, a)?;
    verify_dg_iso(&ab, &ba, &swap_map(a, b, true))
}

/// A subalgebra presented by an explicit basis inside the ambient algebra.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: DgAlgebra,
    /// Basis vectors in ambient coordinates, matching `algebra`'s basis.
    pub basis: Vec<Vec<Scalar>>,
}

/// Restricts the structure of `a` to the span of `basis` (homogeneous,
/// independent, closed under products, containing 1). The differential is
/// restricted too when `keep_differential` is set, and zero otherwise.
pub fn induced_subalgebra(a: &DgAlgebra, basis: Vec<Vec<Scalar>>, keep_differential: bool) -> Result<Subalgebra> {
    let field = a.field();
    let coords = Coordinatizer::new(field, a.dim(), basis.clone())
        .ok_or_else(|| Error::VerificationFailed("subalgebra basis is dependent".into()))?;
    let degrees = basis
        .iter()
        .map(|v| a.space().degree_of(v).ok_or(Error::NotHomogeneous { degree: 0, row: 0, col: 0 }))
        .collect::<Result<Vec<_>>>()?;
    let labels = basis.iter().map(|v| format!("[{}]", a.format_vector(v))).collect();
    let space = GradedVectorSpace::with_labels(degrees, labels);
    let not_closed = |what: &str| Error::VerificationFailed(format!("subspace not closed under {what}"));
    let k = basis.len();
    let mut mult = Vec::with_capacity(k * k);
    for x in &basis {
        for y in &basis {
            mult.push(to_sparse(&coords.coords(&a.mul(x, y)).ok_or_else(|| not_closed("multiplication"))?));
        }
    }
    let unit = coords.coords(a.unit()).ok_or_else(|| not_closed("the unit"))?;
    let mut diff = Vec::with_capacity(k);
    for x in &basis {
        if keep_differential {
            diff.push(to_sparse(&coords.coords(&a.d(x)).ok_or_else(|| not_closed("the differential"))?));
        } else {
            diff.push(Vec::new());
        }
    }
    Ok(Subalgebra { algebra: DgAlgebra::new(field, space, mult, unit, diff)?, basis })
}

/// `ker(d)` with the restricted multiplication and zero differential.
pub fn kernel_subalgebra(a: &DgAlgebra) -> Result<Subalgebra> {
    let ker = kernel_of(&a.differential_map());
    induced_subalgebra(a, ker.vectors(), false)
}

/// Homology `H(A) = ker d / im d` with the induced product on fixed coset
/// representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    pub algebra: DgAlgebra,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    /// Cycle representatives, one per basis vector of `algebra`.
    pub representatives: Vec<Vec<Scalar>>,
}

impl Homology {
    pub fn dims(&self) -> Dims {
        self.algebra.space().dims()
    }

    pub fn is_acyclic(&self) -> bool {
        self.algebra.dim() == 0
    }
}

pub fn homology(a: &DgAlgebra) -> Result<Homology> {
    let field = a.field();
    let dmap = a.differential_map();
    let cycles = kernel_of(&dmap);
    let boundaries = image_of(&dmap);
    let bvecs = boundaries.vectors();

    let mut representatives = Vec::new();
    let mut spanning = bvecs.clone();
    for z in cycles.vectors() {
        let mut trial = spanning.clone();
        trial.push(z.clone());
        if Matrix::from_columns(field, a.dim(), &trial).rank() == trial.len() {
            spanning = trial;
            representatives.push(z);
        }
    }
    let nb = bvecs.len();
    let coords = Coordinatizer::new(field, a.dim(), spanning).expect("independent by construction");
    let class = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        let c = coords
            .coords(v)
            .ok_or_else(|| Error::VerificationFailed("product of cycles is not a cycle".into()))?;
        Ok(c[nb..].to_vec())
    };

    // im(d) must be a two-sided ideal in ker(d) for the product to descend.
    for b in &bvecs {
        for z in cycles.vectors() {
            for prod in [a.mul(b, &z), a.mul(&z, b)] {
                if !is_zero_vec(&class(&prod)?) {
                    return Err(Error::VerificationFailed("boundaries are not an ideal of the cycles".into()));
                }
            }
        }
    }

    let k = representatives.len();
    let mut mult = Vec::with_capacity(k * k);
    for x in &representatives {
        for y in &representatives {
            mult.push(to_sparse(&class(&a.mul(x, y))?));
        }
    }
    let unit = class(a.unit())?;
    let degrees = representatives.iter().map(|v| a.space().degree_of(v).expect("homogeneous cycle")).collect();
    let labels = representatives.iter().map(|v| format!("[{}]", a.format_vector(v))).collect();
    let space = GradedVectorSpace::with_labels(degrees, labels);
    let algebra = DgAlgebra::new(field, space, mult, unit, vec![Vec::new(); k])?;
    Ok(Homology { algebra, cycles, boundaries, representatives })
}

/// A solution of `d(z) = 1` together with the checks of
/// `A = ker(d) ⊕ z·ker(d)` and `d(z n) = n` for `n` in a basis of `ker(d)`.
#[derive(Clone, Debug)]
pub struct ContractingElement {
    pub z: Vec<Scalar>,
    pub kernel_dim: usize,
    pub decomposition_holds: bool,
    pub contraction_holds: bool,
}

impl ContractingElement {
    pub fn certified(&self) -> bool {
        self.decomposition_holds && self.contraction_holds
    }
}

/// Subsets of the degree -1 basis are searched by increasing size up to this
/// many candidates; beyond it the echelon solution is returned.
const MAX_SUPPORT_SEARCH: usize = 16;

/// Finds the minimum-support `z` (first in lexicographic order of supports)
/// in degree -1 with `d(z) = 1`, or `None` if `1 ∉ d(A_{-1})`.
pub fn contracting_element(a: &DgAlgebra) -> Option<ContractingElement> {
    let field = a.field();
    let n = a.dim();
    let candidates = a.space().indices_in_degree(-1).to_vec();
    let d = a.differential_matrix();
    let restricted = |cols: &[usize]| Matrix::from_fn(field, n, cols.len(), |r, c| d[(r, cols[c])].clone());
    let full = restricted(&candidates).solve(a.unit())?;

    let mut z = a.zero_vector();
    let mut found = false;
    if candidates.len() <= MAX_SUPPORT_SEARCH {
        'search: for size in 0..=candidates.len() {
            for subset in combinations(candidates.len(), size) {
                let cols: Vec<usize> = subset.iter().map(|&s| candidates[s]).collect();
                if let Some(x) = restricted(&cols).solve(a.unit()) {
                    for (c, v) in cols.iter().zip(x) {
                        z[*c] = v;
                    }
                    found = true;
                    break 'search;
                }
            }
        }
    }
    if !found {
        for (c, v) in candidates.iter().zip(full) {
            z[*c] = v;
        }
    }

    let kernel = kernel_of(&a.differential_map()).vectors();
    let z_kernel: Vec<Vec<Scalar>> = kernel.iter().map(|k| a.mul(&z, k)).collect();
    let mut all = kernel.clone();
    all.extend(z_kernel.iter().cloned());
    let decomposition_holds = kernel.len() * 2 == n && Matrix::from_columns(field, n, &all).rank() == n;
    let contraction_holds = kernel.iter().zip(&z_kernel).all(|(k, zk)| is_zero_vec(&sub_vec(&a.d(zk), k)));
    Some(ContractingElement { z, kernel_dim: kernel.len(), decomposition_holds, contraction_holds })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ungraded center `{x : xb = bx for all b}`, solved degree by degree.
pub fn center(a: &DgAlgebra) -> Subspace {
    let field = a.field();
    let n = a.dim();
    let mut vectors = Vec::new();
    for k in a.space().support() {
        let idx = a.space().indices_in_degree(k);
        // Column c: the concatenation over j of [e_c, e_j].
        let cols: Vec<Vec<Scalar>> = idx
            .iter()
            .map(|&i| {
                let ei = a.basis_vector(i);
                (0..n).flat_map(|j| sub_vec(&a.mul(&ei, &a.basis_vector(j)), &a.mul(&a.basis_vector(j), &ei))).collect()
            })
            .collect();
        let system = Matrix::from_columns(field, n * n, &cols);
        for sol in system.nullspace() {
            vectors.push(a.space().embed(field, k, &sol));
        }
    }
    Subspace::span(field, a.space(), &vectors).expect("center vectors are homogeneous")
}

/// An ungraded algebra as a dg-algebra: everything in degree 0, `d = 0`.
pub fn trivial_dg(
    field: crate::field::FieldSpec,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
    unit: Vec<Scalar>,
) -> Result<DgAlgebra> {
    let n = labels.len();
    let space = GradedVectorSpace::with_labels(vec![0; n], labels);
    DgAlgebra::new(field, space, mult, unit, vec![Vec::new(); n])
}

/// The same algebra data with the grading and differential forgotten.
pub fn forget_structure(a: &DgAlgebra) -> DgAlgebra {
    let n = a.dim();
    let mult = (0..n * n).map(|idx| a.mult_basis(idx / n, idx % n).clone()).collect();
    trivial_dg(a.field(), a.space().labels(), mult, a.unit().to_vec()).expect("forgetting keeps the axioms")
}

/// `dims` of `ker d` per degree.
pub fn kernel_dims(a: &DgAlgebra) -> BTreeMap<i64, usize> {
    kernel_of(&a.differential_map()).dims()
}
