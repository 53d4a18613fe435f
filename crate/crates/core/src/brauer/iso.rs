use crate::dg::{tensor_product, DgAlgebra, KComplex};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graded::HomogeneousMap;
use crate::hom::end_dg_algebra;
use crate::linalg::{is_zero_vec, sub_vec, Matrix};

/// Results of checking a candidate dg-algebra isomorphism.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IsoChecks {
    pub is_algebra_hom: bool,
    pub is_unital: bool,
    pub commutes_with_d: bool,
    pub is_bijective: bool,
}

impl IsoChecks {
    pub fn all(&self) -> bool {
        self.is_algebra_hom && self.is_unital && self.commutes_with_d && self.is_bijective
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.is_algebra_hom {
            out.push("multiplicativity");
        }
        if !self.is_unital {
            out.push("unitality");
        }
        if !self.commutes_with_d {
            out.push("compatibility with d");
        }
        if !self.is_bijective {
            out.push("bijectivity");
        }
        out
    }
}

/// A degree-0 map between two dg-algebras together with its verification.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub source: DgAlgebra,
    pub target: DgAlgebra,
    pub map: HomogeneousMap,
    pub checks: IsoChecks,
    /// First basis pair `(i, j)` with `m(e_i e_j) != m(e_i) m(e_j)`.
    pub product_failure: Option<(usize, usize)>,
    /// First basis vector with `m(d e_i) != d(m e_i)`.
    pub differential_failure: Option<usize>,
}

impl IsoWitness {
    pub fn all(&self) -> bool {
        self.checks.all()
    }
}

/// Checks multiplicativity on all basis pairs, unitality, compatibility with
/// the differentials on all basis vectors, and bijectivity.
pub fn verify_dg_iso(a: &DgAlgebra, b: &DgAlgebra, m: &HomogeneousMap) -> Result<IsoWitness> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch { left: a.field(), right: b.field() });
    }
    if m.degree() != 0 || m.source() != a.space() || m.target() != b.space() {
        return Err(Error::SpaceMismatch("expected a degree-0 map between the underlying spaces".into()));
    }
    let dense = m.to_dense();
    let images: Vec<Vec<Scalar>> = dense.columns();

    let mut product_failure = None;
    'outer: for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = dense.apply(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
            let rhs = b.mul(&images[i], &images[j]);
            if lhs != rhs {
                product_failure = Some((i, j));
                break 'outer;
            }
        }
    }
    let is_unital = dense.apply(a.unit()) == b.unit();
    let differential_failure =
        (0..a.dim()).find(|&i| !is_zero_vec(&sub_vec(&dense.apply(&a.d(&a.basis_vector(i))), &b.d(&images[i]))));
    let is_bijective = a.dim() == b.dim() && dense.rank() == a.dim();
    Ok(IsoWitness {
        source: a.clone(),
        target: b.clone(),
        map: m.clone(),
        checks: IsoChecks {
            is_algebra_hom: product_failure.is_none(),
            is_unital,
            commutes_with_d: differential_failure.is_none(),
            is_bijective,
        },
        product_failure,
        differential_failure,
    })
}

/// Both sides `A⊗End•(C1)` and `B⊗End•(C2)` of an equivalence.
pub fn equivalence_sides(a: &DgAlgebra, b: &DgAlgebra, c1: &KComplex, c2: &KComplex) -> Result<(DgAlgebra, DgAlgebra)> {
    let lhs = tensor_product(a, &end_dg_algebra(c1)?.algebra)?;
    let rhs = tensor_product(b, &end_dg_algebra(c2)?.algebra)?;
    Ok((lhs, rhs))
}

/// Verifies that `m` is a dg-isomorphism `A⊗End•(C1) → B⊗End•(C2)`.
pub fn verify_equivalence(
    a: &DgAlgebra,
    b: &DgAlgebra,
    c1: &KComplex,
    c2: &KComplex,
    m: &HomogeneousMap,
) -> Result<IsoWitness> {
    let fields = [a.field(), b.field(), c1.field(), c2.field()];
    if let Some(f) = fields.iter().find(|&&f| f != fields[0]) {
        return Err(Error::FieldMismatch { left: fields[0], right: *f });
    }
    let (n1, n2) = (a.dim() * c1.dim() * c1.dim(), b.dim() * c2.dim() * c2.dim());
    if n1 != n2 {
        return Err(Error::DimensionMismatch { context: "sides of the equivalence".into(), expected: n1, found: n2 });
    }
    let (lhs, rhs) = equivalence_sides(a, b, c1, c2)?;
    verify_dg_iso(&lhs, &rhs, m)
}

/// Inverse of a bijective degree-0 map.
pub fn inverse_map(m: &HomogeneousMap) -> Option<HomogeneousMap> {
    let inv: Matrix = m.to_dense().inverse()?;
    HomogeneousMap::from_dense(m.field(), m.target().clone(), m.source().clone(), 0, &inv).ok()
}
