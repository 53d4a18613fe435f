//! Realizing a split central simple dg-algebra as the endomorphisms of a
//! complex: `M = A·e + A·d(e)`, `N = A·d(e)`, `L = M/N`, and left
//! multiplication `A → End•(L)`.

use super::iso::{verify_dg_iso, IsoWitness};
use super::sandwich::is_central_simple;
use crate::dg::{opposite, KComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{quotient_by, GradedVectorSpace, HomogeneousMap, Quotient, Subspace};
use crate::hom::{end_dg_algebra, EndAlgebra};
use crate::linalg::{to_sparse, Coordinatizer, Matrix};
use crate::matrix_dg::MatrixDgAlgebra;

/// Whether `A·e_{i,i} ⊆ A·d(e_{i,i})`, decided by comparing ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    /// 1-based index of the idempotent.
    pub index: usize,
    pub ae_rank: usize,
    pub ade_rank: usize,
    /// Rank of `A·e + A·d(e)`.
    pub joint_rank: usize,
}

impl Containment {
    pub fn contained(&self) -> bool {
        self.joint_rank == self.ade_rank
    }
}

/// Spanning vectors of the left ideal `A·v`.
fn left_ideal(m: &MatrixDgAlgebra, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    m.algebra().right_mult_matrix(v).columns()
}

fn rank(field: FieldSpec, n: usize, vs: &[Vec<Scalar>]) -> usize {
    if vs.is_empty() {
        0
    } else {
        Matrix::from_columns(field, n, vs).rank()
    }
}

/// Containment data for `e_{i,i}` (0-based `i`).
pub fn idempotent_containment(m: &MatrixDgAlgebra, i: usize) -> Containment {
    let a = m.algebra();
    let e = m.unit_matrix(i, i);
    let ae = left_ideal(m, &e);
    let ade = left_ideal(m, &a.d(&e));
    let mut joint = ae.clone();
    joint.extend(ade.iter().cloned());
    let (f, n) = (a.field(), a.dim());
    Containment { index: i + 1, ae_rank: rank(f, n, &ae), ade_rank: rank(f, n, &ade), joint_rank: rank(f, n, &joint) }
}

#[derive(Clone, Debug)]
pub struct IdempotentChoice {
    /// 1-based index `i` of the chosen `e_{i,i}`.
    pub index: usize,
    pub accepted: Containment,
    /// A vector of `A·e` outside `A·d(e)`.
    pub witness: Vec<Scalar>,
    /// Containment data of every smaller index, all of which failed.
    pub rejected: Vec<Containment>,
}

/// The least `i` with `A·e_{i,i} ⊄ A·d(e_{i,i})`.
pub fn choose_structure_idempotent(m: &MatrixDgAlgebra) -> Result<IdempotentChoice> {
    let a = m.algebra();
    let (field, n) = (a.field(), a.dim());
    let mut rejected = Vec::new();
    for i in 0..m.n() {
        let c = idempotent_containment(m, i);
        if c.contained() {
            rejected.push(c);
            continue;
        }
        let e = m.unit_matrix(i, i);
        let ade = left_ideal(m, &a.d(&e));
        let witness = left_ideal(m, &e)
            .into_iter()
            .find(|v| {
                let mut trial = ade.clone();
                trial.push(v.clone());
                rank(field, n, &trial) > c.ade_rank
            })
            .expect("A·e is not contained in A·d(e)");
        return Ok(IdempotentChoice { index: i + 1, accepted: c, witness, rejected });
    }
    Err(Error::NoSuitableIdempotent(rejected))
}

#[derive(Clone, Debug)]
pub struct StructureRealization {
    pub choice: IdempotentChoice,
    /// `M = A·e + A·d(e)` inside `A`.
    pub m: Subspace,
    /// `N = A·d(e)` inside `M`, in `M`'s coordinates.
    pub n_in_m: Subspace,
    pub quotient: Quotient,
    /// `L = M/N` with the induced differential.
    pub complex: KComplex,
    pub end: EndAlgebra,
    /// Left multiplication `A → End•(L)`, verified.
    pub witness: IsoWitness,
    /// The same linear map read as `A^op → End•(L)^op`, verified.
    pub opposite_witness: IsoWitness,
}

impl StructureRealization {
    /// Matrix of left multiplication by `x` on `L`.
    pub fn action(&self, x: &[Scalar]) -> Matrix {
        self.end.matrix_of(&self.witness.map.apply(x))
    }
}

pub fn structure_realize(mat: &MatrixDgAlgebra) -> Result<StructureRealization> {
    let a = mat.algebra();
    if !is_central_simple(a) {
        return Err(Error::NotCentralSimple);
    }
    let field = a.field();
    let choice = choose_structure_idempotent(mat)?;
    let i = choice.index - 1;
    let e = mat.unit_matrix(i, i);
    let de = a.d(&e);

    let n_vectors = left_ideal(mat, &de);
    let mut m_vectors = left_ideal(mat, &e);
    m_vectors.extend(n_vectors.iter().cloned());
    let m = Subspace::span(field, a.space(), &m_vectors)?;
    let m_basis = m.vectors();
    let m_coords = Coordinatizer::new(field, a.dim(), m_basis.clone()).expect("subspace basis is independent");
    let in_m = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        m_coords.coords(v).ok_or_else(|| Error::VerificationFailed("M is not a left ideal stable under d".into()))
    };

    let n_local: Vec<Vec<Scalar>> = n_vectors.iter().map(|v| in_m(v)).collect::<Result<_>>()?;
    let n_in_m = Subspace::span(field, &m.space, &n_local)?;
    let quotient = quotient_by(&m.space, &n_in_m.inclusion)?;
    let section = quotient.section.to_dense();
    let projection = quotient.projection.to_dense();
    let reps: Vec<Vec<Scalar>> = section.columns().iter().map(|s| m_coords.combine(s)).collect();
    let labels = reps.iter().map(|r| format!("[{}]", a.format_vector(r))).collect();
    let l_space = GradedVectorSpace::with_labels(quotient.space.degrees().to_vec(), labels);

    // d_L(r + N) = d(r) + N and x·(r + N) = x r + N on the fixed representatives.
    let induced = |f: &dyn Fn(&[Scalar]) -> Vec<Scalar>| -> Result<Matrix> {
        let cols: Vec<Vec<Scalar>> =
            reps.iter().map(|r| Ok(projection.apply(&in_m(&f(r))?))).collect::<Result<_>>()?;
        Ok(Matrix::from_columns(field, reps.len(), &cols))
    };
    let dl = induced(&|r| a.d(r))?;
    let complex = KComplex::new(field, l_space, dl.columns().iter().map(|c| to_sparse(c)).collect())?;
    let end = end_dg_algebra(&complex)?;

    let mut cols = Vec::with_capacity(a.dim());
    for k in 0..a.dim() {
        let x = a.basis_vector(k);
        cols.push(end.coords_of(&induced(&|r| a.mul(&x, r))?));
    }
    let phi = Matrix::from_columns(field, end.algebra.dim(), &cols);
    let map = HomogeneousMap::from_dense(field, a.space().clone(), end.algebra.space().clone(), 0, &phi)?;
    let witness = verify_dg_iso(a, &end.algebra, &map)?;
    let opposite_witness = verify_dg_iso(&opposite(a), &opposite(&end.algebra), &map)?;
    for w in [&witness, &opposite_witness] {
        if !w.all() {
            return Err(Error::VerificationFailed(format!(
                "structure map fails: {}",
                w.checks.failures().join(", ")
            )));
        }
    }
    Ok(StructureRealization { choice, m, n_in_m, quotient, complex, end, witness, opposite_witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Dims;
    use crate::matrix_dg::good_grading_matrix_algebra;
    use crate::samples;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn dims(pairs: &[(i64, usize)]) -> Dims {
        pairs.iter().copied().collect()
    }

    #[test]
    fn zero_differential_picks_first_index() {
        let m = good_grading_matrix_algebra(Q, 3, vec![0, 0]).unwrap();
        let c = choose_structure_idempotent(&m).unwrap();
        assert_eq!(c.index, 1);
        assert_eq!(c.accepted.ade_rank, 0);
        let r = structure_realize(&m).unwrap();
        assert_eq!(r.complex.space().dims(), dims(&[(0, 3)]));
    }

    #[test]
    fn walkthrough_idempotents() {
        let m = samples::mat2_walkthrough_matrix();
        let c = choose_structure_idempotent(&m).unwrap();
        assert_eq!(c.index, 1);
        assert!(c.rejected.is_empty());
        let second = idempotent_containment(&m, 1);
        assert!(second.contained());
        assert_eq!((second.ae_rank, second.ade_rank, second.joint_rank), (2, 2, 2));
    }

    #[test]
    fn walkthrough_realization() {
        let m = samples::mat2_walkthrough_matrix();
        let r = structure_realize(&m).unwrap();
        assert_eq!(r.m.dims(), dims(&[(-1, 1), (0, 2), (1, 1)]));
        assert_eq!(r.n_in_m.dims(), dims(&[(0, 1), (1, 1)]));
        assert_eq!(r.complex.space().dims(), dims(&[(-1, 1), (0, 1)]));
        assert_eq!(r.end.algebra.space().dims(), dims(&[(-1, 1), (0, 2), (1, 1)]));
        assert!(r.witness.all());
        assert!(r.opposite_witness.all());
        // The degree -1 class is e21 + N and d_L sends it to the class of e11.
        let space = r.complex.space();
        let low = space.indices_in_degree(-1)[0];
        let high = space.indices_in_degree(0)[0];
        assert_eq!(space.label(low), "[e21]");
        assert_eq!(space.label(high), "[e11]");
        assert_eq!(r.complex.diff_basis(low), &vec![(high, Q.one())]);
    }

    #[test]
    fn three_by_three_with_corner_differential() {
        let base = good_grading_matrix_algebra(Q, 3, vec![1, 0]).unwrap();
        let m = base.with_inner_differential(&base.unit_matrix(0, 2)).unwrap();
        let c = choose_structure_idempotent(&m).unwrap();
        for rej in &c.rejected {
            assert!(rej.contained());
        }
        assert!(!idempotent_containment(&m, c.index - 1).contained());
        let r = structure_realize(&m).unwrap();
        assert_eq!(r.complex.dim(), 3);
    }
}
