//! Hom complexes `Hom•(M, N)` with `d(f) = d_N∘f - (-1)^{|f|} f∘d_M`, and the
//! endomorphism dg-algebra `End•(C)` of a bounded complex.

use std::sync::Arc;

use crate::dg::{DgAlgebra, DgModule, KComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{GradedVectorSpace, HomogeneousMap};
use crate::linalg::{is_zero_vec, to_sparse, Coordinatizer, Matrix, SparseVec};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Linearity {
    /// All degree-shifting linear maps.
    #[default]
    BaseField,
    /// Maps with `f(m a) = f(m) a` for the right module structures.
    AlgebraLinear,
}

/// `d_N ∘ f - (-1)^{deg} f ∘ d_M` for a map `f` homogeneous of degree `deg`.
pub fn d_hom(d_target: &Matrix, f: &Matrix, d_source: &Matrix, deg: i64) -> Matrix {
    let sign = f.field().sign(deg);
    d_target.mul(f).sub(&f.mul(d_source).scaled(&sign))
}

/// Degree of a homogeneous matrix between graded spaces; `None` if mixed.
/// The zero matrix reports `Some(0)`.
pub fn map_degree(f: &Matrix, source: &GradedVectorSpace, target: &GradedVectorSpace) -> Option<i64> {
    let mut deg = None;
    for r in 0..f.rows() {
        for c in 0..f.cols() {
            if f[(r, c)].is_zero() {
                continue;
            }
            let d = target.degree(r) - source.degree(c);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
    }
    Some(deg.unwrap_or(0))
}

#[derive(Clone, Debug)]
enum HomCoords {
    /// Position of the matrix unit `target t ← source s` is `slot[s] * dim N + t`.
    MatrixUnits { slot: Vec<usize> },
    Solved(Coordinatizer),
}

#[derive(Clone, Debug)]
pub struct HomComplex {
    field: FieldSpec,
    source: GradedVectorSpace,
    target: GradedVectorSpace,
    space: GradedVectorSpace,
    maps: Vec<Matrix>,
    diff: Vec<SparseVec>,
    coords: HomCoords,
}

/// Builds `Hom•(M, N)`. Base-field flavour: basis of matrix units ordered by
/// (source degree, source index, target index). Algebra-linear flavour: the
/// solution space of `f(ma) = f(m)a`, degree by degree.
pub fn hom_complex(m: &DgModule, n: &DgModule, linearity: Linearity) -> Result<HomComplex> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch { left: m.field(), right: n.field() });
    }
    if !Arc::ptr_eq(m.algebra(), n.algebra()) && m.algebra() != n.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    let (dm, dn) = (m.differential_matrix(), n.differential_matrix());
    let (sm, sn) = (m.space(), n.space());
    let (nm, nn) = (sm.dim(), sn.dim());

    let mut sources: Vec<usize> = (0..nm).collect();
    sources.sort_by_key(|&s| (sm.degree(s), s));
    let unit_matrix = |t: usize, s: usize| {
        let mut e = Matrix::zeros(field, nn, nm);
        e[(t, s)] = field.one();
        e
    };

    let (maps, coords) = match linearity {
        Linearity::BaseField => {
            let mut slot = vec![0; nm];
            let mut maps = Vec::with_capacity(nm * nn);
            for (pos, &s) in sources.iter().enumerate() {
                slot[s] = pos;
                for t in 0..nn {
                    maps.push(unit_matrix(t, s));
                }
            }
            (maps, HomCoords::MatrixUnits { slot })
        }
        Linearity::AlgebraLinear => {
            let algebra = m.algebra();
            let na = algebra.dim();
            let mut degrees: Vec<i64> = Vec::new();
            for s in 0..nm {
                for t in 0..nn {
                    degrees.push(sn.degree(t) - sm.degree(s));
                }
            }
            degrees.sort_unstable();
            degrees.dedup();
            let mut maps = Vec::new();
            for deg in degrees {
                let unknowns: Vec<(usize, usize)> = sources
                    .iter()
                    .flat_map(|&s| (0..nn).map(move |t| (t, s)))
                    .filter(|&(t, s)| sn.degree(t) - sm.degree(s) == deg)
                    .collect();
                // Column for unknown E: concatenation over (m, a) of E(m a) - E(m) a.
                let cols: Vec<Vec<Scalar>> = unknowns
                    .iter()
                    .map(|&(t, s)| {
                        let e = unit_matrix(t, s);
                        let mut col = Vec::with_capacity(nm * na * nn);
                        for mi in 0..nm {
                            let image = e.column(mi);
                            for a in 0..na {
                                let ma = m.act(&basis(field, nm, mi), &algebra.basis_vector(a));
                                let lhs = e.apply(&ma);
                                let rhs = n.act(&image, &algebra.basis_vector(a));
                                col.extend(lhs.iter().zip(&rhs).map(|(x, y)| x - y));
                            }
                        }
                        col
                    })
                    .collect();
                let system = Matrix::from_columns(field, nm * na * nn, &cols);
                for sol in system.nullspace() {
                    let mut f = Matrix::zeros(field, nn, nm);
                    for (c, &(t, s)) in sol.iter().zip(&unknowns) {
                        f[(t, s)] = c.clone();
                    }
                    maps.push(f);
                }
            }
            let flat: Vec<Vec<Scalar>> = maps.iter().map(flatten).collect();
            let coords = Coordinatizer::new(field, nm * nn, flat).expect("solution basis is independent");
            (maps, HomCoords::Solved(coords))
        }
    };

    let degrees = maps.iter().map(|f| map_degree(f, sm, sn).expect("basis maps are homogeneous")).collect();
    let labels = maps.iter().map(|f| describe_map(f, sm, sn)).collect();
    let space = GradedVectorSpace::with_labels(degrees, labels);
    let mut hom = HomComplex {
        field,
        source: sm.clone(),
        target: sn.clone(),
        space,
        maps,
        diff: Vec::new(),
        coords,
    };
    let mut diff = Vec::with_capacity(hom.maps.len());
    for (i, f) in hom.maps.iter().enumerate() {
        let df = d_hom(&dn, f, &dm, hom.space.degree(i));
        let c = hom
            .coords_of(&df)
            .ok_or_else(|| Error::VerificationFailed("d_Hom leaves the Hom space".into()))?;
        diff.push(to_sparse(&c));
    }
    hom.diff = diff;
    if !hom.square_zero() {
        return Err(Error::VerificationFailed("d_Hom does not square to zero".into()));
    }
    Ok(hom)
}

/// `Hom•_K(C1, C2)` for two complexes.
pub fn hom_of_complexes(c1: &KComplex, c2: &KComplex) -> Result<HomComplex> {
    hom_complex(&c1.as_module(), &c2.as_module(), Linearity::BaseField)
}

fn basis(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    crate::linalg::unit_vec(field, n, i)
}

fn flatten(f: &Matrix) -> Vec<Scalar> {
    (0..f.rows()).flat_map(|r| (0..f.cols()).map(move |c| (r, c))).map(|(r, c)| f[(r, c)].clone()).collect()
}

fn describe_map(f: &Matrix, source: &GradedVectorSpace, target: &GradedVectorSpace) -> String {
    let mut terms = Vec::new();
    for s in 0..f.cols() {
        for t in 0..f.rows() {
            let c = &f[(t, s)];
            if c.is_zero() {
                continue;
            }
            let unit = format!("{}<-{}", target.label(t), source.label(s));
            terms.push(if c.is_one() { unit } else { format!("({c})*{unit}") });
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

impl HomComplex {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn basis_map(&self, i: usize) -> &Matrix {
        &self.maps[i]
    }

    pub fn diff_basis(&self, i: usize) -> &SparseVec {
        &self.diff[i]
    }

    /// Coordinates of a map in the Hom basis; `None` if it is not in the span.
    pub fn coords_of(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        match &self.coords {
            HomCoords::MatrixUnits { slot } => {
                let nn = self.target.dim();
                let mut v = vec![self.field.zero(); self.maps.len()];
                for s in 0..f.cols() {
                    for t in 0..f.rows() {
                        v[slot[s] * nn + t] = f[(t, s)].clone();
                    }
                }
                Some(v)
            }
            HomCoords::Solved(c) => c.coords(&flatten(f)),
        }
    }

    pub fn matrix_of(&self, coords: &[Scalar]) -> Matrix {
        let mut f = Matrix::zeros(self.field, self.target.dim(), self.source.dim());
        for (c, m) in coords.iter().zip(&self.maps) {
            if !c.is_zero() {
                f = f.add(&m.scaled(c));
            }
        }
        f
    }

    fn square_zero(&self) -> bool {
        (0..self.dim()).all(|i| {
            let mut acc = vec![self.field.zero(); self.dim()];
            for (k, c) in &self.diff[i] {
                for (l, x) in &self.diff[*k] {
                    acc[*l] += &(c * x);
                }
            }
            is_zero_vec(&acc)
        })
    }

    pub fn differential_map(&self) -> HomogeneousMap {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = self.diff.iter().map(|s| crate::linalg::to_dense(self.field, n, s)).collect();
        HomogeneousMap::from_dense(self.field, self.space.clone(), self.space.clone(), 1, &Matrix::from_columns(self.field, n, &cols))
            .expect("d_Hom has degree +1")
    }

    /// The Hom complex as a plain complex.
    pub fn as_complex(&self) -> KComplex {
        KComplex::new(self.field, self.space.clone(), self.diff.clone()).expect("d_Hom squares to zero")
    }
}

/// `End•(C)` as a dg-algebra under composition, together with the Hom data
/// needed to move between matrices and algebra coordinates.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub complex: KComplex,
    pub hom: HomComplex,
    pub algebra: DgAlgebra,
}

impl EndAlgebra {
    pub fn coords_of(&self, f: &Matrix) -> Vec<Scalar> {
        self.hom.coords_of(f).expect("every matrix is a combination of matrix units")
    }

    pub fn matrix_of(&self, coords: &[Scalar]) -> Matrix {
        self.hom.matrix_of(coords)
    }
}

/// `End•(C) = Hom•_K(C, C)` with composition, identity, and `d_Hom`.
pub fn end_dg_algebra(c: &KComplex) -> Result<EndAlgebra> {
    if c.dim() == 0 {
        return Err(Error::ZeroComplex);
    }
    let hom = hom_of_complexes(c, c)?;
    let field = c.field();
    let n = hom.dim();
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let prod = hom.basis_map(i).mul(hom.basis_map(j));
            mult.push(to_sparse(&hom.coords_of(&prod).expect("matrix units span")));
        }
    }
    let unit = hom.coords_of(&Matrix::identity(field, c.dim())).expect("matrix units span");
    let diff = (0..n).map(|i| hom.diff_basis(i).clone()).collect();
    let algebra = DgAlgebra::new(field, hom.space().clone(), mult, unit, diff)?;
    Ok(EndAlgebra { complex: c.clone(), hom, algebra })
}
