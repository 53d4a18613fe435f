use std::sync::Arc;

use super::algebra::{koszul_odd, Axiom, DgAlgebra, ValidationReport};
use super::ops::opposite;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{GradedVectorSpace, HomogeneousMap};
use crate::linalg::{normalize_sparse, to_dense, to_sparse, Matrix, SparseVec};

/// A right dg-module over a [`DgAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgModule {
    algebra: Arc<DgAlgebra>,
    space: GradedVectorSpace,
    /// `m_i · a_j` at index `i * dim(A) + j`.
    action: Vec<SparseVec>,
    diff: Vec<SparseVec>,
}

impl DgModule {
    pub fn new(
        algebra: Arc<DgAlgebra>,
        space: GradedVectorSpace,
        action: Vec<SparseVec>,
        diff: Vec<SparseVec>,
    ) -> Result<Self> {
        let (n, na) = (space.dim(), algebra.dim());
        let mut report = ValidationReport::default();
        if action.len() != n * na || diff.len() != n {
            report.push(Axiom::Shape, vec![], format!("module of dim {n} over algebra of dim {na}"));
            return Err(Error::Axioms(report));
        }
        for s in action.iter().chain(&diff) {
            if s.iter().any(|(k, c)| *k >= n || c.field() != algebra.field()) {
                report.push(Axiom::IndexOutOfRange, vec![], "entry out of range or in the wrong field");
                return Err(Error::Axioms(report));
            }
        }
        let module = DgModule {
            algebra,
            space,
            action: action.into_iter().map(normalize_sparse).collect(),
            diff: diff.into_iter().map(normalize_sparse).collect(),
        };
        validate_module(&module).into_result(module)
    }

    /// `A` as a right module over itself.
    pub fn regular(algebra: Arc<DgAlgebra>) -> Self {
        let n = algebra.dim();
        let action = (0..n * n).map(|idx| algebra.mult_basis(idx / n, idx % n).clone()).collect();
        let diff = (0..n).map(|i| algebra.diff_basis(i).clone()).collect();
        DgModule { space: algebra.space().clone(), algebra, action, diff }
    }

    /// `A` as a left module over itself, presented as a right module over
    /// `A^op` through `m · a = (-1)^{|a||m|} a m`.
    pub fn left_regular(algebra: &DgAlgebra) -> Self {
        let op = Arc::new(opposite(algebra));
        let n = algebra.dim();
        let action = (0..n * n)
            .map(|idx| {
                let (m, a) = (idx / n, idx % n);
                let sign = algebra.field().sign(i64::from(koszul_odd(algebra.degree(a), algebra.degree(m))));
                algebra.mult_basis(a, m).iter().map(|(k, c)| (*k, &sign * c)).collect()
            })
            .collect();
        let diff = (0..n).map(|i| algebra.diff_basis(i).clone()).collect();
        DgModule { algebra: op, space: algebra.space().clone(), action, diff }
    }

    pub fn algebra(&self) -> &Arc<DgAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn act_basis(&self, m: usize, a: usize) -> &SparseVec {
        &self.action[m * self.algebra.dim() + a]
    }

    pub fn diff_basis(&self, i: usize) -> &SparseVec {
        &self.diff[i]
    }

    fn act_sparse(&self, m: &SparseVec, a: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, x) in m {
            for (j, y) in a {
                let xy = x * y;
                out.extend(self.act_basis(*i, *j).iter().map(|(k, c)| (*k, &xy * c)));
            }
        }
        normalize_sparse(out)
    }

    fn d_sparse(&self, m: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, x) in m {
            out.extend(self.diff[*i].iter().map(|(k, c)| (*k, x * c)));
        }
        normalize_sparse(out)
    }

    /// `m · a` on dense vectors.
    pub fn act(&self, m: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        to_dense(self.field(), self.dim(), &self.act_sparse(&to_sparse(m), &to_sparse(a)))
    }

    pub fn differential_matrix(&self) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = self.diff.iter().map(|s| to_dense(self.field(), n, s)).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }
}

/// Checks the right-module axioms and `d_M(ma) = d_M(m)a + (-1)^{|m|} m d(a)`
/// on every pair of basis vectors.
pub fn validate_module(module: &DgModule) -> ValidationReport {
    let mut report = ValidationReport::default();
    let a = &module.algebra;
    let field = a.field();
    let (n, na) = (module.dim(), a.dim());
    let deg = |i: usize| module.space.degree(i);

    for m in 0..n {
        for j in 0..na {
            for (k, _) in module.act_basis(m, j) {
                if deg(*k) != deg(m) + a.degree(j) {
                    report.push(Axiom::DegreeAdditivity, vec![m, j], "action does not add degrees");
                }
            }
        }
        let e = vec![(m, field.one())];
        if module.act_sparse(&e, &to_sparse(a.unit())) != e {
            report.push(Axiom::ModuleUnit, vec![m], "m · 1 != m");
        }
        for (k, _) in &module.diff[m] {
            if deg(*k) != deg(m) + 1 {
                report.push(Axiom::DifferentialDegree, vec![m], "d_M does not have degree +1");
            }
        }
        if !module.d_sparse(&module.diff[m]).is_empty() {
            report.push(Axiom::SquareZero, vec![m], "d_M(d_M(m)) != 0");
        }
    }

    for m in 0..n {
        let em = vec![(m, field.one())];
        for i in 0..na {
            let ei = vec![(i, field.one())];
            let mi = module.act_basis(m, i);
            for j in 0..na {
                let ej = vec![(j, field.one())];
                let lhs = module.act_sparse(mi, &ej);
                let rhs = module.act_sparse(&em, a.mult_basis(i, j));
                if lhs != rhs {
                    report.push(Axiom::ModuleAssociativity, vec![m, i, j], "(m a) b != m (a b)");
                }
            }
            let lhs = module.d_sparse(mi);
            let mut rhs = module.act_sparse(&module.diff[m], &ei);
            let sign = field.sign(deg(m));
            rhs.extend(module.act_sparse(&em, a.diff_basis(i)).into_iter().map(|(k, c)| (k, &sign * &c)));
            if lhs != normalize_sparse(rhs) {
                report.push(Axiom::ModuleLeibniz, vec![m, i], "d(ma) != d(m)a + (-1)^|m| m d(a)");
            }
        }
    }
    report
}

/// A bounded complex of finite-dimensional vector spaces with a degree +1
/// square-zero differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KComplex {
    field: FieldSpec,
    space: GradedVectorSpace,
    diff: Vec<SparseVec>,
}

impl KComplex {
    pub fn new(field: FieldSpec, space: GradedVectorSpace, diff: Vec<SparseVec>) -> Result<Self> {
        let n = space.dim();
        let mut report = ValidationReport::default();
        if diff.len() != n {
            report.push(Axiom::Shape, vec![], format!("{} differential entries for dim {n}", diff.len()));
            return Err(Error::Axioms(report));
        }
        let diff: Vec<SparseVec> = diff.into_iter().map(normalize_sparse).collect();
        for (i, s) in diff.iter().enumerate() {
            for (k, c) in s {
                if *k >= n {
                    report.push(Axiom::IndexOutOfRange, vec![i], format!("index {k} >= {n}"));
                } else if space.degree(*k) != space.degree(i) + 1 {
                    report.push(Axiom::DifferentialDegree, vec![i], "d does not have degree +1");
                }
                if c.field() != field {
                    report.push(Axiom::FieldMismatch, vec![i], format!("coefficient {c} not in {field}"));
                }
            }
        }
        if !report.is_valid() {
            return Err(Error::Axioms(report));
        }
        let complex = KComplex { field, space, diff };
        for i in 0..n {
            let mut dd = Vec::new();
            for (k, c) in &complex.diff[i] {
                dd.extend(complex.diff[*k].iter().map(|(l, x)| (*l, c * x)));
            }
            if !normalize_sparse(dd).is_empty() {
                report.push(Axiom::SquareZero, vec![i], "d(d(e)) != 0");
            }
        }
        report.into_result(complex)
    }

    /// A complex with zero differential.
    pub fn graded_space(field: FieldSpec, space: GradedVectorSpace) -> Self {
        let n = space.dim();
        KComplex { field, space, diff: vec![Vec::new(); n] }
    }

    /// The underlying complex of a dg-algebra.
    pub fn of_algebra(a: &DgAlgebra) -> Self {
        KComplex {
            field: a.field(),
            space: a.space().clone(),
            diff: (0..a.dim()).map(|i| a.diff_basis(i).clone()).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn diff_basis(&self, i: usize) -> &SparseVec {
        &self.diff[i]
    }

    pub fn differential_matrix(&self) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = self.diff.iter().map(|s| to_dense(self.field, n, s)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn differential_map(&self) -> HomogeneousMap {
        HomogeneousMap::from_dense(self.field, self.space.clone(), self.space.clone(), 1, &self.differential_matrix())
            .expect("validated complex")
    }

    /// The complex as a right dg-module over the ground field.
    pub fn as_module(&self) -> DgModule {
        let field = self.field;
        let action = (0..self.dim()).map(|i| vec![(i, field.one())]).collect();
        DgModule {
            algebra: Arc::new(DgAlgebra::ground(field)),
            space: self.space.clone(),
            action,
            diff: self.diff.clone(),
        }
    }
}
