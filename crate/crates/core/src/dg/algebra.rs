use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{GradedVectorSpace, HomogeneousMap};
use crate::linalg::{axpy, normalize_sparse, to_dense, unit_vec, zero_vec, Matrix, SparseVec};

/// True when `(-1)^(a*b) = -1`.
pub(crate) fn koszul_odd(a: i64, b: i64) -> bool {
    a.rem_euclid(2) == 1 && b.rem_euclid(2) == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Shape,
    IndexOutOfRange,
    FieldMismatch,
    DegreeAdditivity,
    UnitHomogeneity,
    LeftUnit,
    RightUnit,
    Associativity,
    DifferentialDegree,
    SquareZero,
    DifferentialOfUnit,
    Leibniz,
    ModuleUnit,
    ModuleAssociativity,
    ModuleLeibniz,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Shape => "shape",
            Axiom::IndexOutOfRange => "index-range",
            Axiom::FieldMismatch => "field",
            Axiom::DegreeAdditivity => "degree-additivity",
            Axiom::UnitHomogeneity => "unit-degree",
            Axiom::LeftUnit => "left-unit",
            Axiom::RightUnit => "right-unit",
            Axiom::Associativity => "associativity",
            Axiom::DifferentialDegree => "differential-degree",
            Axiom::SquareZero => "d-squared",
            Axiom::DifferentialOfUnit => "d-of-unit",
            Axiom::Leibniz => "leibniz",
            Axiom::ModuleUnit => "module-unit",
            Axiom::ModuleAssociativity => "module-associativity",
            Axiom::ModuleLeibniz => "module-leibniz",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed axiom instance; `witness` lists the basis indices involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Per-axiom cap on recorded violations; the count keeps going.
const MAX_RECORDED: usize = 16;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
    /// Total failures per axiom, including the ones not recorded.
    pub counts: Vec<(Axiom, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.counts.iter().map(|(a, _)| *a).collect()
    }

    pub(crate) fn push(&mut self, axiom: Axiom, witness: Vec<usize>, detail: impl Into<String>) {
        let slot = match self.counts.iter_mut().find(|(a, _)| *a == axiom) {
            Some((_, n)) => n,
            None => {
                self.counts.push((axiom, 0));
                &mut self.counts.last_mut().unwrap().1
            }
        };
        *slot += 1;
        if *slot <= MAX_RECORDED {
            self.violations.push(AxiomViolation { axiom, witness, detail: detail.into() });
        }
    }

    pub(crate) fn into_result<T>(self, value: T) -> Result<T> {
        if self.is_valid() {
            Ok(value)
        } else {
            Err(Error::Axioms(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "all axioms hold");
        }
        let summary: Vec<String> = self.counts.iter().map(|(a, n)| format!("{a} ({n})")).collect();
        write!(f, "axiom violations: {}", summary.join(", "))?;
        if let Some(v) = self.violations.first() {
            write!(f, "; first: {} at {:?}: {}", v.axiom, v.witness, v.detail)?;
        }
        Ok(())
    }
}

/// A finite-dimensional ℤ-graded unital algebra with a degree +1 square-zero
/// derivation, given by structure constants on a homogeneous basis.
///
/// Values of this type have passed every axiom check exhaustively over basis
/// tuples: degree additivity, associativity, unit laws, `d² = 0`, and
/// `d(ab) = d(a)b + (-1)^|a| a d(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgAlgebra {
    field: FieldSpec,
    space: GradedVectorSpace,
    /// Product of basis vectors `i` and `j` at index `i * dim + j`.
    mult: Vec<SparseVec>,
    unit: Vec<Scalar>,
    diff: Vec<SparseVec>,
}

impl DgAlgebra {
    pub fn new(
        field: FieldSpec,
        space: GradedVectorSpace,
        mult: Vec<SparseVec>,
        unit: Vec<Scalar>,
        diff: Vec<SparseVec>,
    ) -> Result<Self> {
        let mut report = ValidationReport::default();
        let n = space.dim();
        if mult.len() != n * n || unit.len() != n || diff.len() != n {
            report.push(
                Axiom::Shape,
                vec![],
                format!("dim {n}: {} products, unit of length {}, {} differentials", mult.len(), unit.len(), diff.len()),
            );
            return Err(Error::Axioms(report));
        }
        let check_entry = |report: &mut ValidationReport, s: &SparseVec, at: Vec<usize>| {
            for (k, c) in s {
                if *k >= n {
                    report.push(Axiom::IndexOutOfRange, at.clone(), format!("index {k} >= {n}"));
                }
                if c.field() != field {
                    report.push(Axiom::FieldMismatch, at.clone(), format!("coefficient {c} not in {field}"));
                }
            }
        };
        for (idx, s) in mult.iter().enumerate() {
            check_entry(&mut report, s, vec![idx / n.max(1), idx % n.max(1)]);
        }
        for (i, s) in diff.iter().enumerate() {
            check_entry(&mut report, s, vec![i]);
        }
        for (i, c) in unit.iter().enumerate() {
            if c.field() != field {
                report.push(Axiom::FieldMismatch, vec![i], format!("unit coefficient {c} not in {field}"));
            }
        }
        if !report.is_valid() {
            return Err(Error::Axioms(report));
        }
        let algebra = DgAlgebra {
            field,
            space,
            mult: mult.into_iter().map(normalize_sparse).collect(),
            unit,
            diff: diff.into_iter().map(normalize_sparse).collect(),
        };
        algebra.validate().into_result(algebra)
    }

    /// Builds the tables from closures over basis indices.
    pub fn from_fn(
        field: FieldSpec,
        space: GradedVectorSpace,
        mut mult: impl FnMut(usize, usize) -> SparseVec,
        unit: Vec<Scalar>,
        mut diff: impl FnMut(usize) -> SparseVec,
    ) -> Result<Self> {
        let n = space.dim();
        let table = (0..n * n).map(|idx| mult(idx / n, idx % n)).collect();
        let d = (0..n).map(&mut diff).collect();
        Self::new(field, space, table, unit, d)
    }

    /// The ground field as a dg-algebra: one basis vector in degree 0, d = 0.
    pub fn ground(field: FieldSpec) -> Self {
        let space = GradedVectorSpace::with_labels(vec![0], vec!["1".into()]);
        DgAlgebra { field, space, mult: vec![vec![(0, field.one())]], unit: vec![field.one()], diff: vec![vec![]] }
    }

    /// Same algebra with a different differential, revalidated.
    pub fn with_differential(&self, diff: Vec<SparseVec>) -> Result<Self> {
        Self::new(self.field, self.space.clone(), self.mult.clone(), self.unit.clone(), diff)
    }

    pub fn without_differential(&self) -> Self {
        DgAlgebra { diff: vec![Vec::new(); self.dim()], ..self.clone() }
    }

    pub fn relabeled(mut self, labels: Vec<String>) -> Self {
        self.space = self.space.relabeled(labels);
        self
    }

    /// Reruns every axiom check and reports all failures.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.dim();
        let deg = |i: usize| self.space.degree(i);

        for i in 0..n {
            for j in 0..n {
                for (k, _) in self.mult_basis(i, j) {
                    if deg(*k) != deg(i) + deg(j) {
                        report.push(
                            Axiom::DegreeAdditivity,
                            vec![i, j],
                            format!("product has a term of degree {} instead of {}", deg(*k), deg(i) + deg(j)),
                        );
                    }
                }
            }
        }

        if self.unit.iter().enumerate().any(|(i, c)| !c.is_zero() && deg(i) != 0) {
            report.push(Axiom::UnitHomogeneity, vec![], "unit has components outside degree 0");
        }
        let unit = crate::linalg::to_sparse(&self.unit);
        for i in 0..n {
            let e = vec![(i, self.field.one())];
            if self.mul_sparse(&unit, &e) != e {
                report.push(Axiom::LeftUnit, vec![i], "1 * e != e");
            }
            if self.mul_sparse(&e, &unit) != e {
                report.push(Axiom::RightUnit, vec![i], "e * 1 != e");
            }
        }

        for i in 0..n {
            for j in 0..n {
                let ij = self.mult_basis(i, j);
                for k in 0..n {
                    let mut left = Vec::new();
                    for (l, c) in ij {
                        left.extend(self.mult_basis(*l, k).iter().map(|(m, x)| (*m, c * x)));
                    }
                    let mut right = Vec::new();
                    for (l, c) in self.mult_basis(j, k) {
                        right.extend(self.mult_basis(i, *l).iter().map(|(m, x)| (*m, c * x)));
                    }
                    if normalize_sparse(left) != normalize_sparse(right) {
                        report.push(Axiom::Associativity, vec![i, j, k], "(ab)c != a(bc)");
                    }
                }
            }
        }

        for i in 0..n {
            for (k, _) in &self.diff[i] {
                if deg(*k) != deg(i) + 1 {
                    report.push(
                        Axiom::DifferentialDegree,
                        vec![i],
                        format!("d(b{i}) has a term of degree {} instead of {}", deg(*k), deg(i) + 1),
                    );
                }
            }
            if !self.d_sparse(&self.diff[i]).is_empty() {
                report.push(Axiom::SquareZero, vec![i], "d(d(e)) != 0");
            }
        }
        if !self.d_sparse(&unit).is_empty() {
            report.push(Axiom::DifferentialOfUnit, vec![], "d(1) != 0");
        }

        for i in 0..n {
            for j in 0..n {
                let lhs = self.d_sparse(self.mult_basis(i, j));
                let ei = vec![(i, self.field.one())];
                let ej = vec![(j, self.field.one())];
                let mut rhs = self.mul_sparse(&self.diff[i], &ej);
                let sign = self.field.sign(deg(i));
                rhs.extend(self.mul_sparse(&ei, &self.diff[j]).into_iter().map(|(k, c)| (k, &sign * &c)));
                if lhs != normalize_sparse(rhs) {
                    report.push(Axiom::Leibniz, vec![i, j], "d(ab) != d(a)b + (-1)^|a| a d(b)");
                }
            }
        }
        report
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

    pub fn degree(&self, i: usize) -> i64 {
        self.space.degree(i)
    }

    pub fn label(&self, i: usize) -> String {
        self.space.label(i)
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    pub fn diff_basis(&self, i: usize) -> &SparseVec {
        &self.diff[i]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        zero_vec(self.field, self.dim())
    }

    pub fn has_zero_differential(&self) -> bool {
        self.diff.iter().all(Vec::is_empty)
    }

    pub(crate) fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                out.extend(self.mult_basis(*i, *j).iter().map(|(k, c)| (*k, &ab * c)));
            }
        }
        normalize_sparse(out)
    }

    pub(crate) fn d_sparse(&self, x: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, a) in x {
            out.extend(self.diff[*i].iter().map(|(k, c)| (*k, a * c)));
        }
        normalize_sparse(out)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.mult_basis(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn d(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in &self.diff[i] {
                out[*k] += &(a * c);
            }
        }
        out
    }

    /// The differential as a degree +1 graded map.
    pub fn differential_map(&self) -> HomogeneousMap {
        let dense = self.differential_matrix();
        HomogeneousMap::from_dense(self.field, self.space.clone(), self.space.clone(), 1, &dense)
            .expect("validated differential has degree +1")
    }

    pub fn differential_matrix(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_columns(self.field, n, &self.diff.iter().map(|s| to_dense(self.field, n, s)).collect::<Vec<_>>())
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of (unsigned) right multiplication by `a`.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// `x^k` by repeated multiplication, `x^0 = 1`.
    pub fn pow(&self, x: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        self.space.format_vector(v)
    }

    /// Linear combination `Σ c_i e_i` from a coefficient list.
    pub fn combination(&self, terms: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        for (i, c) in terms {
            axpy(&mut v, c, &self.basis_vector(*i));
        }
        v
    }

    /// Index of the basis vector with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.dim()).find(|&i| self.space.label(i) == label)
    }
}
