//! Semisimplicity of the underlying ungraded algebra, and the acyclic
//! semisimple-kernel criterion for dg-algebras.
//!
//! Two algorithms, chosen by characteristic:
//!
//! * char 0 or p > dim: the radical is the kernel of the trace form
//!   `(x, y) ↦ tr(L_{xy})` of the left regular representation.
//! * p ≤ dim and at most [`MAX_EXHAUSTIVE`] elements: the radical is found by
//!   brute force as `{x : x·a is nilpotent for every a}`.
//!
//! Anything else is reported as indeterminate.

use super::algebra::DgAlgebra;
use super::ops::{homology, kernel_subalgebra};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::Dims;
use crate::linalg::Matrix;

pub const MAX_EXHAUSTIVE: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Semisimplicity {
    Semisimple,
    /// Basis of the Jacobson radical, in the algebra's coordinates.
    NotSemisimple { radical: Vec<Vec<Scalar>> },
    Indeterminate,
}

impl Semisimplicity {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Semisimplicity::Semisimple => Some(true),
            Semisimplicity::NotSemisimple { .. } => Some(false),
            Semisimplicity::Indeterminate => None,
        }
    }
}

/// Semisimplicity of `a` as an ungraded algebra; the grading and the
/// differential are ignored.
pub fn is_semisimple_ungraded(a: &DgAlgebra) -> Semisimplicity {
    let n = a.dim();
    let p = a.field().characteristic();
    let radical = if p == 0 || p > n as u64 {
        trace_form_radical(a)
    } else {
        match (p as u128).checked_pow(n as u32) {
            Some(size) if size <= MAX_EXHAUSTIVE as u128 => exhaustive_radical(a, p),
            _ => return Semisimplicity::Indeterminate,
        }
    };
    if radical.is_empty() {
        Semisimplicity::Semisimple
    } else {
        Semisimplicity::NotSemisimple { radical }
    }
}

fn trace_form_radical(a: &DgAlgebra) -> Vec<Vec<Scalar>> {
    let field = a.field();
    let n = a.dim();
    // tr(L_{e_k}) = Σ_l coefficient of e_l in e_k e_l
    let traces: Vec<Scalar> = (0..n)
        .map(|k| {
            let mut t = field.zero();
            for l in 0..n {
                if let Some((_, c)) = a.mult_basis(k, l).iter().find(|(m, _)| *m == l) {
                    t += c;
                }
            }
            t
        })
        .collect();
    let form = Matrix::from_fn(field, n, n, |i, j| {
        let mut t = field.zero();
        for (k, c) in a.mult_basis(i, j) {
            t += &(c * &traces[*k]);
        }
        t
    });
    form.nullspace()
}

/// Structure constants reduced to residues for fast brute force.
struct ResidueTable {
    p: u64,
    n: usize,
    mult: Vec<Vec<(usize, u64)>>,
}

impl ResidueTable {
    fn new(a: &DgAlgebra, p: u64) -> Self {
        let n = a.dim();
        let residue = |c: &Scalar| match c {
            Scalar::Residue { value, .. } => *value,
            Scalar::Rational(_) => unreachable!("prime field expected"),
        };
        let mult = (0..n * n)
            .map(|idx| a.mult_basis(idx / n, idx % n).iter().map(|(k, c)| (*k, residue(c))).collect())
            .collect();
        ResidueTable { p, n, mult }
    }

    fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for (i, &a) in x.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, b)| **b != 0) {
                let ab = a * b % self.p;
                for &(k, c) in &self.mult[i * self.n + j] {
                    out[k] = (out[k] + ab * c) % self.p;
                }
            }
        }
        out
    }

    fn is_nilpotent(&self, x: &[u64]) -> bool {
        let mut power = x.to_vec();
        for _ in 0..=self.n {
            if power.iter().all(|&c| c == 0) {
                return true;
            }
            power = self.mul(&power, x);
        }
        power.iter().all(|&c| c == 0)
    }

    fn element(&self, mut index: u64) -> Vec<u64> {
        (0..self.n)
            .map(|_| {
                let digit = index % self.p;
                index /= self.p;
                digit
            })
            .collect()
    }
}

fn exhaustive_radical(a: &DgAlgebra, p: u64) -> Vec<Vec<Scalar>> {
    let table = ResidueTable::new(a, p);
    let size = p.pow(a.dim() as u32);
    let elements: Vec<Vec<u64>> = (0..size).map(|i| table.element(i)).collect();
    let field = FieldSpec::Prime(p);
    let mut radical = Vec::new();
    for x in elements.iter().skip(1) {
        if elements.iter().all(|y| table.is_nilpotent(&table.mul(x, y))) {
            radical.push(x.iter().map(|&c| field.from_i64(c as i64)).collect());
        }
    }
    if radical.is_empty() {
        return radical;
    }
    Matrix::from_columns(field, a.dim(), &radical).column_space()
}

/// Outcome of the acyclic-with-semisimple-kernel test.
#[derive(Clone, Debug)]
pub struct TgrReport {
    /// Finite dimension makes every algebra here bounded.
    pub bounded: bool,
    pub acyclic: bool,
    pub homology_dims: Dims,
    pub kernel_dims: Dims,
    pub kernel_semisimple: Semisimplicity,
    pub holds: bool,
}

impl TgrReport {
    /// The first failing clause, if any.
    pub fn failed_clause(&self) -> Option<&'static str> {
        if !self.bounded {
            Some("bounded")
        } else if !self.acyclic {
            Some("acyclic")
        } else if self.kernel_semisimple != Semisimplicity::Semisimple {
            Some("ker(d) semisimple")
        } else {
            None
        }
    }
}

/// `A` is bounded, acyclic, and `ker(d)` is semisimple as an ungraded algebra.
/// Fails with [`Error::Indeterminate`] only when the answer hinges on an
/// undecided semisimplicity test.
pub fn is_tgr_semisimple(a: &DgAlgebra) -> Result<TgrReport> {
    let h = homology(a)?;
    let ker = kernel_subalgebra(a)?;
    let kernel_semisimple = is_semisimple_ungraded(&ker.algebra);
    let acyclic = h.is_acyclic();
    if acyclic && kernel_semisimple == Semisimplicity::Indeterminate {
        return Err(Error::Indeterminate);
    }
    let holds = acyclic && kernel_semisimple == Semisimplicity::Semisimple;
    Ok(TgrReport {
        bounded: true,
        acyclic,
        homology_dims: h.dims(),
        kernel_dims: ker.algebra.space().dims(),
        kernel_semisimple,
        holds,
    })
}
