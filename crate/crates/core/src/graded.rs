//! ℤ-graded vector spaces, homogeneous maps, and the subspace/quotient
//! machinery built on per-degree Gaussian elimination.
//!
//! A space is a finite list of basis vectors, each with a degree. Vectors are
//! dense coordinate columns over that basis. Maps are stored as one matrix
//! block per source degree, in local (within-degree) coordinates.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Matrix};

/// Degree → dimension, zero dimensions omitted.
pub type Dims = BTreeMap<i64, usize>;

#[derive(Clone, Debug)]
pub struct GradedVectorSpace {
    degrees: Vec<i64>,
    labels: Option<Vec<String>>,
    local: Vec<usize>,
    by_degree: BTreeMap<i64, Vec<usize>>,
}

impl PartialEq for GradedVectorSpace {
    fn eq(&self, other: &Self) -> bool {
        self.degrees == other.degrees
    }
}

impl Eq for GradedVectorSpace {}

impl GradedVectorSpace {
    pub fn new(degrees: Vec<i64>) -> Self {
        let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let mut local = Vec::with_capacity(degrees.len());
        for (i, &d) in degrees.iter().enumerate() {
            let slot = by_degree.entry(d).or_default();
            local.push(slot.len());
            slot.push(i);
        }
        GradedVectorSpace { degrees, labels: None, local, by_degree }
    }

    pub fn with_labels(degrees: Vec<i64>, labels: Vec<String>) -> Self {
        assert_eq!(degrees.len(), labels.len(), "one label per basis vector");
        let mut space = Self::new(degrees);
        space.labels = Some(labels);
        space
    }

    /// Canonical space with the given dimensions, basis sorted by degree.
    pub fn from_dims(dims: &Dims) -> Self {
        let degrees = dims.iter().flat_map(|(&d, &n)| std::iter::repeat_n(d, n)).collect();
        Self::new(degrees)
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn dims(&self) -> Dims {
        self.by_degree.iter().map(|(&d, v)| (d, v.len())).collect()
    }

    pub fn dim_in(&self, degree: i64) -> usize {
        self.by_degree.get(&degree).map_or(0, Vec::len)
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.by_degree.keys().copied()
    }

    /// Global indices of the basis vectors of the given degree.
    pub fn indices_in_degree(&self, degree: i64) -> &[usize] {
        self.by_degree.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn local_index(&self, i: usize) -> usize {
        self.local[i]
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{i}"),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }

    pub fn relabeled(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = Some(labels);
        self
    }

    /// Degree of a nonzero homogeneous vector; `None` for zero or mixed vectors.
    pub fn degree_of(&self, v: &[Scalar]) -> Option<i64> {
        let mut found = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.degrees[i]),
                Some(d) if d != self.degrees[i] => return None,
                _ => {}
            }
        }
        found
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self, v: &[Scalar]) -> bool {
        is_zero_vec(v) || self.degree_of(v).is_some()
    }

    /// Homogeneous components: degree → local coordinate column.
    pub fn components(&self, v: &[Scalar]) -> BTreeMap<i64, Vec<Scalar>> {
        let mut out = BTreeMap::new();
        for (&d, idx) in &self.by_degree {
            if idx.iter().any(|&i| !v[i].is_zero()) {
                out.insert(d, idx.iter().map(|&i| v[i].clone()).collect());
            }
        }
        out
    }

    /// Extracts the local column of degree `degree` from a global vector.
    pub fn restrict(&self, v: &[Scalar], degree: i64) -> Vec<Scalar> {
        self.indices_in_degree(degree).iter().map(|&i| v[i].clone()).collect()
    }

    /// Embeds a local column of the given degree into a global vector.
    pub fn embed(&self, field: FieldSpec, degree: i64, local: &[Scalar]) -> Vec<Scalar> {
        let mut v = zero_vec(field, self.dim());
        for (&i, c) in self.indices_in_degree(degree).iter().zip(local) {
            v[i] = c.clone();
        }
        v
    }

    /// Human-readable linear combination using the basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.label(i) } else { format!("({c})*{}", self.label(i)) })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// `dims(V ⊗ W)_n = Σ_k dims(V)_k · dims(W)_{n-k}`.
pub fn convolve_dims(a: &Dims, b: &Dims) -> Dims {
    let mut out = Dims::new();
    for (&da, &na) in a {
        for (&db, &nb) in b {
            *out.entry(da + db).or_default() += na * nb;
        }
    }
    out.retain(|_, n| *n > 0);
    out
}

/// Tensor product of graded spaces; basis `v_i ⊗ w_j` sits at index `i * dim W + j`.
pub fn tensor_of_spaces(v: &GradedVectorSpace, w: &GradedVectorSpace) -> GradedVectorSpace {
    let mut degrees = Vec::with_capacity(v.dim() * w.dim());
    let mut labels = Vec::with_capacity(v.dim() * w.dim());
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            degrees.push(v.degree(i) + w.degree(j));
            labels.push(format!("{}⊗{}", v.label(i), w.label(j)));
        }
    }
    GradedVectorSpace::with_labels(degrees, labels)
}

/// A degree-`degree` linear map, one block per source degree mapping the
/// source component of degree k to the target component of degree k + degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMap {
    field: FieldSpec,
    source: GradedVectorSpace,
    target: GradedVectorSpace,
    degree: i64,
    blocks: BTreeMap<i64, Matrix>,
}

impl HomogeneousMap {
    pub fn new(
        field: FieldSpec,
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        degree: i64,
        blocks: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let mut kept = BTreeMap::new();
        for (k, b) in blocks {
            let (rows, cols) = (target.dim_in(k + degree), source.dim_in(k));
            if b.rows() != rows || b.cols() != cols {
                return Err(Error::DimensionMismatch {
                    context: format!("block of source degree {k}"),
                    expected: rows * cols,
                    found: b.rows() * b.cols(),
                });
            }
            if !b.is_zero() {
                kept.insert(k, b);
            }
        }
        Ok(HomogeneousMap { field, source, target, degree, blocks: kept })
    }

    pub fn zero(field: FieldSpec, source: GradedVectorSpace, target: GradedVectorSpace, degree: i64) -> Self {
        HomogeneousMap { field, source, target, degree, blocks: BTreeMap::new() }
    }

    pub fn identity(field: FieldSpec, space: &GradedVectorSpace) -> Self {
        let blocks = space.dims().into_iter().map(|(k, n)| (k, Matrix::identity(field, n))).collect();
        HomogeneousMap { field, source: space.clone(), target: space.clone(), degree: 0, blocks }
    }

    /// Splits a dense matrix (global coordinates) into blocks, rejecting any
    /// entry that does not shift degree by exactly `degree`.
    pub fn from_dense(
        field: FieldSpec,
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        degree: i64,
        m: &Matrix,
    ) -> Result<Self> {
        if m.rows() != target.dim() || m.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                context: "dense map".into(),
                expected: target.dim() * source.dim(),
                found: m.rows() * m.cols(),
            });
        }
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !m[(r, c)].is_zero() && target.degree(r) != source.degree(c) + degree {
                    return Err(Error::NotHomogeneous { degree, row: r, col: c });
                }
            }
        }
        let mut blocks = BTreeMap::new();
        for k in source.support() {
            let cols = source.indices_in_degree(k);
            let rows = target.indices_in_degree(k + degree);
            let b = Matrix::from_fn(field, rows.len(), cols.len(), |r, c| m[(rows[r], cols[c])].clone());
            blocks.insert(k, b);
        }
        Self::new(field, source, target, degree, blocks)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn source(&self) -> &GradedVectorSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedVectorSpace {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The block out of source degree `k`, `None` when it is zero.
    pub fn block(&self, k: i64) -> Option<&Matrix> {
        self.blocks.get(&k)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.target.dim(), self.source.dim());
        for (&k, b) in &self.blocks {
            let cols = self.source.indices_in_degree(k);
            let rows = self.target.indices_in_degree(k + self.degree);
            for (r, &gr) in rows.iter().enumerate() {
                for (c, &gc) in cols.iter().enumerate() {
                    m[(gr, gc)] = b[(r, c)].clone();
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.target.dim());
        for (&k, b) in &self.blocks {
            let image = b.apply(&self.source.restrict(v, k));
            for (&i, c) in self.target.indices_in_degree(k + self.degree).iter().zip(image) {
                out[i] = c;
            }
        }
        out
    }
}

/// `g ∘ f`. Plain composition: no Koszul signs.
pub fn compose_maps(g: &HomogeneousMap, f: &HomogeneousMap) -> Result<HomogeneousMap> {
    if f.target != g.source {
        return Err(Error::SpaceMismatch("target of f differs from source of g".into()));
    }
    if f.field != g.field {
        return Err(Error::FieldMismatch { left: g.field, right: f.field });
    }
    let mut blocks = BTreeMap::new();
    for (&k, fb) in &f.blocks {
        if let Some(gb) = g.blocks.get(&(k + f.degree)) {
            blocks.insert(k, gb.mul(fb));
        }
    }
    HomogeneousMap::new(f.field, f.source.clone(), g.target.clone(), f.degree + g.degree, blocks)
}

/// A graded subspace given by a degree-0 injective inclusion into an ambient space.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub space: GradedVectorSpace,
    pub inclusion: HomogeneousMap,
}

impl Subspace {
    /// Spans homogeneous vectors of `ambient`; the basis is echelonized per
    /// degree, so the result does not depend on redundant generators.
    pub fn span(field: FieldSpec, ambient: &GradedVectorSpace, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut by_degree: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
        for v in vectors {
            if is_zero_vec(v) {
                continue;
            }
            let d = ambient
                .degree_of(v)
                .ok_or(Error::NotHomogeneous { degree: 0, row: 0, col: 0 })?;
            by_degree.entry(d).or_default().push(ambient.restrict(v, d));
        }
        let mut blocks = BTreeMap::new();
        let mut dims = Dims::new();
        for (d, cols) in by_degree {
            let m = Matrix::from_columns(field, ambient.dim_in(d), &cols);
            let basis = m.column_space();
            dims.insert(d, basis.len());
            blocks.insert(d, Matrix::from_columns(field, ambient.dim_in(d), &basis));
        }
        Self::from_blocks(field, ambient, dims, blocks)
    }

    fn from_blocks(
        field: FieldSpec,
        ambient: &GradedVectorSpace,
        dims: Dims,
        blocks: BTreeMap<i64, Matrix>,
    ) -> Result<Self> {
        let space = GradedVectorSpace::from_dims(&dims.into_iter().filter(|(_, n)| *n > 0).collect());
        let blocks = blocks.into_iter().filter(|(_, b)| b.cols() > 0).collect();
        let inclusion = HomogeneousMap::new(field, space.clone(), ambient.clone(), 0, blocks)?;
        Ok(Subspace { space, inclusion })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn dims(&self) -> Dims {
        self.space.dims()
    }

    /// Basis vectors in ambient coordinates, in the order of `self.space`.
    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.inclusion.to_dense().columns()
    }
}

/// Kernel of `f`, computed degree by degree.
pub fn kernel_of(f: &HomogeneousMap) -> Subspace {
    let field = f.field;
    let mut dims = Dims::new();
    let mut blocks = BTreeMap::new();
    for k in f.source.support() {
        let n = f.source.dim_in(k);
        let basis = match f.block(k) {
            Some(b) => b.nullspace(),
            None => (0..n).map(|i| unit_vec(field, n, i)).collect(),
        };
        dims.insert(k, basis.len());
        blocks.insert(k, Matrix::from_columns(field, n, &basis));
    }
    Subspace::from_blocks(field, &f.source, dims, blocks).expect("kernel blocks are well-shaped")
}

/// Image of `f` inside its target.
pub fn image_of(f: &HomogeneousMap) -> Subspace {
    let field = f.field;
    let mut dims = Dims::new();
    let mut blocks = BTreeMap::new();
    for (&k, b) in &f.blocks {
        let basis = b.column_space();
        let t = k + f.degree;
        dims.insert(t, basis.len());
        blocks.insert(t, Matrix::from_columns(field, f.target.dim_in(t), &basis));
    }
    Subspace::from_blocks(field, &f.target, dims, blocks).expect("image blocks are well-shaped")
}

/// `V / W` with its projection and a section choosing coset representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: GradedVectorSpace,
    pub projection: HomogeneousMap,
    pub section: HomogeneousMap,
}

/// Quotient of `v` by the image of a degree-0 injective `inclusion` into `v`.
/// Representatives are standard basis vectors of `v`, chosen greedily.
pub fn quotient_by(v: &GradedVectorSpace, inclusion: &HomogeneousMap) -> Result<Quotient> {
    if inclusion.target() != v || inclusion.degree() != 0 {
        return Err(Error::SpaceMismatch("inclusion must be a degree-0 map into the ambient space".into()));
    }
    let field = inclusion.field();
    if inclusion.source().support().any(|k| v.dim_in(k) == 0) {
        return Err(Error::NotInjective);
    }
    let mut dims = Dims::new();
    let mut reps: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut inverses: BTreeMap<i64, (usize, Matrix)> = BTreeMap::new();
    for k in v.support() {
        let n = v.dim_in(k);
        let sub: Vec<Vec<Scalar>> = inclusion.block(k).map(Matrix::columns).unwrap_or_default();
        let w = inclusion.source().dim_in(k);
        if Matrix::from_columns(field, n, &sub).rank() < w {
            return Err(Error::NotInjective);
        }
        let mut cols = sub.clone();
        let mut chosen = Vec::new();
        for i in 0..n {
            let mut trial = cols.clone();
            trial.push(unit_vec(field, n, i));
            if Matrix::from_columns(field, n, &trial).rank() == trial.len() {
                cols = trial;
                chosen.push(i);
            }
        }
        if !chosen.is_empty() {
            dims.insert(k, chosen.len());
            let inv = Matrix::from_columns(field, n, &cols).inverse().expect("completed basis");
            inverses.insert(k, (w, inv));
            reps.insert(k, chosen);
        }
    }
    let space = GradedVectorSpace::from_dims(&dims);
    let mut proj_blocks = BTreeMap::new();
    let mut sec_blocks = BTreeMap::new();
    for (&k, chosen) in &reps {
        let n = v.dim_in(k);
        let (w, inv) = &inverses[&k];
        proj_blocks.insert(k, Matrix::from_fn(field, chosen.len(), n, |r, c| inv[(w + r, c)].clone()));
        let cols: Vec<Vec<Scalar>> = chosen.iter().map(|&i| unit_vec(field, n, i)).collect();
        sec_blocks.insert(k, Matrix::from_columns(field, n, &cols));
    }
    Ok(Quotient {
        projection: HomogeneousMap::new(field, v.clone(), space.clone(), 0, proj_blocks)?,
        section: HomogeneousMap::new(field, space.clone(), v.clone(), 0, sec_blocks)?,
        space,
    })
}
