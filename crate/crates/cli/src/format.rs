//! JSON formats for algebras, complexes and degree-0 maps.
//!
//! Files use sparse coefficient lists `[[index, "coefficient"], ...]`;
//! coefficients may be JSON integers or strings (`"3"`, `"-1/2"`). Omitted
//! products and differentials are zero. Serialization is canonical: sorted
//! entries, zero terms dropped, coefficients as strings, pretty-printed with a
//! trailing newline.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use dgbr_core::dg::{Axiom, AxiomViolation};
use dgbr_core::{DgAlgebra, Error as CoreError, FieldSpec, GradedVectorSpace, HomogeneousMap, KComplex, Matrix, Scalar, SparseVec};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Rationals,
    Prime { p: u64 },
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Rationals,
            FieldSpec::Prime(p) => FieldJson::Prime { p },
        }
    }
}

impl FieldJson {
    fn to_spec(self) -> CliResult<FieldSpec> {
        match self {
            FieldJson::Rationals => Ok(FieldSpec::Rationals),
            FieldJson::Prime { p } => FieldSpec::prime(p).map_err(|e| CliError::invalid("field.p", e.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

pub type Terms = Vec<(usize, Coef)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    #[serde(default)]
    pub label: Option<String>,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultEntry {
    pub left: usize,
    pub right: usize,
    pub out: Terms,
}

/// The image of one basis vector, used for differentials and maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageEntry {
    #[serde(rename = "in")]
    pub input: usize,
    pub out: Terms,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldJson,
    pub basis: Vec<BasisEntry>,
    pub unit: Terms,
    #[serde(default)]
    pub mult: Vec<MultEntry>,
    #[serde(default)]
    pub diff: Vec<ImageEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub field: FieldJson,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub diff: Vec<ImageEntry>,
}

/// A degree-0 linear map given by the images of the source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub field: FieldJson,
    #[serde(default)]
    pub images: Vec<ImageEntry>,
}

fn decode<T: DeserializeOwned>(text: &str) -> CliResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::invalid(if path == "." { String::new() } else { path }, e.into_inner().to_string())
    })
}

fn encode<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file structs serialize");
    s.push('\n');
    s
}

fn parse_coef(field: FieldSpec, c: &Coef, path: &str) -> CliResult<Scalar> {
    match c {
        Coef::Int(n) => Ok(field.from_i64(*n)),
        Coef::Text(s) => {
            if matches!(field, FieldSpec::Prime(_)) && s.contains('/') {
                return Err(CliError::invalid(path, format!("fraction {s:?} in a prime-field file; write the residue")));
            }
            field.parse(s).map_err(|e| CliError::invalid(path, e.to_string()))
        }
    }
}

fn check_index(i: usize, n: usize, path: &str) -> CliResult<()> {
    if i >= n {
        return Err(CliError::invalid(path, format!("basis index {i} out of range (dimension {n})")));
    }
    Ok(())
}

fn parse_terms(field: FieldSpec, terms: &Terms, n: usize, path: &str) -> CliResult<SparseVec> {
    let mut seen = HashSet::new();
    let mut out = SparseVec::new();
    for (k, (i, c)) in terms.iter().enumerate() {
        let at = format!("{path}[{k}]");
        check_index(*i, n, &at)?;
        if !seen.insert(*i) {
            return Err(CliError::invalid(at, format!("basis index {i} listed twice")));
        }
        let x = parse_coef(field, c, &at)?;
        if !x.is_zero() {
            out.push((*i, x));
        }
    }
    out.sort_by_key(|(i, _)| *i);
    Ok(out)
}

fn to_terms(s: &[(usize, Scalar)]) -> Terms {
    s.iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (*i, Coef::Text(c.to_string()))).collect()
}

fn parse_space(basis: &[BasisEntry]) -> CliResult<GradedVectorSpace> {
    let mut seen = HashMap::new();
    let mut labels = Vec::with_capacity(basis.len());
    for (i, b) in basis.iter().enumerate() {
        let label = b.label.clone().unwrap_or_else(|| format!("b{i}"));
        if label.is_empty() {
            return Err(CliError::invalid(format!("basis[{i}].label"), "empty label"));
        }
        if let Some(j) = seen.insert(label.clone(), i) {
            return Err(CliError::invalid(format!("basis[{i}].label"), format!("label {label:?} already used by basis[{j}]")));
        }
        labels.push(label);
    }
    Ok(GradedVectorSpace::with_labels(basis.iter().map(|b| b.degree).collect(), labels))
}

fn space_entries(space: &GradedVectorSpace) -> Vec<BasisEntry> {
    (0..space.dim()).map(|i| BasisEntry { label: Some(space.label(i)), degree: space.degree(i) }).collect()
}

fn parse_images(field: FieldSpec, entries: &[ImageEntry], n_in: usize, n_out: usize, section: &str) -> CliResult<(Vec<SparseVec>, HashMap<usize, usize>)> {
    let mut images = vec![SparseVec::new(); n_in];
    let mut position = HashMap::new();
    for (p, e) in entries.iter().enumerate() {
        let at = format!("{section}[{p}]");
        check_index(e.input, n_in, &format!("{at}.in"))?;
        if position.insert(e.input, p).is_some() {
            return Err(CliError::invalid(format!("{at}.in"), format!("basis index {} listed twice", e.input)));
        }
        images[e.input] = parse_terms(field, &e.out, n_out, &format!("{at}.out"))?;
    }
    Ok((images, position))
}

/// Turns a validation report into an error located at the first violation.
fn violation_error(
    report: &dgbr_core::ValidationReport,
    space: &GradedVectorSpace,
    mult_pos: &HashMap<(usize, usize), usize>,
    diff_pos: &HashMap<usize, usize>,
) -> CliError {
    let Some(v) = report.violations.first() else {
        return CliError::invalid("", report.to_string());
    };
    let AxiomViolation { axiom, witness, detail } = v;
    let path = match (axiom, witness.as_slice()) {
        (Axiom::LeftUnit | Axiom::RightUnit | Axiom::UnitHomogeneity, _) => "unit".to_string(),
        (Axiom::DifferentialDegree | Axiom::SquareZero, [i]) => {
            diff_pos.get(i).map_or_else(|| "diff".to_string(), |p| format!("diff[{p}]"))
        }
        (Axiom::DifferentialOfUnit | Axiom::Leibniz, _) => "diff".to_string(),
        (Axiom::DegreeAdditivity, [i, j]) => {
            mult_pos.get(&(*i, *j)).map_or_else(|| "mult".to_string(), |p| format!("mult[{p}]"))
        }
        (Axiom::Associativity, _) => "mult".to_string(),
        _ => String::new(),
    };
    let at: Vec<String> = witness.iter().filter(|&&i| i < space.dim()).map(|&i| space.label(i)).collect();
    let total: usize = report.counts.iter().map(|(_, n)| n).sum();
    let mut message = detail.clone();
    if !at.is_empty() {
        message = format!("{message} (basis {})", at.join(", "));
    }
    if total > 1 {
        message = format!("{message}; {total} violations in all: {report}");
    }
    CliError::Invalid { path, axiom: Some(axiom.name().to_string()), message }
}

pub fn algebra_from_file(file: &AlgebraFile) -> CliResult<DgAlgebra> {
    let field = file.field.to_spec()?;
    let space = parse_space(&file.basis)?;
    let n = space.dim();
    let unit_sparse = parse_terms(field, &file.unit, n, "unit")?;
    let mut unit = vec![field.zero(); n];
    for (i, c) in unit_sparse {
        unit[i] = c;
    }
    let mut mult = vec![SparseVec::new(); n * n];
    let mut mult_pos = HashMap::new();
    for (p, e) in file.mult.iter().enumerate() {
        let at = format!("mult[{p}]");
        check_index(e.left, n, &format!("{at}.left"))?;
        check_index(e.right, n, &format!("{at}.right"))?;
        if let Some(q) = mult_pos.insert((e.left, e.right), p) {
            return Err(CliError::invalid(at, format!("product ({}, {}) already given in mult[{q}]", e.left, e.right)));
        }
        mult[e.left * n + e.right] = parse_terms(field, &e.out, n, &format!("{at}.out"))?;
    }
    let (diff, diff_pos) = parse_images(field, &file.diff, n, n, "diff")?;
    DgAlgebra::new(field, space.clone(), mult, unit, diff).map_err(|e| match e {
        CoreError::Axioms(report) => violation_error(&report, &space, &mult_pos, &diff_pos),
        other => CliError::core("algebra", other),
    })
}

pub fn algebra_to_file(a: &DgAlgebra) -> AlgebraFile {
    let n = a.dim();
    let unit: Vec<(usize, Scalar)> = a.unit().iter().cloned().enumerate().collect();
    let mult = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !a.mult_basis(i, j).is_empty())
        .map(|(i, j)| MultEntry { left: i, right: j, out: to_terms(a.mult_basis(i, j)) })
        .collect();
    let diff = (0..n)
        .filter(|&i| !a.diff_basis(i).is_empty())
        .map(|i| ImageEntry { input: i, out: to_terms(a.diff_basis(i)) })
        .collect();
    AlgebraFile { field: a.field().into(), basis: space_entries(a.space()), unit: to_terms(&unit), mult, diff }
}

pub fn complex_from_file(file: &ComplexFile) -> CliResult<KComplex> {
    let field = file.field.to_spec()?;
    let space = parse_space(&file.basis)?;
    let n = space.dim();
    let (diff, diff_pos) = parse_images(field, &file.diff, n, n, "diff")?;
    KComplex::new(field, space.clone(), diff).map_err(|e| match e {
        CoreError::Axioms(report) => violation_error(&report, &space, &HashMap::new(), &diff_pos),
        other => CliError::core("complex", other),
    })
}

pub fn complex_to_file(c: &KComplex) -> ComplexFile {
    let diff = (0..c.dim())
        .filter(|&i| !c.diff_basis(i).is_empty())
        .map(|i| ImageEntry { input: i, out: to_terms(c.diff_basis(i)) })
        .collect();
    ComplexFile { field: c.field().into(), basis: space_entries(c.space()), diff }
}

/// Reads a degree-0 map between the given spaces.
pub fn map_from_file(file: &MapFile, field: FieldSpec, source: &GradedVectorSpace, target: &GradedVectorSpace) -> CliResult<HomogeneousMap> {
    let declared = file.field.to_spec()?;
    if declared != field {
        return Err(CliError::invalid("field", format!("map is over {declared} but the algebras are over {field}")));
    }
    let (images, _) = parse_images(field, &file.images, source.dim(), target.dim(), "images")?;
    let mut m = Matrix::zeros(field, target.dim(), source.dim());
    for (c, image) in images.iter().enumerate() {
        for (r, x) in image {
            m[(*r, c)] = x.clone();
        }
    }
    HomogeneousMap::from_dense(field, source.clone(), target.clone(), 0, &m).map_err(|e| match e {
        CoreError::NotHomogeneous { row, col, .. } => CliError::invalid(
            format!("images[in={col}]"),
            format!("{} has degree {} but its image involves {} of degree {}", source.label(col), source.degree(col), target.label(row), target.degree(row)),
        ),
        other => CliError::core("map", other),
    })
}

pub fn map_to_file(m: &HomogeneousMap) -> MapFile {
    let dense = m.to_dense();
    let images = (0..dense.cols())
        .map(|c| {
            let col: Vec<(usize, Scalar)> = dense.column(c).into_iter().enumerate().collect();
            ImageEntry { input: c, out: to_terms(&col) }
        })
        .filter(|e| !e.out.is_empty())
        .collect();
    MapFile { field: m.field().into(), images }
}

pub fn parse_algebra_str(text: &str) -> CliResult<DgAlgebra> {
    algebra_from_file(&decode(text)?)
}

pub fn parse_complex_str(text: &str) -> CliResult<KComplex> {
    complex_from_file(&decode(text)?)
}

pub fn parse_map_str(text: &str, field: FieldSpec, source: &GradedVectorSpace, target: &GradedVectorSpace) -> CliResult<HomogeneousMap> {
    map_from_file(&decode(text)?, field, source, target)
}

pub fn algebra_to_string(a: &DgAlgebra) -> String {
    encode(&algebra_to_file(a))
}

pub fn complex_to_string(c: &KComplex) -> String {
    encode(&complex_to_file(c))
}

pub fn map_to_string(m: &HomogeneousMap) -> String {
    encode(&map_to_file(m))
}

/// Reads a file as UTF-8. Non-UTF-8 content is invalid input, not an I/O error.
pub fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| {
        let name = path.display().to_string();
        if e.kind() == std::io::ErrorKind::InvalidData {
            CliError::invalid(name, "file is not valid UTF-8")
        } else {
            CliError::Io { path: name, source: e }
        }
    })
}

pub fn parse_algebra(path: &Path) -> CliResult<DgAlgebra> {
    parse_algebra_str(&read_text(path)?)
}

pub fn parse_complex(path: &Path) -> CliResult<KComplex> {
    parse_complex_str(&read_text(path)?)
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })
}

pub fn write_algebra(a: &DgAlgebra, path: &Path) -> CliResult<()> {
    write_text(path, &algebra_to_string(a))
}

pub fn write_complex(c: &KComplex, path: &Path) -> CliResult<()> {
    write_text(path, &complex_to_string(c))
}

/// Degree → dimension as a JSON object with string keys.
pub fn dims_json(dims: &BTreeMap<i64, usize>) -> serde_json::Value {
    dims.iter().map(|(k, v)| (k.to_string(), serde_json::Value::from(*v))).collect::<serde_json::Map<_, _>>().into()
}
