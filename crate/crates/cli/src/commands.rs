//! Argument parsing and dispatch. [`run`] is the whole program minus the
//! process boundary, so tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use dgbr_core::brauer::{
    central_simplicity, equivalence_sides, forget_descriptor, kunneth_check, sandwich_iso, structure_realize,
    verify_dg_iso, verify_equivalence, IsoWitness,
};
use dgbr_core::dg::{
    center, contracting_element, forget_structure, homology, is_semisimple_ungraded, is_tgr_semisimple,
    kernel_subalgebra, opposite, tensor_product, DgAlgebra, KComplex, Semisimplicity,
};
use dgbr_core::graded::Dims;
use dgbr_core::hom::{end_dg_algebra, hom_of_complexes};
use dgbr_core::matrix_dg::{good_grading_matrix_algebra, MatrixDgAlgebra};
use dgbr_core::{Error as CoreError, FieldSpec, Scalar};
use serde_json::{json, Value};

use crate::catalog;
use crate::error::{CliError, CliResult};
use crate::format::{algebra_to_string, complex_to_string, dims_json, parse_algebra_str, parse_complex_str, parse_map_str, read_text};

#[derive(Debug, Parser)]
#[command(name = "dgbr", version, about = "Exact computations with finite-dimensional dg-algebras")]
pub struct Cli {
    /// Print reports and errors as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    /// Center is K and the sandwich map is bijective (grading and d forgotten).
    CentralSimple,
    /// Bounded, acyclic, and ker(d) semisimple.
    TgrSemisimple,
    /// Semisimple as an ungraded algebra.
    Semisimple,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every axiom of an algebra file, or of a complex file with --complex.
    Validate {
        file: String,
        #[arg(long)]
        complex: bool,
    },
    /// Opposite dg-algebra.
    Op { file: String },
    /// Graded tensor product.
    Tensor { left: String, right: String },
    /// Homology dimensions and class representatives.
    Homology { file: String },
    /// The subalgebra ker(d).
    Kernel { file: String },
    /// Search for z of degree -1 with d(z) = 1 and z·ker(d) complementing ker(d).
    Contracting { file: String },
    /// Basis of the (ungraded) center.
    Center { file: String },
    /// Decide a property; exit 0 when it holds.
    Check {
        #[arg(value_enum)]
        property: Property,
        file: String,
    },
    /// Endomorphism dg-algebra of a complex.
    End {
        complex: String,
        /// Present the result in the matrix-unit basis e_ij (accepted by `structure`).
        #[arg(long)]
        matrix: bool,
    },
    /// Hom complex between two complexes.
    Hom { source: String, target: String },
    /// Matrix algebra with a good grading and an optional inner differential.
    Matrix {
        #[arg(long)]
        size: usize,
        /// Degrees f(i) = deg(e_{i,i+1}), comma separated; zeros when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        good_grading: Vec<i64>,
        /// Degree-1 element z for d = [z, -], e.g. "e12 + 2*e23".
        #[arg(long, allow_hyphen_values = true)]
        inner: Option<String>,
        /// Q, or F<p> / a bare prime p.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Verify the sandwich isomorphism A⊗A^op ≅ End(A).
    Sandwich { file: String },
    /// Realize a good-graded matrix dg-algebra as the endomorphisms of a complex.
    Structure {
        file: String,
        /// Print the complex L instead of the report.
        #[arg(long)]
        emit_complex: bool,
    },
    /// Verify that a degree-0 map is a dg-isomorphism A → B.
    VerifyIso { source: String, target: String, map: String },
    /// Verify a dg-isomorphism A⊗End(C1) → B⊗End(C2).
    VerifyEquiv { a: String, b: String, c1: String, c2: String, map: String },
    /// Forget grading and differential.
    Forget {
        file: String,
        /// Print the descriptor (dimension, center, central simplicity) instead.
        #[arg(long)]
        descriptor: bool,
    },
    /// Compare dim H(A⊗B) with the convolution of dim H(A) and dim H(B).
    Kunneth { left: String, right: String },
    /// List the built-in examples, or run one.
    Catalog { name: Option<String> },
}

/// What a command produced.
enum Output {
    /// A JSON document (algebra, complex) printed verbatim.
    Document(String),
    Report { code: i32, text: String, json: Value },
}

fn report(holds: bool, text: String, json: Value) -> Output {
    Output::Report { code: if holds { 0 } else { 1 }, text, json }
}

fn info(text: String, json: Value) -> Output {
    Output::Report { code: 0, text, json }
}

/// Input files; `-` is standard input, read once and shared.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    cached: Option<String>,
}

impl Inputs<'_> {
    fn text(&mut self, name: &str) -> CliResult<String> {
        if name != "-" {
            return read_text(Path::new(name));
        }
        if self.cached.is_none() {
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf).map_err(|e| CliError::Io { path: "<stdin>".into(), source: e })?;
            let s = String::from_utf8(buf).map_err(|_| CliError::invalid("<stdin>", "input is not valid UTF-8"))?;
            self.cached = Some(s);
        }
        Ok(self.cached.clone().unwrap_or_default())
    }

    fn algebra(&mut self, name: &str) -> CliResult<DgAlgebra> {
        parse_algebra_str(&self.text(name)?).map_err(|e| in_file(name, e))
    }

    fn complex(&mut self, name: &str) -> CliResult<KComplex> {
        parse_complex_str(&self.text(name)?).map_err(|e| in_file(name, e))
    }
}

/// Prefixes the JSON path with the file name.
fn in_file(name: &str, e: CliError) -> CliError {
    let file = if name == "-" { "<stdin>" } else { name };
    match e {
        CliError::Invalid { path, axiom, message } => {
            let path = if path.is_empty() { file.to_string() } else { format!("{file}:{path}") };
            CliError::Invalid { path, axiom, message }
        }
        CliError::Core { context, source } => CliError::Core { context: format!("{file}: {context}"), source },
        io => io,
    }
}

fn core(context: &str) -> impl Fn(CoreError) -> CliError + '_ {
    move |e| CliError::core(context, e)
}

fn dims_text(d: &Dims) -> String {
    let parts: Vec<String> = d.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn parse_field(name: &str) -> CliResult<FieldSpec> {
    let t = name.trim();
    if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.strip_prefix('F').or_else(|| t.strip_prefix('f')).unwrap_or(t);
    let p: u64 = digits.parse().map_err(|_| CliError::invalid("--field", format!("unknown field {name:?}; use Q or F<p>")))?;
    FieldSpec::prime(p).map_err(|e| CliError::invalid("--field", e.to_string()))
}

/// Parses `c1*label1 + label2 - c3*label3` against the basis labels of `a`.
pub fn parse_combination(a: &DgAlgebra, expr: &str) -> CliResult<Vec<Scalar>> {
    let field = a.field();
    let bad = |m: String| CliError::invalid("--inner", m);
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty expression".into()));
    }
    // Split before every + or - that is not part of a coefficient like 1/-2.
    let mut terms = Vec::new();
    let mut current = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !current.is_empty() && !current.ends_with(['*', '/']) {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);
    let mut v = a.zero_vector();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (field.from_i64(-1), rest),
            None => (field.one(), term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, label) = match body.rsplit_once('*') {
            Some((c, l)) => (field.parse(c).map_err(|e| bad(e.to_string()))?, l),
            None => (field.one(), body),
        };
        let i = a.index_of(label).ok_or_else(|| bad(format!("no basis element labelled {label:?}")))?;
        v[i] = &v[i] + &(&sign * &coef);
    }
    Ok(v)
}

fn witness_report(title: &str, w: &IsoWitness) -> Output {
    let c = &w.checks;
    let mut text = format!(
        "{title}: {}\n  dimensions: {} -> {}\n  algebra hom: {}\n  unital: {}\n  commutes with d: {}\n  bijective: {}",
        if w.all() { "verified" } else { "NOT verified" },
        w.source.dim(),
        w.target.dim(),
        yes(c.is_algebra_hom),
        yes(c.is_unital),
        yes(c.commutes_with_d),
        yes(c.is_bijective)
    );
    let product = w.product_failure.map(|(i, j)| (w.source.label(i), w.source.label(j)));
    if let Some((x, y)) = &product {
        text.push_str(&format!("\n  first product failure: ({x}) * ({y})"));
    }
    let differential = w.differential_failure.map(|i| w.source.label(i));
    if let Some(x) = &differential {
        text.push_str(&format!("\n  first differential failure: d({x})"));
    }
    let json = json!({
        "verified": w.all(),
        "source_dim": w.source.dim(),
        "target_dim": w.target.dim(),
        "is_algebra_hom": c.is_algebra_hom,
        "is_unital": c.is_unital,
        "commutes_with_d": c.commutes_with_d,
        "is_bijective": c.is_bijective,
        "product_failure": product.map(|(x, y)| vec![x, y]),
        "differential_failure": differential,
    });
    report(w.all(), text, json)
}

fn execute(cli: Cli, inputs: &mut Inputs) -> CliResult<Output> {
    Ok(match cli.command {
        Command::Validate { file, complex } => {
            if complex {
                let c = inputs.complex(&file)?;
                let dims = c.space().dims();
                info(
                    format!("valid complex over {}: dim {}, dims {}", c.field(), c.dim(), dims_text(&dims)),
                    json!({"valid": true, "kind": "complex", "field": c.field().to_string(), "dim": c.dim(), "dims": dims_json(&dims)}),
                )
            } else {
                let a = inputs.algebra(&file)?;
                let dims = a.space().dims();
                info(
                    format!("valid dg-algebra over {}: dim {}, dims {}", a.field(), a.dim(), dims_text(&dims)),
                    json!({"valid": true, "kind": "algebra", "field": a.field().to_string(), "dim": a.dim(), "dims": dims_json(&dims)}),
                )
            }
        }
        Command::Op { file } => Output::Document(algebra_to_string(&opposite(&inputs.algebra(&file)?))),
        Command::Tensor { left, right } => {
            let (a, b) = (inputs.algebra(&left)?, inputs.algebra(&right)?);
            Output::Document(algebra_to_string(&tensor_product(&a, &b).map_err(core("tensor"))?))
        }
        Command::Homology { file } => {
            let a = inputs.algebra(&file)?;
            let h = homology(&a).map_err(core("homology"))?;
            let dims = h.dims();
            let classes: Vec<String> = h.representatives.iter().map(|r| a.format_vector(r)).collect();
            let mut text = format!("H(A) dims {}; acyclic: {}", dims_text(&dims), yes(h.is_acyclic()));
            for c in &classes {
                text.push_str(&format!("\n  [{c}]"));
            }
            info(text, json!({"dims": dims_json(&dims), "acyclic": h.is_acyclic(), "representatives": classes}))
        }
        Command::Kernel { file } => {
            let a = inputs.algebra(&file)?;
            Output::Document(algebra_to_string(&kernel_subalgebra(&a).map_err(core("kernel"))?.algebra))
        }
        Command::Contracting { file } => {
            let a = inputs.algebra(&file)?;
            match contracting_element(&a) {
                Some(z) => {
                    let shown = a.format_vector(&z.z);
                    report(
                        z.certified(),
                        format!(
                            "contracting element z = {shown}\n  dim ker(d): {}\n  A = ker(d) ⊕ z·ker(d): {}\n  d(z) = 1: {}",
                            z.kernel_dim,
                            yes(z.decomposition_holds),
                            yes(z.contraction_holds)
                        ),
                        json!({"found": true, "z": shown, "kernel_dim": z.kernel_dim, "certified": z.certified()}),
                    )
                }
                None => report(
                    false,
                    "no contracting element of degree -1".into(),
                    json!({"found": false}),
                ),
            }
        }
        Command::Center { file } => {
            let a = inputs.algebra(&file)?;
            let z = center(&a);
            let basis: Vec<String> = z.vectors().iter().map(|v| a.format_vector(v)).collect();
            info(
                format!("center: dim {}, dims {}\n  basis: {}", z.dim(), dims_text(&z.dims()), basis.join(", ")),
                json!({"dim": z.dim(), "dims": dims_json(&z.dims()), "basis": basis}),
            )
        }
        Command::Check { property, file } => {
            let a = inputs.algebra(&file)?;
            check(property, &a)?
        }
        Command::End { complex, matrix } => {
            let c = inputs.complex(&complex)?;
            let a = if matrix {
                MatrixDgAlgebra::end_of_complex(&c).map_err(core("end"))?.into_algebra()
            } else {
                end_dg_algebra(&c).map_err(core("end"))?.algebra
            };
            Output::Document(algebra_to_string(&a))
        }
        Command::Hom { source, target } => {
            let (c1, c2) = (inputs.complex(&source)?, inputs.complex(&target)?);
            Output::Document(complex_to_string(&hom_of_complexes(&c1, &c2).map_err(core("hom"))?.as_complex()))
        }
        Command::Matrix { size, good_grading, inner, field } => {
            let field = parse_field(&field)?;
            let f = if good_grading.is_empty() { vec![0; size.saturating_sub(1)] } else { good_grading };
            let m = good_grading_matrix_algebra(field, size, f).map_err(|e| CliError::invalid("--good-grading", e.to_string()))?;
            let m = match inner {
                Some(expr) => {
                    let z = parse_combination(m.algebra(), &expr)?;
                    m.with_inner_differential(&z).map_err(|e| CliError::invalid("--inner", e.to_string()))?
                }
                None => m,
            };
            Output::Document(algebra_to_string(m.algebra()))
        }
        Command::Sandwich { file } => {
            let a = inputs.algebra(&file)?;
            match sandwich_iso(&a) {
                Ok(w) => witness_report("sandwich map A⊗A^op → End(A)", &w),
                Err(CoreError::NotCentralSimple) => {
                    let cs = central_simplicity(&a);
                    report(
                        false,
                        format!(
                            "not central simple: center dim {}, sandwich rank {} of {}",
                            cs.center_dimension,
                            cs.sandwich_rank,
                            cs.dimension * cs.dimension
                        ),
                        json!({"verified": false, "central_simple": false, "center_dim": cs.center_dimension, "sandwich_rank": cs.sandwich_rank}),
                    )
                }
                Err(e) => return Err(CliError::core("sandwich", e)),
            }
        }
        Command::Structure { file, emit_complex } => {
            let a = inputs.algebra(&file)?;
            let m = MatrixDgAlgebra::recognize(&a).ok_or_else(|| {
                CliError::invalid(
                    if file == "-" { "<stdin>".to_string() } else { file.clone() },
                    "not a matrix algebra in the matrix-unit basis e_ij with a good grading",
                )
            })?;
            structure(&m, emit_complex)?
        }
        Command::VerifyIso { source, target, map } => {
            let (a, b) = (inputs.algebra(&source)?, inputs.algebra(&target)?);
            if a.field() != b.field() {
                return Err(CliError::invalid(target, format!("field {} differs from {}", b.field(), a.field())));
            }
            let m = parse_map_str(&inputs.text(&map)?, a.field(), a.space(), b.space()).map_err(|e| in_file(&map, e))?;
            witness_report("dg-isomorphism", &verify_dg_iso(&a, &b, &m).map_err(core("verify-iso"))?)
        }
        Command::VerifyEquiv { a, b, c1, c2, map } => {
            let (alg_a, alg_b) = (inputs.algebra(&a)?, inputs.algebra(&b)?);
            let (cx1, cx2) = (inputs.complex(&c1)?, inputs.complex(&c2)?);
            let (lhs, rhs) = equivalence_sides(&alg_a, &alg_b, &cx1, &cx2).map_err(core("verify-equiv"))?;
            let m = parse_map_str(&inputs.text(&map)?, alg_a.field(), lhs.space(), rhs.space()).map_err(|e| in_file(&map, e))?;
            let w = verify_equivalence(&alg_a, &alg_b, &cx1, &cx2, &m).map_err(core("verify-equiv"))?;
            witness_report("A⊗End(C1) ≅ B⊗End(C2)", &w)
        }
        Command::Forget { file, descriptor } => {
            let a = inputs.algebra(&file)?;
            if descriptor {
                let d = forget_descriptor(&a);
                info(
                    format!(
                        "ungraded: dim {}, center dim {}, central simple: {}",
                        d.dimension,
                        d.center_dimension,
                        yes(d.is_central_simple)
                    ),
                    json!({"dimension": d.dimension, "center_dimension": d.center_dimension, "is_central_simple": d.is_central_simple}),
                )
            } else {
                Output::Document(algebra_to_string(&forget_structure(&a)))
            }
        }
        Command::Kunneth { left, right } => {
            let (a, b) = (inputs.algebra(&left)?, inputs.algebra(&right)?);
            let r = kunneth_check(&a, &b).map_err(core("kunneth"))?;
            report(
                r.holds,
                format!(
                    "H(A⊗B) dims {}\nH(A)*H(B) dims {}\nKünneth: {}",
                    dims_text(&r.tensor_homology),
                    dims_text(&r.convolution),
                    yes(r.holds)
                ),
                json!({"tensor_homology": dims_json(&r.tensor_homology), "convolution": dims_json(&r.convolution), "holds": r.holds}),
            )
        }
        Command::Catalog { name: None } => {
            let text = catalog::ENTRIES.iter().map(|e| format!("{:<28} {}", e.name, e.summary)).collect::<Vec<_>>().join("\n");
            let entries: Vec<Value> = catalog::ENTRIES.iter().map(|e| json!({"name": e.name, "summary": e.summary})).collect();
            info(text, json!({"entries": entries}))
        }
        Command::Catalog { name: Some(name) } => {
            let entry = catalog::find(&name).ok_or_else(|| CliError::invalid("catalog", format!("unknown entry {name:?}")))?;
            let r = entry.run();
            let mut text = format!("{}: {}", entry.name, entry.summary);
            for c in &r.checks {
                text.push_str(&format!("\n  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.claim));
            }
            let checks: Vec<Value> = r.checks.iter().map(|c| json!({"claim": c.claim, "passed": c.passed})).collect();
            report(r.all_passed(), text, json!({"name": entry.name, "passed": r.all_passed(), "checks": checks}))
        }
    })
}

fn check(property: Property, a: &DgAlgebra) -> CliResult<Output> {
    Ok(match property {
        Property::CentralSimple => {
            let cs = central_simplicity(a);
            report(
                cs.holds(),
                format!(
                    "central simple: {} (dim {}, center dim {}, sandwich rank {} of {})",
                    yes(cs.holds()),
                    cs.dimension,
                    cs.center_dimension,
                    cs.sandwich_rank,
                    cs.dimension * cs.dimension
                ),
                json!({"holds": cs.holds(), "dimension": cs.dimension, "center_dimension": cs.center_dimension, "sandwich_rank": cs.sandwich_rank}),
            )
        }
        Property::TgrSemisimple => match is_tgr_semisimple(a) {
            Ok(r) => {
                let mut text = format!(
                    "bounded: {}\nacyclic: {} (H dims {})\nker(d) dims {}, semisimple: {}",
                    yes(r.bounded),
                    yes(r.acyclic),
                    dims_text(&r.homology_dims),
                    dims_text(&r.kernel_dims),
                    semisimple_word(&r.kernel_semisimple)
                );
                match r.failed_clause() {
                    Some(c) => text.push_str(&format!("\nfails: {c}")),
                    None => text.push_str("\nholds"),
                }
                report(
                    r.holds,
                    text,
                    json!({
                        "holds": r.holds,
                        "bounded": r.bounded,
                        "acyclic": r.acyclic,
                        "homology_dims": dims_json(&r.homology_dims),
                        "kernel_dims": dims_json(&r.kernel_dims),
                        "kernel_semisimple": r.kernel_semisimple.as_bool(),
                        "failed_clause": r.failed_clause(),
                    }),
                )
            }
            Err(CoreError::Indeterminate) => undecided(),
            Err(e) => return Err(CliError::core("tgr-semisimple", e)),
        },
        Property::Semisimple => match is_semisimple_ungraded(a) {
            Semisimplicity::Indeterminate => undecided(),
            s => {
                let radical = match &s {
                    Semisimplicity::NotSemisimple { radical } => radical.iter().map(|v| a.format_vector(v)).collect(),
                    _ => Vec::new(),
                };
                let mut text = format!("semisimple: {}", semisimple_word(&s));
                if !radical.is_empty() {
                    text.push_str(&format!("\n  radical basis: {}", radical.join(", ")));
                }
                report(s == Semisimplicity::Semisimple, text, json!({"holds": s.as_bool(), "radical": radical}))
            }
        },
    })
}

fn semisimple_word(s: &Semisimplicity) -> &'static str {
    match s {
        Semisimplicity::Semisimple => "yes",
        Semisimplicity::NotSemisimple { .. } => "no",
        Semisimplicity::Indeterminate => "undecided",
    }
}

fn undecided() -> Output {
    report(
        false,
        "undecided: no available method settles semisimplicity for this algebra".into(),
        json!({"holds": Value::Null, "indeterminate": true}),
    )
}

fn structure(m: &MatrixDgAlgebra, emit_complex: bool) -> CliResult<Output> {
    let r = match structure_realize(m) {
        Ok(r) => r,
        Err(CoreError::NoSuitableIdempotent(data)) => {
            let ranks: Vec<String> =
                data.iter().map(|c| format!("e{0}{0}: ranks {1}, {2}, joint {3}", c.index, c.ae_rank, c.ade_rank, c.joint_rank)).collect();
            return Ok(report(
                false,
                format!("no diagonal idempotent e with Ae ⊄ Ad(e)\n  {}", ranks.join("\n  ")),
                json!({"realized": false, "containments": ranks}),
            ));
        }
        Err(e) => return Err(CliError::core("structure", e)),
    };
    if emit_complex {
        return Ok(Output::Document(complex_to_string(&r.complex)));
    }
    let a = m.algebra();
    let l = &r.complex;
    let dl: Vec<String> = (0..l.dim())
        .filter(|&i| !l.diff_basis(i).is_empty())
        .map(|i| {
            let v = dgbr_core::linalg::to_dense(l.field(), l.dim(), l.diff_basis(i));
            format!("d({}) = {}", l.space().label(i), l.space().format_vector(&v))
        })
        .collect();
    let rejected: Vec<usize> = r.choice.rejected.iter().map(|c| c.index).collect();
    let ok = r.witness.all() && r.opposite_witness.all();
    let mut text = format!(
        "idempotent e{0}{0} (rejected: {1:?})\n  {2} lies in Ae but not in Ad(e)\n  L = Ae+Ad(e) / Ad(e): dims {3}, basis {4}",
        r.choice.index,
        rejected,
        a.format_vector(&r.choice.witness),
        dims_text(&l.space().dims()),
        l.space().labels().join(", ")
    );
    for d in &dl {
        text.push_str(&format!("\n  {d}"));
    }
    text.push_str(&format!(
        "\n  A → End(L): {}\n  A^op → End(L)^op: {}",
        if r.witness.all() { "verified" } else { "NOT verified" },
        if r.opposite_witness.all() { "verified" } else { "NOT verified" }
    ));
    Ok(report(
        ok,
        text,
        json!({
            "realized": ok,
            "idempotent": r.choice.index,
            "rejected": rejected,
            "complex_dims": dims_json(&l.space().dims()),
            "complex_basis": l.space().labels(),
            "complex_differential": dl,
            "witness": r.witness.all(),
            "opposite_witness": r.opposite_witness.all(),
        }),
    ))
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code: 0 verified/true, 1 false/absent, 2 invalid input, 3 I/O.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            return if write!(sink, "{}", e.render()).is_ok() { code } else { 3 };
        }
    };
    let json_mode = cli.json;
    let mut inputs = Inputs { stdin, cached: None };
    let (code, out, err) = match execute(cli, &mut inputs) {
        Ok(Output::Document(doc)) => (0, doc, String::new()),
        Ok(Output::Report { code, text, json }) => {
            let body = if json_mode { serde_json::to_string_pretty(&json).expect("json values serialize") } else { text };
            (code, body + "\n", String::new())
        }
        Err(e) => {
            let body = if json_mode {
                serde_json::to_string_pretty(&e.to_json()).expect("json values serialize")
            } else {
                format!("error: {e}")
            };
            (e.exit_code(), String::new(), body + "\n")
        }
    };
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return 3;
    }
    if stderr.write_all(err.as_bytes()).is_err() {
        return 3;
    }
    code
}
