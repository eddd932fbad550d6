use std::fmt::Write;

use serde::Serialize;

use super::{Entry, InputDocument, InputError, Structure};
use crate::double::{assemble, canonical_r, double_qlb, invariance_defect, DoubleAlgebra};
use crate::exterior::Multivector;
use crate::lie::{grade_block, jacobi_defect};
use crate::names::BasisNames;
use crate::quasi::{bv_prerequisite, characters, laplacian, laplacian_checks, relations_suite, validate, QuasiLieBialgebra};
use crate::report::{Check, ValidationReport};
use crate::representation::{check_q_isomorphism, verify_representation};
use crate::scalar;

/// Default cap on the dimension accepted by `rep-verify`.
pub const DEFAULT_MAX_DIM: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub max_dim: usize,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { max_dim: DEFAULT_MAX_DIM }
    }
}

/// Machine-readable outcome of a command. Serializes deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub passed: bool,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub suites: Vec<ValidationReport>,
    pub artifacts: Artifacts,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Artifacts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characters: Option<CharactersOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub laplacian: Option<Vec<BlockOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bv_prerequisite: Option<BvOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub double: Option<DoubleOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_rank: Option<usize>,
}

/// A multivector as text plus `[1-based indices, "value"]` terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermsOut {
    pub text: String,
    pub terms: Vec<(Vec<usize>, String)>,
}

impl TermsOut {
    fn new(m: &Multivector, names: &BasisNames) -> Self {
        TermsOut {
            text: names.show(m),
            terms: m.terms().map(|(b, c)| (b.indices().map(|i| i + 1).collect(), scalar::format(c))).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharactersOut {
    pub xi_mu: TermsOut,
    pub x_gamma: TermsOut,
}

/// The grade-k block of the Laplacian, rows and columns in ascending blade order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockOut {
    pub grade: usize,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BvOut {
    pub target: TermsOut,
    pub x0: Option<TermsOut>,
    pub kernel_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleOut {
    pub dim: usize,
    pub bracket: Vec<(usize, usize, usize, String)>,
    pub r: TermsOut,
}

impl Report {
    fn new(command: &str, doc: &InputDocument) -> Self {
        Report {
            command: command.into(),
            dim: doc.dim,
            basis: doc.basis.clone(),
            passed: true,
            exit_code: 0,
            error: None,
            suites: Vec::new(),
            artifacts: Artifacts::default(),
        }
    }

    fn push(&mut self, suite: ValidationReport) {
        self.passed &= suite.passed();
        self.exit_code = if self.passed { 0 } else { 1 };
        self.suites.push(suite);
    }

    fn fail(&mut self, message: String) {
        self.passed = false;
        self.exit_code = 1;
        self.error = Some(message);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable summary: one line per suite, details of failures.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: dim {} ({})", self.command, self.dim, self.basis.join(", "));
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error: {e}");
        }
        for s in &self.suites {
            let ok = s.items.iter().filter(|i| i.passed).count();
            let _ = writeln!(out, "  {}: {}/{} passed", s.title, ok, s.items.len());
            for i in s.failed_items() {
                let _ = writeln!(out, "    FAIL {}: {}", i.name, i.statement);
                if let Some(f) = &i.failure {
                    let _ = writeln!(out, "      at {}", f.at);
                    let _ = writeln!(out, "      lhs = {}", f.lhs);
                    let _ = writeln!(out, "      rhs = {}", f.rhs);
                }
            }
        }
        if let Some(rank) = self.artifacts.q_rank {
            let _ = writeln!(out, "  rank Q = {rank}");
        }
        let _ = writeln!(out, "result: {}", if self.passed { "pass" } else { "fail" });
        out
    }
}

fn build(report: &mut Report, doc: &InputDocument) -> Option<QuasiLieBialgebra> {
    match doc.build() {
        Ok(q) => Some(q),
        Err(e) => {
            report.fail(format!("structure could not be built: {e}"));
            None
        }
    }
}

/// Axioms, derived relations and Laplacian checks, with characters, the
/// Laplacian blocks and the `x0` solve as artifacts.
pub fn run_check(doc: &InputDocument, _flags: &Flags) -> Report {
    let mut report = Report::new("check", doc);
    let Some(q) = build(&mut report, doc) else { return report };
    report.push(validate(&q));
    report.push(relations_suite(&q));
    report.push(laplacian_checks(&q));
    let names = q.names();
    let ch = characters(&q);
    report.artifacts.characters =
        Some(CharactersOut { xi_mu: TermsOut::new(&ch.xi_mu, names), x_gamma: TermsOut::new(&ch.x_gamma, names) });
    let l = laplacian(&q);
    report.artifacts.laplacian = Some(
        (0..=q.dim())
            .map(|k| {
                let b = grade_block(&l, q.dim(), k, k);
                BlockOut {
                    grade: k,
                    rows: (0..b.rows()).map(|i| b.row(i).iter().map(scalar::format).collect()).collect(),
                }
            })
            .collect(),
    );
    let bv = bv_prerequisite(&q);
    report.artifacts.bv_prerequisite = Some(BvOut {
        target: TermsOut::new(&bv.target, names),
        x0: bv.x0.as_ref().map(|x| TermsOut::new(x, names)),
        kernel_dim: bv.kernel_dim,
    });
    report
}

/// Report plus the emitted document for the double, when the input validates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleOutput {
    pub report: Report,
    pub document: Option<InputDocument>,
}

/// Builds the double and its exact structure `(D, r)`; the emitted document
/// carries the bracket of `D` and the canonical `r`.
pub fn run_double(doc: &InputDocument, _flags: &Flags) -> DoubleOutput {
    let mut report = Report::new("double", doc);
    let Some(q) = build(&mut report, doc) else { return DoubleOutput { report, document: None } };
    let axioms = validate(&q);
    let valid = axioms.passed();
    report.push(axioms);
    if !valid {
        return DoubleOutput { report, document: None };
    }
    let d = assemble(&q);
    report.push(double_suite(&d));
    match double_qlb(&d) {
        Ok(dq) => {
            let mut v = validate(&dq);
            v.title = "double axioms".into();
            report.push(v);
        }
        Err(e) => report.fail(format!("double structure could not be built: {e}")),
    }
    let document = double_document(&d);
    report.artifacts.double = Some(DoubleOut {
        dim: d.dim(),
        bracket: d.bracket().constants().into_iter().map(|(i, j, k, c)| (i + 1, j + 1, k + 1, scalar::format(&c))).collect(),
        r: TermsOut::new(&canonical_r(&d), d.names()),
    });
    let document = report.passed.then_some(document);
    DoubleOutput { report, document }
}

fn double_suite(d: &DoubleAlgebra) -> ValidationReport {
    let names = d.names();
    let mut suite = ValidationReport::new("double");
    let mut k = Check::new("double_jacobi", "the bracket of D satisfies Jacobi", names);
    let defect = jacobi_defect(d.bracket());
    match defect.first() {
        None => k.require(String::new, true, || (String::new(), String::new())),
        Some((t, v)) => {
            let (t, v) = (*t, v.clone());
            k.require(|| names.tuple(d.space(), &t), false, || (names.show(&v), "0".into()))
        }
    }
    suite.push(k.finish());
    let mut k = Check::new("double_invariance", "<[u,v],w> + <v,[u,w]> = 0", names);
    match invariance_defect(d) {
        None => k.require(String::new, true, || (String::new(), String::new())),
        Some(w) => k.require(|| names.tuple(d.space(), &w.triple), false, || (scalar::format(&w.value), "0".into())),
    }
    suite.push(k.finish());
    suite
}

fn double_document(d: &DoubleAlgebra) -> InputDocument {
    let n = d.n();
    let mu: Vec<Entry<3>> = d.bracket().constants().into_iter().map(|(i, j, k, c)| ([i, j, k], c)).collect();
    let r = (0..n).map(|i| ([i, n + i], scalar::frac(1, 2))).collect();
    InputDocument { dim: 2 * n, basis: d.names().double(), mu, structure: Structure::Exact { r } }
}

/// Representation law, intertwining and bijectivity of `Q`.
pub fn run_rep_verify(doc: &InputDocument, flags: &Flags) -> Result<Report, InputError> {
    if doc.dim > flags.max_dim {
        return Err(InputError::DimensionCap { dim: doc.dim, max: flags.max_dim });
    }
    let mut report = Report::new("rep-verify", doc);
    let Some(q) = build(&mut report, doc) else { return Ok(report) };
    report.push(validate(&q));
    report.push(verify_representation(&q));
    let qi = check_q_isomorphism(&q);
    report.push(qi.report);
    report.artifacts.q_rank = Some(qi.rank);
    Ok(report)
}
