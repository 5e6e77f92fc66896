//! Versioned JSON reports and their text renderings.

use serde::Serialize;

use normcross::divisor::{StepRecord, Witness};

pub const SCHEMA: &str = "normcross-report/1";

/// Stable machine-readable code for each library error.
pub fn error_code(e: &normcross::Error) -> &'static str {
    use normcross::Error::*;
    match e {
        RingMismatch { .. } => "ring-mismatch",
        VariableOutOfRange { .. } => "variable-out-of-range",
        ZeroPolynomial => "zero-polynomial",
        Parse { .. } => "syntax",
        UnknownVariable { .. } => "unknown-variable",
        ZeroDenominator { .. } => "zero-denominator",
        EmptyRing => "empty-ring",
        InvalidVariableName(_) => "invalid-variable-name",
        DuplicateVariable(_) => "duplicate-variable",
        UnknownOrder(_) => "unknown-order",
        RankMismatch => "rank-mismatch",
        UnitIdeal => "unit-ideal",
        InvalidInput(_) => "invalid-input",
        OriginNotOnDivisor(_) => "origin-not-on-divisor",
        NotReduced(_) => "not-reduced",
        FactorMismatch => "factor-mismatch",
        NotFree => "not-free",
        NotLogarithmic(_) => "not-logarithmic",
        ComponentNotSmooth(_) => "component-not-smooth",
        NoAdmissibleIndex => "no-admissible-index",
        Internal(_) => "internal",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub ring: Vec<String>,
    pub h: String,
    pub factors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translate: Option<Vec<String>>,
    /// The equation after moving the translation point to the origin.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translated_h: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct StepJson<'a> {
    pub name: &'a str,
    pub outcome: normcross::divisor::StepOutcome,
    pub clause: &'a str,
    pub witnesses: &'a [Witness],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl<'a> StepJson<'a> {
    pub fn new(s: &'a StepRecord, timings: bool) -> Self {
        StepJson {
            name: s.name,
            outcome: s.outcome,
            clause: &s.clause,
            witnesses: &s.witnesses,
            timing_ms: timings.then(|| (s.elapsed.as_secs_f64() * 1e6).round() / 1e3),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalyzeResult<'a> {
    pub steps: Vec<StepJson<'a>>,
    #[serde(rename = "final")]
    pub final_verdict: normcross::divisor::Final,
    pub failing_step: Option<&'static str>,
    pub undecided_reason: Option<normcross::divisor::UndecidedReason>,
    pub multiplicity: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct FreeResult {
    pub free: bool,
    pub mu: usize,
    pub generators: Vec<String>,
    pub determinant: Option<String>,
    pub unit: Option<String>,
    pub weights: Option<Vec<u32>>,
    pub projective_dimension: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct RadicalResult {
    pub verdict: normcross::ideal::Radicality,
    pub method: &'static str,
    pub ideal: Vec<String>,
    pub witness: Option<String>,
    pub exponent: Option<u32>,
    pub notes: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct GbResult {
    pub ideal: &'static str,
    pub order: String,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub dimension: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormJson {
    pub label: String,
    pub numerators: Vec<String>,
    pub denominator: String,
    pub closed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentJson {
    pub equation: String,
    pub smooth: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueEntry {
    pub form: String,
    pub component: String,
    pub residue: Option<String>,
    pub numerator: Option<String>,
    pub denominator: Option<String>,
    /// Variable whose partial served as denominator.
    pub index: Option<String>,
    /// Only decided on smooth components.
    pub holomorphic: Option<bool>,
    pub coordinates: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinateChange {
    pub seed: u64,
    /// Rows of `A` in `x = A·x'`.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct ResiduesResult {
    pub forms: Vec<FormJson>,
    pub components: Vec<ComponentJson>,
    pub residues: Vec<ResidueEntry>,
    pub coordinate_change: Option<CoordinateChange>,
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub source: &'static str,
    pub fields: Vec<String>,
    pub forms: Vec<FormJson>,
    pub wedge_is_unit_over_h: Option<bool>,
    pub fields_commute: Option<bool>,
    pub certificate: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct FixtureJson {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CorpusResult {
    pub fixtures: Vec<FixtureJson>,
    pub passed: usize,
    pub failed: usize,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Column-aligned plain-text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (k, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if k + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  ", w = *w));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}
