use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use normcross::divisor::{DivisorGerm, Final, NCVerdict, VectorField};
use normcross::ideal::Radicality;
use normcross::logres::{self, LinearChange, LogOneForm};
use normcross::poly::{MonomialOrder, Polynomial};

use crate::input::{self, InputError, Request};
use crate::report::{self, *};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Options shared by every verb.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub json: bool,
    pub timings: bool,
    pub seed: u64,
}

#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub witness: Option<String>,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
            line: None,
            column: None,
            witness: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.code == "internal" {
            EXIT_INTERNAL
        } else {
            EXIT_INPUT
        }
    }

    fn body(&self) -> ErrorBody {
        ErrorBody {
            code: self.code.clone(),
            message: self.message.clone(),
            line: self.line,
            column: self.column,
            witness: self.witness.clone(),
        }
    }
}

impl From<normcross::Error> for CliError {
    fn from(e: normcross::Error) -> Self {
        let witness = match &e {
            normcross::Error::NotReduced(w) => Some(w.clone()),
            _ => None,
        };
        CliError {
            witness,
            ..CliError::new(report::error_code(&e), e.to_string())
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        let (line, column) = e.position().unzip();
        CliError {
            line,
            column,
            ..CliError::new(e.code(), e.to_string())
        }
    }
}

/// What a verb prints and how the process exits.
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit: i32,
}

pub struct Prepared {
    pub req: Request,
    pub germ: DivisorGerm,
    pub echo: InputEcho,
}

pub fn read_request(path: &Path) -> Result<Request, CliError> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
    Ok(input::parse_request(&text)?)
}

pub fn prepare(req: Request, translate: Option<&str>) -> Result<Prepared, CliError> {
    let ring = req.ring.clone();
    let mut echo = InputEcho {
        ring: ring.names().to_vec(),
        h: ring.format(&req.h),
        factors: req
            .factors
            .as_ref()
            .map(|fs| fs.iter().map(|f| ring.format(f)).collect()),
        translate: None,
        translated_h: None,
    };
    let req = match translate {
        Some(t) => {
            let point = input::parse_point(t, &ring)?;
            let moved = req.translate(&point);
            echo.translate = Some(point.iter().map(|q| q.to_string()).collect());
            echo.translated_h = Some(ring.format(&moved.h));
            moved
        }
        None => req,
    };
    let germ = DivisorGerm::new(&ring, req.h.clone(), req.factors.clone())?;
    Ok(Prepared { req, germ, echo })
}

fn render<T: Serialize>(
    ctx: &Ctx,
    command: &'static str,
    echo: InputEcho,
    result: T,
    notes: Vec<String>,
    text: String,
    exit: i32,
) -> Output {
    let stdout = if ctx.json {
        report::to_json(&Envelope {
            schema: SCHEMA,
            command,
            input: Some(echo),
            result: Some(result),
            error: None,
            notes,
        })
    } else {
        let mut s = format!("h = {}\n", echo.h);
        if let (Some(p), Some(t)) = (&echo.translate, &echo.translated_h) {
            let _ = writeln!(s, "translated by ({}): h = {t}", p.join(", "));
        }
        s.push_str(&text);
        for n in &notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    };
    Output {
        stdout,
        stderr: String::new(),
        exit,
    }
}

pub fn error_output(ctx: &Ctx, command: &'static str, e: &CliError) -> Output {
    if ctx.json {
        Output {
            stdout: report::to_json(&Envelope::<()> {
                schema: SCHEMA,
                command,
                input: None,
                result: None,
                error: Some(e.body()),
                notes: Vec::new(),
            }),
            stderr: String::new(),
            exit: e.exit_code(),
        }
    } else {
        let mut s = format!("error[{}]: {}", e.code, e.message);
        if let Some(w) = &e.witness {
            let _ = write!(s, "\nwitness: {w}");
        }
        Output {
            stdout: String::new(),
            stderr: s + "\n",
            exit: e.exit_code(),
        }
    }
}

fn kebab<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn vector(d: &DivisorGerm, f: &VectorField) -> String {
    let parts: Vec<String> = f.coeffs().iter().map(|c| d.format(c)).collect();
    format!("({})", parts.join(", "))
}

fn form_json(d: &DivisorGerm, label: String, w: &LogOneForm) -> FormJson {
    FormJson {
        label,
        numerators: w.numerators().iter().map(|a| d.format(a)).collect(),
        denominator: d.format(w.denominator()),
        closed: w.is_closed(),
    }
}

pub fn verdict_exit(v: &NCVerdict) -> i32 {
    match v.final_verdict {
        Final::NormalCrossing => EXIT_YES,
        Final::NotNormalCrossing => EXIT_NO,
        Final::Undecided => EXIT_UNDECIDED,
    }
}

pub fn analyze(ctx: &Ctx, p: Prepared) -> Result<Output, CliError> {
    let v = p.germ.decide_normal_crossing()?;
    let mut text = String::new();
    for s in &v.steps {
        let timing = if ctx.timings {
            format!(" ({:.3} ms)", s.elapsed.as_secs_f64() * 1e3)
        } else {
            String::new()
        };
        let _ = writeln!(text, "[{}] {}: {}{timing}", kebab(&s.outcome), s.name, s.clause);
        for w in &s.witnesses {
            let _ = writeln!(text, "    {} = {}", w.label, w.value);
        }
    }
    let _ = write!(text, "verdict: {}", kebab(&v.final_verdict));
    if let Some(f) = v.failing_step {
        let _ = write!(text, " (failing step: {f})");
    }
    if let Some(r) = v.undecided_reason {
        let _ = write!(text, " ({})", kebab(&r));
    }
    if let Some(m) = v.multiplicity {
        let _ = write!(text, ", locally x_1 ... x_{m} = 0");
    }
    text.push('\n');
    let result = AnalyzeResult {
        steps: v.steps.iter().map(|s| StepJson::new(s, ctx.timings)).collect(),
        final_verdict: v.final_verdict,
        failing_step: v.failing_step,
        undecided_reason: v.undecided_reason,
        multiplicity: v.multiplicity,
    };
    let exit = verdict_exit(&v);
    Ok(render(ctx, "analyze", p.echo, result, Vec::new(), text, exit))
}

pub fn is_free(ctx: &Ctx, p: Prepared) -> Result<Output, CliError> {
    let d = &p.germ;
    let f = d.is_free_at_origin()?;
    let result = FreeResult {
        free: f.free,
        mu: f.mu,
        generators: f.generators.iter().map(|g| vector(d, g)).collect(),
        determinant: f.determinant.as_ref().map(|q| d.format(q)),
        unit: f.unit.as_ref().map(|q| d.format(q)),
        weights: f.weights.clone(),
        projective_dimension: f.projective_dimension,
    };
    let mut text = format!(
        "{}\nminimal generators of Der(log D) at the origin: {}\n",
        if f.free { "free" } else { "not free" },
        f.mu
    );
    for g in &result.generators {
        let _ = writeln!(text, "    {g}");
    }
    if let (Some(det), Some(u)) = (&result.determinant, &result.unit) {
        let _ = writeln!(text, "determinant: {det}\nunit: {u}");
    }
    if let Some(pd) = f.projective_dimension {
        let _ = writeln!(text, "projective dimension of R/((h)+J_h): {pd}");
    }
    let exit = if f.free { EXIT_YES } else { EXIT_NO };
    Ok(render(ctx, "is-free", p.echo, result, Vec::new(), text, exit))
}

pub fn is_radical(ctx: &Ctx, p: Prepared) -> Result<Output, CliError> {
    let d = &p.germ;
    let free = d.is_free_at_origin()?;
    let rad = d.is_radical_jacobian(Some(&free))?;
    let mut notes = Vec::new();
    if !free.free {
        notes.push(format!(
            "not free at the origin (Der(log D) needs {} generators), so D is not a normal crossing divisor there whatever the radicality",
            free.mu
        ));
    }
    let result = RadicalResult {
        verdict: rad.verdict,
        method: rad.method.name(),
        ideal: d.singular_locus_ideal().formatted_gens(),
        witness: rad.witness.as_ref().map(|w| d.format(w)),
        exponent: rad.exponent,
        notes: rad.notes.clone(),
    };
    let mut text = format!(
        "{} (method: {})\n",
        match rad.verdict {
            Radicality::Radical => "radical",
            Radicality::NotRadical => "not radical",
            Radicality::Inconclusive => "inconclusive",
        },
        result.method
    );
    if let Some(w) = &result.witness {
        let _ = write!(text, "element of the radical outside the ideal: {w}");
        if let Some(k) = rad.exponent {
            let _ = write!(text, " (power {k} lies in the ideal)");
        }
        text.push('\n');
    }
    let exit = match rad.verdict {
        Radicality::Radical => EXIT_YES,
        Radicality::NotRadical => EXIT_NO,
        Radicality::Inconclusive => EXIT_UNDECIDED,
    };
    Ok(render(ctx, "is-radical", p.echo, result, notes, text, exit))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum IdealChoice {
    /// (h) + J_h
    SingularLocus,
    /// J_h
    Jacobian,
}

pub fn gb(ctx: &Ctx, p: Prepared, order: Option<MonomialOrder>, which: IdealChoice) -> Result<Output, CliError> {
    let d = &p.germ;
    let ord = order.or(p.req.order).unwrap_or(MonomialOrder::DegRevLex);
    let (ideal, name) = match which {
        IdealChoice::SingularLocus => (d.singular_locus_ideal(), "singular-locus"),
        IdealChoice::Jacobian => (d.jacobian_ideal(), "jacobian"),
    };
    let basis = ideal.basis(ord);
    let result = GbResult {
        ideal: name,
        order: ord.to_string(),
        generators: ideal.formatted_gens(),
        basis: basis.elements().iter().map(|g| d.format(g)).collect(),
        dimension: basis.dimension(),
    };
    let kind = if ord.is_local() { "standard" } else { "Groebner" };
    let mut text = format!("{kind} basis of the {name} ideal, order {ord}:\n");
    for g in &result.basis {
        let _ = writeln!(text, "    {g}");
    }
    let scope = if ord.is_local() { "at the origin" } else { "global" };
    let _ = writeln!(text, "dimension ({scope}): {}", result.dimension);
    Ok(render(ctx, "gb", p.echo, result, Vec::new(), text, EXIT_YES))
}

/// Residue of one form on one component, switching to generic coordinates
/// when no coordinate partial is admissible.
struct ResidueTable<'a> {
    d: &'a DivisorGerm,
    seed: u64,
    generic: Option<(LinearChange, DivisorGerm)>,
}

impl ResidueTable<'_> {
    fn entry(&mut self, label: &str, w: &LogOneForm, comp: &Polynomial) -> ResidueEntry {
        let d = self.d;
        let mut e = ResidueEntry {
            form: label.to_string(),
            component: d.format(comp),
            residue: None,
            numerator: None,
            denominator: None,
            index: None,
            holomorphic: None,
            coordinates: "original",
            error: None,
        };
        let smooth = comp.gradient().iter().any(|q| !q.vanishes_at_origin());
        let rho = match logres::residue(w, d, Some(comp)) {
            Err(normcross::Error::NoAdmissibleIndex) => {
                if self.generic.is_none() {
                    let change = LinearChange::random(d.nvars(), self.seed);
                    match change.apply_to_germ(d) {
                        Ok(g) => self.generic = Some((change, g)),
                        Err(err) => {
                            e.error = Some(report::error_code(&err).into());
                            return e;
                        }
                    }
                }
                let (change, g) = self.generic.as_ref().expect("just set");
                e.coordinates = "generic";
                logres::residue(&change.apply_to_form(w), g, Some(&comp.substitute(&change.images())))
            }
            other => other,
        };
        match rho {
            Ok(r) => {
                let (a, b) = r.simplified();
                e.residue = Some(r.to_string());
                e.numerator = Some(d.format(&a));
                e.denominator = Some(d.format(&b));
                e.index = r.index.map(|j| d.ring().names()[j].clone());
                if smooth {
                    e.holomorphic = r.is_holomorphic().ok();
                }
            }
            Err(err) => e.error = Some(report::error_code(&err).into()),
        }
        e
    }

    fn change_json(&self) -> Option<CoordinateChange> {
        self.generic.as_ref().map(|(c, _)| CoordinateChange {
            seed: self.seed,
            matrix: c
                .matrix
                .iter()
                .map(|row| row.iter().map(|q| q.to_string()).collect())
                .collect(),
        })
    }
}

fn components(d: &DivisorGerm) -> Vec<Polynomial> {
    d.local_factors().unwrap_or_else(|| vec![d.h().clone()])
}

pub fn residues(ctx: &Ctx, p: Prepared) -> Result<Output, CliError> {
    let d = &p.germ;
    let free = d.is_free_at_origin()?;
    if !free.free {
        let mut e = CliError::from(normcross::Error::NotFree);
        e.message = format!(
            "residues need a free divisor; Der(log D) needs {} > {} generators at the origin",
            free.mu,
            d.nvars()
        );
        return Err(e);
    }
    let mut forms: Vec<(String, LogOneForm)> = logres::dual_basis(d, &free)?
        .into_iter()
        .enumerate()
        .map(|(k, w)| (format!("omega-{}", k + 1), w))
        .collect();
    forms.push(("dlog".into(), LogOneForm::dlog(d.h())));
    forms.extend(
        p.req
            .forms
            .iter()
            .enumerate()
            .map(|(k, w)| (format!("form-{}", k + 1), w.clone())),
    );
    let comps = components(d);
    let mut table = ResidueTable {
        d,
        seed: ctx.seed,
        generic: None,
    };
    let mut entries = Vec::new();
    for (label, w) in &forms {
        for c in &comps {
            if !w.is_logarithmic(d.ring(), d.h()) {
                entries.push(ResidueEntry {
                    form: label.clone(),
                    component: d.format(c),
                    residue: None,
                    numerator: None,
                    denominator: None,
                    index: None,
                    holomorphic: None,
                    coordinates: "original",
                    error: Some("not-logarithmic".into()),
                });
            } else {
                entries.push(table.entry(label, w, c));
            }
        }
    }
    let result = ResiduesResult {
        forms: forms.iter().map(|(l, w)| form_json(d, l.clone(), w)).collect(),
        components: comps
            .iter()
            .map(|c| ComponentJson {
                equation: d.format(c),
                smooth: c.gradient().iter().any(|q| !q.vanishes_at_origin()),
            })
            .collect(),
        residues: entries,
        coordinate_change: table.change_json(),
    };

    let mut text = String::from("logarithmic forms:\n");
    for f in &result.forms {
        let _ = writeln!(
            text,
            "    {} = ({}) / ({}){}",
            f.label,
            f.numerators.join(", "),
            f.denominator,
            if f.closed { "  [closed]" } else { "" }
        );
    }
    let rows: Vec<Vec<String>> = result
        .residues
        .iter()
        .map(|e| {
            let via = match (&e.index, e.coordinates) {
                (Some(v), "generic") => format!("d/d{v} (generic coordinates)"),
                (Some(v), _) => format!("d/d{v}"),
                _ => "-".into(),
            };
            vec![
                e.form.clone(),
                e.component.clone(),
                e.residue.clone().or_else(|| e.error.clone()).unwrap_or_default(),
                via,
                match e.holomorphic {
                    Some(true) => "holomorphic".into(),
                    Some(false) => "non-holomorphic".into(),
                    None => "-".into(),
                },
            ]
        })
        .collect();
    text.push_str(&report::table(&["form", "component", "residue", "via", "holomorphy"], &rows));
    if let Some(c) = &result.coordinate_change {
        let _ = writeln!(text, "generic coordinate change (seed {}): {:?}", c.seed, c.matrix);
    }
    Ok(render(ctx, "residues", p.echo, result, Vec::new(), text, EXIT_YES))
}

pub fn verify_basis(ctx: &Ctx, p: Prepared) -> Result<Output, CliError> {
    let d = &p.germ;
    let mut notes = Vec::new();
    let (source, fields, forms) = if !p.req.forms.is_empty() {
        ("supplied-forms", Vec::new(), p.req.forms.clone())
    } else if !p.req.fields.is_empty() {
        let m: Vec<Vec<Polynomial>> = p.req.fields.iter().map(|f| f.coeffs().to_vec()).collect();
        let dual = if m.len() == d.nvars() {
            logres::dual_of_fields(d, &m).unwrap_or_default()
        } else {
            Vec::new()
        };
        ("supplied-fields", p.req.fields.clone(), dual)
    } else {
        let free = d.is_free_at_origin()?;
        let basis = free.basis().ok_or(normcross::Error::NotFree)?.to_vec();
        notes.push(
            "checked the computed basis of Der(log D); another basis may still be closed or commuting".into(),
        );
        ("computed-basis", basis, logres::dual_basis(d, &free)?)
    };
    let wedge = if source == "supplied-fields" {
        None
    } else {
        let cert = logres::verify_closed_basis_certificate(d, &forms)?;
        Some(cert)
    };
    let commute = if fields.is_empty() {
        None
    } else {
        Some(logres::verify_commuting_basis(d, &fields)?)
    };
    let certificate = wedge.as_ref().is_some_and(|c| c.issued) || commute == Some(true);
    let result = VerifyResult {
        source,
        fields: fields.iter().map(|f| vector(d, f)).collect(),
        forms: forms
            .iter()
            .enumerate()
            .map(|(k, w)| form_json(d, format!("omega-{}", k + 1), w))
            .collect(),
        wedge_is_unit_over_h: wedge.as_ref().map(|c| c.wedge_is_unit_over_h),
        fields_commute: commute,
        certificate,
    };
    let mut text = format!("basis source: {source}\n");
    for f in &result.fields {
        let _ = writeln!(text, "    field {f}");
    }
    for f in &result.forms {
        let _ = writeln!(
            text,
            "    {} = ({}) / ({}): {}",
            f.label,
            f.numerators.join(", "),
            f.denominator,
            if f.closed { "closed" } else { "not closed" }
        );
    }
    if let Some(w) = result.wedge_is_unit_over_h {
        let _ = writeln!(text, "wedge is a unit times dx/h: {w}");
    }
    if let Some(c) = commute {
        let _ = writeln!(text, "fields form a commuting Saito basis: {c}");
    }
    let _ = writeln!(
        text,
        "{}",
        if certificate {
            "certificate issued: normal crossings at the origin"
        } else {
            "no certificate"
        }
    );
    let exit = if certificate { EXIT_YES } else { EXIT_NO };
    Ok(render(ctx, "verify-basis", p.echo, result, notes, text, exit))
}

pub fn kebab_name<T: Serialize>(v: &T) -> String {
    kebab(v)
}
