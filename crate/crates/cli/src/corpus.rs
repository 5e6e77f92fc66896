//! Fixture corpus: every `*.nc` file states its expected outcomes with
//! `expect: key=value` lines, and the runner compares them with what the
//! library computes.
//!
//! Recognised keys: `verdict`, `failing-step`, `multiplicity`,
//! `undecided-reason`, `free`, `radical`, `a1`, `euler`, `error`,
//! `residue(LABEL, COMPONENT)` and `holomorphic(LABEL, COMPONENT)`, where
//! `LABEL` is `dlog` or `form-k` for the k-th `form:` line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use normcross::divisor::{DivisorGerm, NCVerdict};
use normcross::logres::{self, LogOneForm, ResidueClass};

use crate::commands::{kebab_name, prepare, CliError, Ctx, Output, EXIT_NO, EXIT_YES};
use crate::input::{self, Request};
use crate::report::{self, CheckJson, CorpusResult, Envelope, FixtureJson, SCHEMA};

const VERDICT_KEYS: [&str; 4] = ["verdict", "failing-step", "multiplicity", "undecided-reason"];

fn none_or<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "none".into())
}

/// `name(label, component)` split into its parts.
fn call<'a>(key: &'a str, name: &str) -> Option<(&'a str, &'a str)> {
    let inner = key.strip_prefix(name)?.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (label, comp) = inner.split_once(',')?;
    Some((label.trim(), comp.trim()))
}

fn form_by_label(req: &Request, d: &DivisorGerm, label: &str) -> Option<LogOneForm> {
    if label == "dlog" {
        return Some(LogOneForm::dlog(d.h()));
    }
    let k: usize = label.strip_prefix("form-")?.parse().ok()?;
    req.forms.get(k.checked_sub(1)?).cloned()
}

struct Evaluator<'a> {
    req: &'a Request,
    d: &'a DivisorGerm,
    verdict: Option<Result<NCVerdict, String>>,
}

impl Evaluator<'_> {
    fn verdict(&mut self) -> Result<&NCVerdict, String> {
        if self.verdict.is_none() {
            self.verdict = Some(
                self.d
                    .decide_normal_crossing()
                    .map_err(|e| report::error_code(&e).to_string()),
            );
        }
        self.verdict.as_ref().expect("just set").as_ref().map_err(Clone::clone)
    }

    fn residue(&self, label: &str, comp: &str) -> Result<logres::ResidueClass, String> {
        let w = form_by_label(self.req, self.d, label).ok_or_else(|| format!("unknown form '{label}'"))?;
        let c = self.d.ring().parse(comp).map_err(|e| e.to_string())?;
        logres::residue(&w, self.d, Some(&c)).map_err(|e| report::error_code(&e).to_string())
    }

    /// The actual value for `key` and whether it matches `expected`.
    fn check(&mut self, key: &str, expected: &str) -> (String, bool) {
        let d = self.d;
        let actual: Result<String, String> = match key {
            "verdict" => self.verdict().map(|v| kebab_name(&v.final_verdict)),
            "failing-step" => self.verdict().map(|v| none_or(v.failing_step)),
            "multiplicity" => self.verdict().map(|v| none_or(v.multiplicity)),
            "undecided-reason" => self
                .verdict()
                .map(|v| none_or(v.undecided_reason.map(|r| kebab_name(&r)))),
            "free" => d
                .is_free_at_origin()
                .map(|f| f.free.to_string())
                .map_err(|e| report::error_code(&e).into()),
            "radical" => d
                .is_free_at_origin()
                .and_then(|f| d.is_radical_jacobian(Some(&f)))
                .map(|r| kebab_name(&r.verdict))
                .map_err(|e| report::error_code(&e).into()),
            "a1" => d
                .classify_a1()
                .map(none_or)
                .map_err(|e| report::error_code(&e).into()),
            "euler" => d
                .euler_homogeneity()
                .map(|f| f.is_some().to_string())
                .map_err(|e| report::error_code(&e).into()),
            "error" => Ok(match d.ensure_reduced() {
                Ok(()) => "none".into(),
                Err(e) => report::error_code(&e).into(),
            }),
            k => {
                if let Some((label, comp)) = call(k, "residue") {
                    return match self.residue(label, comp) {
                        Ok(r) => {
                            let matches = parse_class(d, &r, expected).is_some_and(|c| r.equals(&c));
                            (r.to_string(), matches)
                        }
                        Err(e) => (format!("error: {e}"), false),
                    };
                } else if let Some((label, comp)) = call(k, "holomorphic") {
                    self.residue(label, comp).and_then(|r| {
                        r.is_holomorphic()
                            .map(|b| b.to_string())
                            .map_err(|e| report::error_code(&e).into())
                    })
                } else {
                    Err(format!("unknown expectation key '{k}'"))
                }
            }
        };
        match actual {
            Ok(a) => {
                let ok = a == expected;
                (a, ok)
            }
            Err(e) if key == "verdict" && expected.starts_with("error") => (e.clone(), false),
            Err(e) => (format!("error: {e}"), false),
        }
    }
}

/// Parses `NUM / DEN` (or a bare polynomial) as a class with the modulus of `like`.
fn parse_class(d: &DivisorGerm, like: &ResidueClass, text: &str) -> Option<ResidueClass> {
    let r = d.ring();
    let (a, b) = match text.split_once(" / ") {
        Some((a, b)) => (r.parse(a).ok()?, r.parse(b).ok()?),
        None => (r.parse(text).ok()?, r.parse("1").ok()?),
    };
    ResidueClass::new(r, a, b, like.modulus.clone()).ok()
}

fn run_fixture(path: &Path) -> FixtureJson {
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let fail = |error: String, checks: Vec<CheckJson>| FixtureJson {
        name: name.clone(),
        passed: false,
        checks,
        error: Some(error),
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(format!("io: {e}"), Vec::new()),
    };
    let req = match input::parse_request(&text) {
        Ok(r) => r,
        Err(e) => return fail(format!("{}: {e}", e.code()), Vec::new()),
    };
    if req.expect.is_empty() {
        return fail("fixture has no 'expect:' lines".into(), Vec::new());
    }
    let germ = match prepare(req.clone(), None) {
        Ok(p) => p.germ,
        Err(e) => {
            let checks: Vec<CheckJson> = req
                .expect
                .iter()
                .map(|(k, v)| CheckJson {
                    key: k.clone(),
                    expected: v.clone(),
                    actual: e.code.clone(),
                    passed: k == "error" && *v == e.code,
                })
                .collect();
            let passed = checks.iter().all(|c| c.passed);
            return FixtureJson {
                name,
                passed,
                checks,
                error: (!passed).then(|| e.message.clone()),
            };
        }
    };
    let mut ev = Evaluator {
        req: &req,
        d: &germ,
        verdict: None,
    };
    let checks: Vec<CheckJson> = req
        .expect
        .iter()
        .map(|(k, v)| {
            let (actual, passed) = ev.check(k, v);
            CheckJson {
                key: k.clone(),
                expected: v.clone(),
                actual,
                passed,
            }
        })
        .collect();
    FixtureJson {
        name,
        passed: checks.iter().all(|c| c.passed),
        checks,
        error: None,
    }
}

pub fn fixture_paths(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries =
        std::fs::read_dir(dir).map_err(|e| CliError::new("io", format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "nc"))
        .collect();
    paths.sort_by_key(|p| p.file_stem().map(|s| s.to_os_string()));
    if paths.is_empty() {
        return Err(CliError::new(
            "empty-corpus",
            format!("no *.nc fixtures in {}", dir.display()),
        ));
    }
    Ok(paths)
}

/// One line per fixture, verdict keys first.
fn summary(f: &FixtureJson) -> String {
    let mut keys: Vec<&CheckJson> = f.checks.iter().collect();
    keys.sort_by_key(|c| VERDICT_KEYS.iter().position(|k| *k == c.key).unwrap_or(VERDICT_KEYS.len()));
    keys.iter()
        .map(|c| {
            if c.passed {
                format!("{}={}", c.key, c.actual)
            } else {
                format!("{}: expected {}, got {}", c.key, c.expected, c.actual)
            }
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn run(ctx: &Ctx, dir: &Path) -> Result<Output, CliError> {
    let paths = fixture_paths(dir)?;
    let fixtures: Vec<FixtureJson> = normcross::par::map(&paths, |p| run_fixture(p));
    let failed: Vec<&FixtureJson> = fixtures.iter().filter(|f| !f.passed).collect();
    let mut stderr = String::new();
    for f in &failed {
        let _ = writeln!(
            stderr,
            "fixture {} failed{}",
            f.name,
            f.error.as_ref().map(|e| format!(": {e}")).unwrap_or_default()
        );
    }
    let exit = if failed.is_empty() { EXIT_YES } else { EXIT_NO };
    let result = CorpusResult {
        passed: fixtures.len() - failed.len(),
        failed: failed.len(),
        fixtures,
    };
    let stdout = if ctx.json {
        report::to_json(&Envelope {
            schema: SCHEMA,
            command: "corpus",
            input: None,
            result: Some(&result),
            error: None,
            notes: Vec::new(),
        })
    } else {
        let rows: Vec<Vec<String>> = result
            .fixtures
            .iter()
            .map(|f| {
                let mut detail = summary(f);
                if let Some(e) = &f.error {
                    detail = if detail.is_empty() { e.clone() } else { format!("{detail}; {e}") };
                }
                vec![
                    f.name.clone(),
                    if f.passed { "PASS" } else { "FAIL" }.to_string(),
                    detail,
                ]
            })
            .collect();
        let mut s = report::table(&["fixture", "result", "checks"], &rows);
        let _ = writeln!(s, "{}/{} fixtures pass", result.passed, result.fixtures.len());
        s
    };
    Ok(Output { stdout, stderr, exit })
}
