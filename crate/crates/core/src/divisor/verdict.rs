use std::time::{Duration, Instant};

use serde::Serialize;

use super::{DivisorGerm, FreenessReport};
use crate::ideal::{Radicality, RadicalityReport};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepOutcome {
    Passed,
    Failed,
    /// The step ran but could not reach a decision.
    Inconclusive,
    /// The step does not apply to this germ.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Final {
    NormalCrossing,
    NotNormalCrossing,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UndecidedReason {
    /// Free with radical Jacobian ideal, but smoothness of the normalization
    /// could not be established.
    NeedsNormalization,
    /// The radicality test neither proved nor refuted radicality.
    RadicalityInconclusive,
}

/// How a witness value is to be read back.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// A polynomial in the canonical printer format.
    Polynomial,
    /// A parenthesized, comma-separated list of polynomials.
    Vector,
    Integer,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub kind: WitnessKind,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StepRecord {
    pub name: &'static str,
    pub outcome: StepOutcome,
    pub clause: String,
    pub witnesses: Vec<Witness>,
    /// Wall time spent on this step; not part of the serialized record.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct NCVerdict {
    pub steps: Vec<StepRecord>,
    #[serde(rename = "final")]
    pub final_verdict: Final,
    pub failing_step: Option<&'static str>,
    pub undecided_reason: Option<UndecidedReason>,
    /// `m` in the local model `x_1 ⋯ x_m = 0` when normal crossing.
    pub multiplicity: Option<usize>,
    #[serde(skip)]
    pub freeness: Option<FreenessReport>,
    #[serde(skip)]
    pub radicality: Option<RadicalityReport>,
}

impl NCVerdict {
    pub fn is_normal_crossing(&self) -> bool {
        self.final_verdict == Final::NormalCrossing
    }

    pub fn step(&self, name: &str) -> Option<&StepRecord> {
        self.steps.iter().find(|s| s.name == name)
    }
}

struct Pipeline<'a> {
    d: &'a DivisorGerm,
    steps: Vec<StepRecord>,
    freeness: Option<FreenessReport>,
    radicality: Option<RadicalityReport>,
    clock: Instant,
}

impl Pipeline<'_> {
    fn record(&mut self, name: &'static str, outcome: StepOutcome, clause: impl Into<String>, witnesses: Vec<Witness>) {
        self.steps.push(StepRecord {
            name,
            outcome,
            clause: clause.into(),
            witnesses,
            elapsed: self.clock.elapsed(),
        });
        self.clock = Instant::now();
    }

    fn w(&self, label: &str, p: &crate::poly::Polynomial) -> Witness {
        Witness {
            label: label.into(),
            kind: WitnessKind::Polynomial,
            value: self.d.format(p),
        }
    }

    fn finish(
        self,
        final_verdict: Final,
        failing_step: Option<&'static str>,
        undecided_reason: Option<UndecidedReason>,
        multiplicity: Option<usize>,
    ) -> NCVerdict {
        NCVerdict {
            steps: self.steps,
            final_verdict,
            failing_step,
            undecided_reason,
            multiplicity,
            freeness: self.freeness,
            radicality: self.radicality,
        }
    }
}

fn text(label: &str, value: impl ToString) -> Witness {
    Witness {
        label: label.into(),
        kind: WitnessKind::Text,
        value: value.to_string(),
    }
}

fn integer(label: &str, value: impl Into<i64>) -> Witness {
    Witness {
        label: label.into(),
        kind: WitnessKind::Integer,
        value: value.into().to_string(),
    }
}

pub(super) fn decide(d: &DivisorGerm) -> Result<NCVerdict> {
    let mut p = Pipeline {
        d,
        steps: Vec::new(),
        freeness: None,
        radicality: None,
        clock: Instant::now(),
    };
    let n = d.nvars();

    d.ensure_reduced()?;
    let red = d.reducedness()?;
    p.record(
        "reduced",
        StepOutcome::Passed,
        "h is reduced: its singular locus has codimension at least 2",
        vec![integer("singular-locus-dimension", red.singular_dimension)],
    );

    if d.is_smooth_at_origin() {
        let i = d.partials().iter().position(|q| !q.vanishes_at_origin()).unwrap_or(0);
        let witness = p.w("nonvanishing-partial", &d.partials()[i]);
        p.record("smooth", StepOutcome::Passed, "dh(0) is nonzero, so D is smooth at the origin", vec![witness]);
        return Ok(p.finish(Final::NormalCrossing, None, None, Some(1)));
    }
    p.record("smooth", StepOutcome::Failed, "dh(0) = 0, so the origin is a singular point of D", vec![]);

    if n == 2 {
        let rep = d.singular_locus_ideal().is_radical(None);
        if rep.verdict == Radicality::Radical {
            p.record(
                "dim-two",
                StepOutcome::Passed,
                "plane curve germs are free, and a radical zero-dimensional singular locus ideal is the maximal ideal, so D is a node",
                vec![],
            );
            p.radicality = Some(rep);
            return Ok(p.finish(Final::NormalCrossing, None, None, Some(2)));
        }
        p.record(
            "dim-two",
            StepOutcome::NotApplicable,
            "singular locus ideal of the plane curve is not known to be radical",
            vec![],
        );
    }

    let free = d.is_free_at_origin()?;
    if !free.free {
        let mut ws = vec![integer("mu", free.mu as i64)];
        for (k, f) in free.generators.iter().enumerate() {
            let comps: Vec<String> = f.coeffs().iter().map(|c| d.format(c)).collect();
            ws.push(Witness {
                label: format!("generator-{k}"),
                kind: WitnessKind::Vector,
                value: format!("({})", comps.join(", ")),
            });
        }
        p.record(
            "free",
            StepOutcome::Failed,
            format!("Der(log D) needs {} > n = {n} generators at the origin", free.mu),
            ws,
        );
        p.freeness = Some(free);
        return Ok(p.finish(Final::NotNormalCrossing, Some("free"), None, None));
    }
    let mut ws = Vec::new();
    if let Some(det) = &free.determinant {
        ws.push(p.w("determinant", det));
    }
    if let Some(u) = &free.unit {
        ws.push(p.w("unit", u));
    }
    p.record(
        "free",
        StepOutcome::Passed,
        "n logarithmic fields whose coefficient determinant is a unit times h",
        ws,
    );

    let rad = d.is_radical_jacobian(Some(&free))?;
    p.freeness = Some(free);
    match rad.verdict {
        Radicality::NotRadical => {
            let mut ws = Vec::new();
            if let Some(c) = &rad.witness {
                ws.push(p.w("element-of-radical", c));
            }
            if let Some(k) = rad.exponent {
                ws.push(integer("exponent", k));
            }
            p.record(
                "radical-jacobian",
                StepOutcome::Failed,
                "the Jacobian ideal is not radical: the witness lies in its radical but not in the ideal",
                ws,
            );
            p.radicality = Some(rad);
            return Ok(p.finish(Final::NotNormalCrossing, Some("radical-jacobian"), None, None));
        }
        Radicality::Inconclusive => {
            let ws = rad.notes.iter().map(|s| text("note", s)).collect();
            p.record(
                "radical-jacobian",
                StepOutcome::Inconclusive,
                "radicality of the Jacobian ideal could not be decided",
                ws,
            );
            p.radicality = Some(rad);
            return Ok(p.finish(
                Final::Undecided,
                None,
                Some(UndecidedReason::RadicalityInconclusive),
                None,
            ));
        }
        Radicality::Radical => {
            let ws = vec![text("method", rad.method.name())];
            p.record(
                "radical-jacobian",
                StepOutcome::Passed,
                "the Jacobian ideal is radical and contains h",
                ws,
            );
            p.radicality = Some(rad);
        }
    }

    match d.gorenstein_shortcut()? {
        Some(true) => {
            p.record(
                "gorenstein",
                StepOutcome::Passed,
                "the singular locus has dimension n-2 and J_h is generated by a regular sequence of length 2",
                vec![integer("mu", 2)],
            );
            return Ok(p.finish(Final::NormalCrossing, None, None, Some(2)));
        }
        _ => p.record(
            "gorenstein",
            StepOutcome::NotApplicable,
            "J_h does not have two generators at the origin",
            vec![],
        ),
    }

    if let Some(fs) = d.local_factors() {
        let comps = d.component_checks()?;
        if comps.all_smooth() {
            let ws = fs.iter().map(|f| p.w("component", f)).collect();
            p.record(
                "smooth-components",
                StepOutcome::Passed,
                "free with radical Jacobian ideal and every component smooth",
                ws,
            );
            return Ok(p.finish(Final::NormalCrossing, None, None, Some(fs.len())));
        }
        let ws = comps
            .factors
            .iter()
            .filter(|f| !f.smooth)
            .map(|f| Witness {
                label: "singular-component".into(),
                kind: WitnessKind::Polynomial,
                value: f.factor.clone(),
            })
            .collect();
        p.record(
            "smooth-components",
            StepOutcome::Inconclusive,
            "some supplied component is singular at the origin",
            ws,
        );
    } else {
        p.record(
            "smooth-components",
            StepOutcome::NotApplicable,
            "no factorization supplied",
            vec![],
        );
    }

    p.record(
        "normalization",
        StepOutcome::Inconclusive,
        "free with radical Jacobian ideal; normal crossing also needs the normalization of D to be smooth, which is not checked",
        vec![text("undischarged-hypothesis", "smooth normalization")],
    );
    Ok(p.finish(Final::Undecided, None, Some(UndecidedReason::NeedsNormalization), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn run(names: &[&str], h: &str, f: Option<&[&str]>) -> NCVerdict {
        let r = Ring::new(names.iter().copied()).unwrap();
        DivisorGerm::parse(&r, h, f).unwrap().decide_normal_crossing().unwrap()
    }

    #[test]
    fn small_verdicts() {
        let v = run(&["x", "y"], "x*y", None);
        assert_eq!(v.final_verdict, Final::NormalCrossing);
        assert_eq!(v.multiplicity, Some(2));

        let v = run(&["x", "y"], "x^3 - y^2", None);
        assert_eq!(v.final_verdict, Final::NotNormalCrossing);
        assert_eq!(v.failing_step, Some("radical-jacobian"));

        let v = run(&["x", "y", "z"], "x + y^2", None);
        assert_eq!(v.multiplicity, Some(1));

        let v = run(&["x", "y", "z"], "x*y", None);
        assert_eq!(v.final_verdict, Final::NormalCrossing);
        assert_eq!(v.step("gorenstein").unwrap().outcome, StepOutcome::Passed);

        let v = run(&["x", "y", "z"], "z^2 - x*y", None);
        assert_eq!(v.failing_step, Some("free"));
    }

    #[test]
    fn factors_and_undecided() {
        let v = run(&["x", "y", "z"], "x*y*z", Some(&["x", "y", "z"]));
        assert_eq!(v.final_verdict, Final::NormalCrossing);
        assert_eq!(v.multiplicity, Some(3));

        let v = run(&["x", "y", "z"], "x*y*z", None);
        assert_eq!(v.final_verdict, Final::Undecided);
        assert_eq!(v.undecided_reason, Some(UndecidedReason::NeedsNormalization));
    }
}
