//! The plain-text request format.
//!
//! ```text
//! # comment
//! ring: x, y, z
//! h: x*y*(x+y)*(x+y*z)
//! factors: x, y, x+y, x+y*z
//! order: degrevlex
//! form: y*(x+y+y*z), -x*(x+y+y*z), 0 | 4*h
//! field: x, y, 0
//! expect: verdict=not-normal-crossing
//! ```
//!
//! `form` and `field` may repeat. In a form denominator the symbol `h`
//! stands for the equation unless the ring has a variable of that name.

use std::sync::Arc;

use normcross::divisor::VectorField;
use normcross::logres::LogOneForm;
use normcross::poly::{MonomialOrder, Polynomial, Ring, Q};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    At {
        code: &'static str,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing '{0}:' line")]
    Missing(&'static str),
    #[error("{message}")]
    Other { code: &'static str, message: String },
}

impl InputError {
    pub fn code(&self) -> &'static str {
        match self {
            InputError::At { code, .. } | InputError::Other { code, .. } => code,
            InputError::Missing(_) => "missing-key",
        }
    }

    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            InputError::At { line, column, .. } => Some((*line, *column)),
            _ => None,
        }
    }
}

/// One `key: value` line with the byte offset where the value starts.
#[derive(Clone, Debug)]
struct Entry {
    key: String,
    value: String,
    line: usize,
    line_text: String,
    offset: usize,
}

impl Entry {
    fn error_at(&self, code: &'static str, rel: usize, message: impl Into<String>) -> InputError {
        let byte = (self.offset + rel).min(self.line_text.len());
        InputError::At {
            code,
            line: self.line,
            column: self.line_text[..byte].chars().count() + 1,
            message: message.into(),
        }
    }

    fn key_error(&self, code: &'static str, message: String) -> InputError {
        InputError::At {
            code,
            line: self.line,
            column: self.line_text.len() - self.line_text.trim_start().len() + 1,
            message,
        }
    }

    fn lib_error(&self, base: usize, e: normcross::Error) -> InputError {
        let code = crate::report::error_code(&e);
        match e {
            normcross::Error::Parse { position, .. }
            | normcross::Error::UnknownVariable { position, .. }
            | normcross::Error::ZeroDenominator { position } => {
                let message = strip_offset(&e.to_string());
                self.error_at(code, base + position, message)
            }
            other => self.error_at(code, base, other.to_string()),
        }
    }

    /// Comma-separated pieces of `value[start..end]` with their offsets.
    fn pieces(&self, start: usize, end: usize) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut at = start;
        for piece in self.value[start..end].split(',') {
            out.push((at, piece));
            at += piece.len() + 1;
        }
        out
    }
}

fn strip_offset(msg: &str) -> String {
    match msg.find(" at offset ") {
        Some(i) => {
            let rest = &msg[i + " at offset ".len()..];
            let tail = rest.trim_start_matches(|c: char| c.is_ascii_digit());
            format!("{}{}", &msg[..i], tail)
        }
        None => msg.to_string(),
    }
}

/// A parsed request, before any translation.
#[derive(Clone, Debug)]
pub struct Request {
    pub ring: Arc<Ring>,
    pub h: Polynomial,
    pub factors: Option<Vec<Polynomial>>,
    pub order: Option<MonomialOrder>,
    pub forms: Vec<LogOneForm>,
    pub fields: Vec<VectorField>,
    /// `(key, value)` pairs from `expect:` lines, in file order.
    pub expect: Vec<(String, String)>,
}

const SINGLE_KEYS: [&str; 4] = ["ring", "h", "factors", "order"];

pub fn parse_request(text: &str) -> Result<Request, InputError> {
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let colon = line.find(':').ok_or_else(|| InputError::At {
            code: "syntax",
            line: k + 1,
            column: line.len() - line.trim_start().len() + 1,
            message: "expected 'key: value'".into(),
        })?;
        entries.push(Entry {
            key: line[..colon].trim().to_string(),
            value: line[colon + 1..].to_string(),
            line: k + 1,
            line_text: raw.to_string(),
            offset: colon + 1,
        });
    }

    for (i, e) in entries.iter().enumerate() {
        let known = SINGLE_KEYS.contains(&e.key.as_str()) || ["form", "field", "expect"].contains(&e.key.as_str());
        if !known {
            return Err(e.key_error("unknown-key", format!("unknown key '{}'", e.key)));
        }
        if SINGLE_KEYS.contains(&e.key.as_str()) && entries[..i].iter().any(|p| p.key == e.key) {
            return Err(e.key_error("duplicate-key", format!("'{}' given twice", e.key)));
        }
    }
    let find = |key: &str| entries.iter().find(|e| e.key == key);

    let ring_entry = find("ring").ok_or(InputError::Missing("ring"))?;
    let names: Vec<&str> = ring_entry.value.split(',').map(str::trim).collect();
    let ring = Ring::new(&names).map_err(|e| ring_entry.lib_error(0, e))?;

    let poly = |e: &Entry, at: usize, text: &str| -> Result<Polynomial, InputError> {
        if text.trim().is_empty() {
            return Err(e.error_at("syntax", at, "empty polynomial"));
        }
        ring.parse(text).map_err(|err| e.lib_error(at, err))
    };

    let h_entry = find("h").ok_or(InputError::Missing("h"))?;
    let h = poly(h_entry, 0, &h_entry.value)?;

    let factors = match find("factors") {
        Some(e) => Some(
            e.pieces(0, e.value.len())
                .into_iter()
                .map(|(at, s)| poly(e, at, s))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        None => None,
    };

    let order = match find("order") {
        Some(e) => Some(
            e.value
                .trim()
                .parse::<MonomialOrder>()
                .map_err(|err| e.lib_error(0, err))?,
        ),
        None => None,
    };

    let n = ring.nvars();
    let mut forms = Vec::new();
    let mut fields = Vec::new();
    let mut expect = Vec::new();
    for e in &entries {
        match e.key.as_str() {
            "form" => {
                let bar = e
                    .value
                    .find('|')
                    .ok_or_else(|| e.error_at("syntax", e.value.len(), "expected '| denominator'"))?;
                let numerators = e
                    .pieces(0, bar)
                    .into_iter()
                    .map(|(at, s)| poly(e, at, s))
                    .collect::<Result<Vec<_>, _>>()?;
                let den_text = &e.value[bar + 1..];
                let den = if ring.names().iter().any(|v| v == "h") {
                    poly(e, bar + 1, den_text)?
                } else {
                    let ext = ring.with_leading_var("h");
                    let p = ext.parse(den_text).map_err(|err| e.lib_error(bar + 1, err))?;
                    let images: Vec<Polynomial> = std::iter::once(h.clone()).chain(ring.vars()).collect();
                    p.substitute(&images)
                };
                let form = LogOneForm::new(numerators, den).map_err(|err| e.lib_error(0, err))?;
                forms.push(form);
            }
            "field" => {
                let coeffs = e
                    .pieces(0, e.value.len())
                    .into_iter()
                    .map(|(at, s)| poly(e, at, s))
                    .collect::<Result<Vec<_>, _>>()?;
                if coeffs.len() != n {
                    return Err(e.error_at(
                        "invalid-input",
                        0,
                        format!("a vector field needs {n} coefficients, got {}", coeffs.len()),
                    ));
                }
                fields.push(VectorField::new(coeffs));
            }
            "expect" => {
                let eq = e
                    .value
                    .find('=')
                    .ok_or_else(|| e.error_at("syntax", 0, "expected 'expect: key=value'"))?;
                expect.push((e.value[..eq].trim().to_string(), e.value[eq + 1..].trim().to_string()));
            }
            _ => {}
        }
    }

    Ok(Request {
        ring,
        h,
        factors,
        order,
        forms,
        fields,
        expect,
    })
}

/// Parses `a1,...,an` as rational coordinates of a point.
pub fn parse_point(text: &str, ring: &Arc<Ring>) -> Result<Vec<Q>, InputError> {
    let bad = |message: String| InputError::Other {
        code: "invalid-translation",
        message,
    };
    let point = text
        .split(',')
        .map(|s| {
            let p = ring
                .parse(s)
                .map_err(|e| bad(format!("'{}': {e}", s.trim())))?;
            if p.is_constant() {
                Ok(p.constant_term())
            } else {
                Err(bad(format!("'{}' is not a rational number", s.trim())))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    if point.len() != ring.nvars() {
        return Err(bad(format!(
            "translation needs {} coordinates, got {}",
            ring.nvars(),
            point.len()
        )));
    }
    Ok(point)
}

impl Request {
    /// Moves `point` to the origin in every polynomial of the request.
    pub fn translate(&self, point: &[Q]) -> Request {
        let n = self.ring.nvars();
        let images: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::var(n, i) + Polynomial::constant(n, point[i].clone()))
            .collect();
        let sub = |p: &Polynomial| p.substitute(&images);
        Request {
            ring: self.ring.clone(),
            h: sub(&self.h),
            factors: self.factors.as_ref().map(|fs| fs.iter().map(sub).collect()),
            order: self.order,
            forms: self
                .forms
                .iter()
                .map(|w| {
                    LogOneForm::new(w.numerators().iter().map(sub).collect(), sub(w.denominator()))
                        .expect("substitution keeps the shape")
                })
                .collect(),
            fields: self
                .fields
                .iter()
                .map(|f| VectorField::new(f.coeffs().iter().map(sub).collect()))
                .collect(),
            expect: self.expect.clone(),
        }
    }
}
