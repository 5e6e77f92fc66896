//! Input language: identifiers, `+ - * ^`, integer exponents, rational
//! literals `a/b` and parentheses. Whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < bytes.len() {
                    let ch = bytes[i] as char;
                    if ch.is_ascii_alphanumeric() || ch == '_' || ch == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    let e: u32 = match u32::try_from(&e) {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            if d.is_zero() {
                                return Err(Error::ZeroDenominator {
                                    position: self.offset(),
                                });
                            }
                            self.pos += 1;
                            Ok(Polynomial::constant(self.nvars(), Q::new(n, d)))
                        }
                        _ => self.err("expected an integer denominator"),
                    }
                } else {
                    Ok(Polynomial::constant(self.nvars(), Q::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.names.iter().position(|v| *v == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.nvars(), i))
                }
                None => Err(Error::UnknownVariable {
                    name,
                    position: self.offset(),
                }),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(Tok::Slash) => self.err("'/' is only allowed inside rational literals"),
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        names,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(poly)
}

fn format_coefficient(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn format_polynomial(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || m.is_one() {
            factors.push(format_coefficient(&abs));
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[i].clone()),
                _ => factors.push(format!("{}^{}", names[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::poly::Ring;
    use crate::Error;

    #[test]
    fn parses_example_polynomials() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let h = r.parse("y^5+z^3+x*y^3*z").unwrap();
        assert_eq!(h.len(), 3);
        assert_eq!(r.format(&h), "y^5 + x*y^3*z + z^3");
        assert!(r.parse("1/2*x - 1/2*x").unwrap().is_zero());
    }

    #[test]
    fn precedence() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(r.parse("-x^2").unwrap(), -r.parse("x*x").unwrap());
        assert_eq!(r.parse("2*(x+y)^2").unwrap(), r.parse("2*x^2+4*x*y+2*y^2").unwrap());
        assert_eq!(r.parse("x - -y").unwrap(), r.parse("x+y").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::new(["x", "y"]).unwrap();
        match r.parse("x + w") {
            Err(Error::UnknownVariable { name, position }) => {
                assert_eq!(name, "w");
                assert_eq!(position, 4);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(r.parse("1/0*x"), Err(Error::ZeroDenominator { position: 2 })));
        assert!(matches!(r.parse("x +"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(r.parse("(x"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x/y"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x $ y"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn printing_is_canonical() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let p = r.parse("-1/2*x*y + 3 - z^2*x").unwrap();
        assert_eq!(r.format(&p), "-x*z^2 - 1/2*x*y + 3");
        assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
    }
}
