use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::Error;

/// Monomial orders. `Ds` is the local negative degree reverse lexicographic
/// order, the only one where `1` is the largest monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Ds,
    /// Block order: the first `k` variables (degrevlex among themselves)
    /// dominate the remaining ones (degrevlex).
    Elimination(usize),
}

fn revlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    // Larger is the one whose last differing exponent is smaller.
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex_tiebreak(a, b))
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Ds => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                db.cmp(&da).then_with(|| revlex_tiebreak(a, b))
            }
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn is_global(&self) -> bool {
        !self.is_local()
    }

    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::Ds)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::DegRevLex => f.write_str("degrevlex"),
            MonomialOrder::Ds => f.write_str("ds"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "lex" | "lp" => Ok(MonomialOrder::Lex),
            "degrevlex" | "dp" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "ds" | "local" | "negdegrevlex" => Ok(MonomialOrder::Ds),
            other => {
                if let Some(k) = other
                    .strip_prefix("elim(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.parse().ok())
                {
                    Ok(MonomialOrder::Elimination(k))
                } else {
                    Err(Error::UnknownOrder(other.to_string()))
                }
            }
        }
    }
}

/// Orders on terms `m·e_c` of a free module. Lower component index counts as larger.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Position over term.
    Pot(MonomialOrder),
    /// Term over position.
    Top(MonomialOrder),
}

impl ModuleOrder {
    pub fn base(&self) -> MonomialOrder {
        match *self {
            ModuleOrder::Pot(o) | ModuleOrder::Top(o) => o,
        }
    }

    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match *self {
            ModuleOrder::Pot(o) => b.1.cmp(&a.1).then_with(|| o.cmp(a.0, b.0)),
            ModuleOrder::Top(o) => o.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1)),
        }
    }

    pub fn is_local(&self) -> bool {
        self.base().is_local()
    }
}

impl From<MonomialOrder> for ModuleOrder {
    fn from(o: MonomialOrder) -> Self {
        ModuleOrder::Pot(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn global_and_local_extremes() {
        let one = m(&[0, 0]);
        let x = m(&[1, 0]);
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::Elimination(1),
        ] {
            assert_eq!(o.cmp(&one, &x), Ordering::Less, "{o}");
        }
        assert_eq!(MonomialOrder::Ds.cmp(&one, &x), Ordering::Greater);
    }

    #[test]
    fn degrevlex_tiebreak() {
        // x^2 > xy > y^2 > xz > yz > z^2 in degrevlex
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(MonomialOrder::DegRevLex.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn elimination_prefers_block() {
        let t = m(&[1, 0, 0]);
        let big = m(&[0, 5, 5]);
        assert_eq!(MonomialOrder::Elimination(1).cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn parse_orders() {
        assert_eq!("ds".parse::<MonomialOrder>().unwrap(), MonomialOrder::Ds);
        assert_eq!(
            "elim(2)".parse::<MonomialOrder>().unwrap(),
            MonomialOrder::Elimination(2)
        );
        assert!("foo".parse::<MonomialOrder>().is_err());
    }
}
