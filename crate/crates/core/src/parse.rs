//! Expression grammar shared by the library and the command line.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (('*' | '.' | '/' | <juxtaposition>) power)*
//! power  := atom ['^' ['-'] int]
//! atom   := int | 'q' | symbol | '(' expr ')'
//! symbol := w1..w4 | Fm Fn Fb Em En Eb Km Kn Kb | d_i K_i z_i (i = 1..4)
//! ```
//!
//! Products are never reordered at parse time. Division is only by scalars.

use std::fmt;

use thiserror::Error;

use crate::aq::AqElement;
use crate::qcalc::QOperator;
use crate::ring::{LaurentPoly, RatFunc};
use crate::uq::{w_embed, Generator, UqElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("cannot combine {left} and {right} at {pos}")]
    MixedKinds {
        pos: usize,
        left: &'static str,
        right: &'static str,
    },
    #[error("coefficient {0} is not a Laurent polynomial")]
    NonLaurent(String),
    #[error("negative power of a non-invertible value at {pos}")]
    NotInvertible { pos: usize },
    #[error("division by zero or by a non-scalar at {pos}")]
    BadDivisor { pos: usize },
}

/// A parsed value, in the module its symbols belong to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(RatFunc),
    Aq(AqElement),
    Uq(UqElement),
    Op(QOperator),
}

impl Expr {
    pub fn kind(&self) -> &'static str {
        match self {
            Expr::Scalar(_) => "scalar",
            Expr::Aq(_) => "w-algebra element",
            Expr::Uq(_) => "U_q element",
            Expr::Op(_) => "operator",
        }
    }

    /// Zero of any kind; zeros all print as `0`.
    pub fn is_zero(&self) -> bool {
        match self {
            Expr::Scalar(c) => c.is_zero(),
            Expr::Aq(a) => a.is_zero(),
            Expr::Uq(u) => u.is_zero(),
            Expr::Op(o) => o.is_zero(),
        }
    }

    /// Equality of values, lifting scalars and `w`-elements as arithmetic does.
    /// `Km^-1*Km` and `1` are the same value but different variants.
    pub fn same_value(&self, other: &Expr) -> bool {
        add(self.clone(), negate(other.clone()), 0).is_ok_and(|d| d.is_zero())
    }

    /// Product in the module both sides belong to; scalars act on either side.
    pub fn mul(&self, other: &Expr) -> Result<Expr, ParseError> {
        mul(self.clone(), other.clone(), 0)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "{c}"),
            Expr::Aq(a) => write!(f, "{a}"),
            Expr::Uq(u) => write!(f, "{u}"),
            Expr::Op(o) => write!(f, "{o}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut n: u64 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(chars[i].1.to_digit(10).unwrap() as u64))
                    .ok_or_else(|| ParseError::Syntax {
                        pos,
                        msg: "integer literal too large".into(),
                    })?;
                i += 1;
            }
            out.push((pos, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                s.push(chars[i].1);
                i += 1;
            }
            out.push((pos, Tok::Ident(s)));
        } else if "+-*./^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = negate(acc);
        }
        loop {
            let pos = self.pos();
            if self.eat('+') {
                let rhs = self.term()?;
                acc = add(acc, rhs, pos)?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = add(acc, negate(rhs), pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
        )
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.power()?;
        loop {
            let pos = self.pos();
            if self.eat('*') || self.eat('.') {
                let rhs = self.power()?;
                acc = mul(acc, rhs, pos)?;
            } else if self.eat('/') {
                let rhs = self.power()?;
                acc = div(acc, rhs, pos)?;
            } else if self.starts_atom() {
                let rhs = self.power()?;
                acc = mul(acc, rhs, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return Err(ParseError::Syntax {
                pos: self.pos(),
                msg: "expected an integer exponent".into(),
            });
        };
        self.at += 1;
        let n = i64::try_from(n).map_err(|_| ParseError::Syntax {
            pos,
            msg: "exponent too large".into(),
        })?;
        pow(base, if neg { -n } else { n }, pos)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let n = i64::try_from(n).map_err(|_| ParseError::Syntax {
                    pos,
                    msg: "integer literal too large".into(),
                })?;
                Ok(Expr::Scalar(RatFunc::from_i64(n)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                symbol(&name, pos)
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(ParseError::Syntax {
                        pos: self.pos(),
                        msg: "expected `)`".into(),
                    });
                }
                Ok(e)
            }
            Some(t) => Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected {t:?}"),
            }),
            None => Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

fn symbol(name: &str, pos: usize) -> Result<Expr, ParseError> {
    let unknown = || ParseError::UnknownSymbol {
        pos,
        name: name.to_string(),
    };
    if name == "q" {
        return Ok(Expr::Scalar(RatFunc::q_pow(1)));
    }
    if let Some(i) = name.strip_prefix('w') {
        return match i {
            "1" | "2" | "3" | "4" => Ok(Expr::Aq(AqElement::w(i.parse().unwrap()))),
            _ => Err(unknown()),
        };
    }
    if let Some((head, axis)) = name.split_once('_') {
        let i: usize = match axis {
            "1" | "2" | "3" | "4" => axis.parse().unwrap(),
            _ => return Err(unknown()),
        };
        return match head {
            "d" => Ok(Expr::Op(QOperator::d(i))),
            "K" => Ok(Expr::Op(QOperator::k(i, 1))),
            "z" => Ok(Expr::Op(QOperator::z(i))),
            _ => Err(unknown()),
        };
    }
    name.parse::<Generator>()
        .map(|g| Expr::Uq(g.to_element()))
        .map_err(|_| unknown())
}

fn laurent(c: &RatFunc) -> Result<LaurentPoly, ParseError> {
    c.to_laurent()
        .ok_or_else(|| ParseError::NonLaurent(c.to_string()))
}

fn negate(e: Expr) -> Expr {
    match e {
        Expr::Scalar(c) => Expr::Scalar(-c),
        Expr::Aq(a) => Expr::Aq(-a),
        Expr::Uq(u) => Expr::Uq(-u),
        Expr::Op(o) => Expr::Op(-o),
    }
}

/// Lifts a scalar into the kind of `like`.
fn lift(c: RatFunc, like: &Expr) -> Result<Expr, ParseError> {
    Ok(match like {
        Expr::Scalar(_) => Expr::Scalar(c),
        Expr::Aq(_) => Expr::Aq(AqElement::scalar(laurent(&c)?)),
        Expr::Uq(_) => Expr::Uq(UqElement::scalar(c)),
        Expr::Op(_) => Expr::Op(QOperator::scalar(laurent(&c)?)),
    })
}

/// `w`-algebra values meeting `U_q` values are embedded into `U_q`.
fn unify(a: Expr, b: Expr) -> (Expr, Expr) {
    match (a, b) {
        (Expr::Aq(x), b @ Expr::Uq(_)) => (Expr::Uq(w_embed(&x)), b),
        (a @ Expr::Uq(_), Expr::Aq(y)) => (a, Expr::Uq(w_embed(&y))),
        other => other,
    }
}

fn add(a: Expr, b: Expr, pos: usize) -> Result<Expr, ParseError> {
    let (a, b) = unify(a, b);
    let (a, b) = match (a, b) {
        (Expr::Scalar(c), b) if !matches!(b, Expr::Scalar(_)) => (lift(c, &b)?, b),
        (a, Expr::Scalar(c)) if !matches!(a, Expr::Scalar(_)) => {
            let b = lift(c, &a)?;
            (a, b)
        }
        other => other,
    };
    Ok(match (a, b) {
        (Expr::Scalar(x), Expr::Scalar(y)) => Expr::Scalar(x + y),
        (Expr::Aq(x), Expr::Aq(y)) => Expr::Aq(x + y),
        (Expr::Uq(x), Expr::Uq(y)) => Expr::Uq(x + y),
        (Expr::Op(x), Expr::Op(y)) => Expr::Op(x + y),
        (a, b) => {
            return Err(ParseError::MixedKinds {
                pos,
                left: a.kind(),
                right: b.kind(),
            })
        }
    })
}

fn scale(c: &RatFunc, e: Expr) -> Result<Expr, ParseError> {
    Ok(match e {
        Expr::Scalar(x) => Expr::Scalar(c * &x),
        Expr::Aq(a) => Expr::Aq(a.scale(&laurent(c)?)),
        Expr::Uq(u) => Expr::Uq(u.scale(c)),
        Expr::Op(o) => Expr::Op(o.scale(&laurent(c)?)),
    })
}

fn mul(a: Expr, b: Expr, pos: usize) -> Result<Expr, ParseError> {
    match unify(a, b) {
        (Expr::Scalar(c), e) | (e, Expr::Scalar(c)) => scale(&c, e),
        (Expr::Aq(x), Expr::Aq(y)) => Ok(Expr::Aq(&x * &y)),
        (Expr::Uq(x), Expr::Uq(y)) => Ok(Expr::Uq(&x * &y)),
        (Expr::Op(x), Expr::Op(y)) => Ok(Expr::Op(x.compose(&y))),
        (a, b) => Err(ParseError::MixedKinds {
            pos,
            left: a.kind(),
            right: b.kind(),
        }),
    }
}

fn div(a: Expr, b: Expr, pos: usize) -> Result<Expr, ParseError> {
    match b {
        Expr::Scalar(c) if !c.is_zero() => scale(&c.inv().unwrap(), a),
        _ => Err(ParseError::BadDivisor { pos }),
    }
}

fn pow(base: Expr, n: i64, pos: usize) -> Result<Expr, ParseError> {
    if n >= 0 {
        let n = u32::try_from(n).map_err(|_| ParseError::Syntax {
            pos,
            msg: "exponent too large".into(),
        })?;
        return Ok(match base {
            Expr::Scalar(c) => Expr::Scalar((0..n).fold(RatFunc::one(), |acc, _| &acc * &c)),
            Expr::Aq(a) => Expr::Aq(a.pow(n)),
            Expr::Uq(u) => Expr::Uq(u.pow(n)),
            Expr::Op(o) => Expr::Op((0..n).fold(QOperator::identity(), |acc, _| acc.compose(&o))),
        });
    }
    let inv = invert(&base).ok_or(ParseError::NotInvertible { pos })?;
    pow(inv, -n, pos)
}

/// Inverse of a scalar or of a single pure-`K` term.
fn invert(e: &Expr) -> Option<Expr> {
    match e {
        Expr::Scalar(c) => c.inv().ok().map(Expr::Scalar),
        Expr::Uq(u) => {
            let mut it = u.terms();
            let (m, c) = it.next()?;
            if it.next().is_some() || !m.f.is_empty() || !m.e.is_empty() {
                return None;
            }
            let mut m = m.clone();
            m.k = m.k.map(|x| -x);
            Some(Expr::Uq(UqElement::term(m, c.inv().ok()?)))
        }
        Expr::Op(o) => {
            let mut it = o.terms();
            let (k, c) = it.next()?;
            if it.next().is_some() || k.z.degree() != 0 || k.d.degree() != 0 || !c.is_unit() {
                return None;
            }
            let mut k = *k;
            k.k = k.k.map(|x| -x);
            let ci = crate::ring::divide_exact(&LaurentPoly::one(), c).ok()?;
            Some(Expr::Op(QOperator::term(k, ci)))
        }
        Expr::Aq(_) => None,
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::Syntax {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

/// Parses a scalar that must be a Laurent polynomial.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    match parse_expression(text)? {
        Expr::Scalar(c) => laurent(&c),
        other => Err(ParseError::MixedKinds {
            pos: 0,
            left: "scalar",
            right: other.kind(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::wave_operator;
    use crate::uq::w_embed;

    #[test]
    fn spec_samples() {
        let Expr::Aq(a) = parse_expression("w4*w1").unwrap() else {
            panic!()
        };
        assert_eq!(a, &AqElement::w(4) * &AqElement::w(1));
        let Expr::Uq(u) = parse_expression("Fn*Fb - (q)*Fb*Fn").unwrap() else {
            panic!()
        };
        assert_eq!(u, w_embed(&AqElement::w(3)));
        let Expr::Op(o) = parse_expression("K_2 K_3 d_1 d_4 - (q) d_2 d_3").unwrap() else {
            panic!()
        };
        assert_eq!(o, wave_operator());
    }

    #[test]
    fn laurent_text() {
        let p = parse_laurent("q^2 + 5 - 3/2*q^-1").unwrap();
        assert_eq!(p.to_string(), "q^2 + 5 - 3/2*q^-1");
        assert!(parse_laurent("1/(q + 1)").is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_expression("w1 + d_1"),
            Err(ParseError::MixedKinds { .. })
        ));
        assert!(matches!(
            parse_expression("w5"),
            Err(ParseError::UnknownSymbol { .. })
        ));
        assert!(matches!(
            parse_expression("w1 * (w2"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("w1^-1"),
            Err(ParseError::NotInvertible { .. })
        ));
        assert!(matches!(
            parse_expression("w1 / w2"),
            Err(ParseError::BadDivisor { .. })
        ));
        assert!(matches!(
            parse_expression("d_1 $"),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
    }

    #[test]
    fn w_symbols_embed_next_to_uq() {
        let e = parse_expression("Fm*w2 - (q^-1)*w2*Fm").unwrap();
        assert_eq!(e, Expr::Uq(UqElement::zero()));
        let e = parse_expression("Fn*Fb - (q)*Fb*Fn - w3").unwrap();
        assert_eq!(e, Expr::Uq(UqElement::zero()));
    }

    #[test]
    fn k_inverses() {
        let Expr::Uq(u) = parse_expression("Km^-1 * Km").unwrap() else {
            panic!()
        };
        assert_eq!(u, UqElement::one());
        let Expr::Op(o) = parse_expression("K_2^-1.K_2").unwrap() else {
            panic!()
        };
        assert_eq!(o, QOperator::identity());
    }
}
