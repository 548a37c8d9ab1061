//! Text syntax for operator expressions.
//!
//! ```text
//! sum     := ['-'] product (('+' | '-') product)*
//! product := power (['*'] power)*
//! power   := primary ['^' exponent]
//! exponent:= ['-'] INT | '(l)'
//! primary := NUMBER | NAME | '(' sum ')' | '[' sum ']'
//! ```
//!
//! Juxtaposition and `*` both mean composition. `NUMBER` is `p` or `p/q`.
//! Generator names (indices 1-based): `s1`, `s1_3` (transposition),
//! `T1`, `X1`, `Y1`, `y1`, `pi`, `pi-`, `D1` (rational Dunkl), `D1^(l)` or `Dl1`,
//! `Dtrig1`, `DO1`, `sigma1`, `omega`, `tau1`. Parameters: `q`, `t` (= `tt^2`),
//! `tt` or `𝐭`, `hbar` or `ħ`, `k`, `Z1`, `z1`, `c0`, `zeta`.
//! Negative powers are allowed on single words whose letters have inverses
//! and on scalars.

use cyclodaha_core::Rational;

use crate::coef::{Coef, Param};
use crate::error::OpsError;
use crate::expr::OperatorExpr;
use crate::gen::Gen;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Name(String),
    Sym(char),
    /// `pi-` written without a space.
    PiMinus,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, OpsError> {
    let cs: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < cs.len() {
        let (pos, c) = cs[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < cs.len() && cs[k].1.is_ascii_digit() {
                k += 1;
            }
            let mut text: String = cs[start..k].iter().map(|x| x.1).collect();
            if k + 1 < cs.len() && cs[k].1 == '/' && cs[k + 1].1.is_ascii_digit() {
                text.push('/');
                k += 1;
                while k < cs.len() && cs[k].1.is_ascii_digit() {
                    text.push(cs[k].1);
                    k += 1;
                }
            }
            let r: Rational = text.parse().map_err(|_| OpsError::Parse { pos, msg: format!("bad number {text}") })?;
            out.push((pos, Tok::Num(r)));
        } else if c.is_alphabetic() {
            let start = k;
            while k < cs.len() && (cs[k].1.is_alphanumeric() || cs[k].1 == '_') {
                k += 1;
            }
            let name: String = cs[start..k].iter().map(|x| x.1).collect();
            if name == "pi" && k < cs.len() && cs[k].1 == '-' {
                k += 1;
                out.push((pos, Tok::PiMinus));
            } else {
                out.push((pos, Tok::Name(name)));
            }
        } else if "+-*^()[]".contains(c) {
            out.push((pos, Tok::Sym(c)));
            k += 1;
        } else {
            return Err(OpsError::Parse { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

fn split_index(name: &str) -> Option<(&str, &str)> {
    let at = name.find(|c: char| c.is_ascii_digit())?;
    Some((&name[..at], &name[at..]))
}

/// A name resolves to a generator, a parameter, or a Dunkl index eligible for `^(l)`.
enum Atom {
    Gen(Gen),
    Param(Coef),
}

fn resolve(name: &str) -> Option<Atom> {
    let p = |x: Param| Some(Atom::Param(Coef::param(x)));
    match name {
        "q" => return p(Param::Q),
        "t" => return Some(Atom::Param(Coef::t())),
        "tt" | "𝐭" => return p(Param::Tt),
        "hbar" | "ħ" => return p(Param::Hbar),
        "k" => return p(Param::K),
        "zeta" | "ζ" => return p(Param::Zeta),
        "pi" | "π" => return Some(Atom::Gen(Gen::Pi)),
        "omega" | "ω" => return Some(Atom::Gen(Gen::Omega)),
        _ => {}
    }
    let (head, idx) = split_index(name)?;
    if head == "s" {
        if let Some((a, b)) = idx.split_once('_') {
            return Some(Atom::Gen(Gen::Sij(a.parse().ok()?, b.parse().ok()?)));
        }
    }
    let i: usize = idx.parse().ok()?;
    let g = match head {
        "s" => Gen::S(i),
        "T" => Gen::T(i),
        "X" | "x" => Gen::X(i),
        "Y" => Gen::Y(i),
        "y" => Gen::Ylow(i),
        "D" => Gen::Dunkl(i),
        "Dl" => Gen::Dl(i),
        "Dtrig" => Gen::Dtrig(i),
        "DO" => Gen::DO(i),
        "sigma" | "σ" => Gen::Sigma(i),
        "tau" | "τ" => Gen::Tau(i),
        "Z" => return p(Param::Z(i)),
        "z" => return p(Param::Zlow(i)),
        "c" => return p(Param::C(i)),
        _ => return None,
    };
    Some(Atom::Gen(g))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, OpsError> {
        Err(OpsError::Parse { pos: self.pos(), msg: msg.into() })
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<OperatorExpr, OpsError> {
        let neg = self.eat('-');
        let mut acc = self.product()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat('+') {
                acc = acc.add(&self.product()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Name(_) | Tok::PiMinus | Tok::Sym('(' | '[')))
    }

    fn product(&mut self) -> Result<OperatorExpr, OpsError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.compose(&self.power()?);
            } else if self.starts_primary() {
                acc = acc.compose(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<OperatorExpr, OpsError> {
        let (base, dunkl) = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        if self.peek() == Some(&Tok::Sym('(')) {
            if let (Some(Tok::Name(n)), Some(Tok::Sym(')'))) =
                (self.toks.get(self.at + 1).map(|t| &t.1), self.toks.get(self.at + 2).map(|t| &t.1))
            {
                if n == "l" {
                    self.at += 3;
                    return match dunkl {
                        Some(i) => Ok(OperatorExpr::gen(Gen::Dl(i))),
                        None => self.err("^(l) applies only to D_i"),
                    };
                }
            }
        }
        let neg = self.eat('-');
        let k = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let k = r.to_i64().unwrap_or(0);
                self.at += 1;
                k
            }
            _ => return self.err("expected integer exponent"),
        };
        let b = if neg { base.try_inverse()? } else { base };
        Ok(b.pow(k as u32))
    }

    fn primary(&mut self) -> Result<(OperatorExpr, Option<usize>), OpsError> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.at += 1;
        match tok {
            Tok::Num(r) => Ok((OperatorExpr::scalar(Coef::rational(r)), None)),
            Tok::PiMinus => Ok((OperatorExpr::gen(Gen::PiMinus), None)),
            Tok::Sym('(') => {
                let e = self.sum()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok((e, None))
            }
            Tok::Sym('[') => {
                let e = self.sum()?;
                if !self.eat(']') {
                    return self.err("expected ']'");
                }
                Ok((e, None))
            }
            Tok::Name(n) => match resolve(&n) {
                Some(Atom::Gen(g)) => {
                    let d = if let Gen::Dunkl(i) = g { Some(i) } else { None };
                    Ok((OperatorExpr::gen(g), d))
                }
                Some(Atom::Param(c)) => Ok((OperatorExpr::scalar(c), None)),
                None => {
                    self.at -= 1;
                    self.err(format!("unknown name {n}"))
                }
            },
            Tok::Sym(c) => {
                self.at -= 1;
                self.err(format!("unexpected {c:?}"))
            }
        }
    }
}

/// Parse the text syntax described in the module documentation.
pub fn parse_expr(s: &str) -> Result<OperatorExpr, OpsError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(OpsError::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, at: 0, end: s.len() };
    let e = p.sum()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::build::*;

    #[test]
    fn words_and_combinations() {
        let e = parse_expr("T1 X2 Y1^-1 pi- D1^(l)").unwrap();
        assert_eq!(e, w(&[Gen::T(1), Gen::X(2), Gen::Yinv(1), Gen::PiMinus, Gen::Dl(1)]));
        let e = parse_expr("(3/2)*[T1 T2] + [X1]").unwrap();
        let expect = w(&[Gen::T(1), Gen::T(2)]).scale(&Coef::rational(Rational::new(3, 2))).add(&g(Gen::X(1)));
        assert_eq!(e, expect);
    }

    #[test]
    fn parameters_powers_and_groups() {
        let e = parse_expr("(Y1 - Z1)(Y1 - Z2)").unwrap();
        let f = g(Gen::Y(1)).sub(&p(Param::Z(1))).compose(&g(Gen::Y(1)).sub(&p(Param::Z(2))));
        assert_eq!(e, f);
        assert_eq!(parse_expr("T1^2").unwrap(), w(&[Gen::T(1), Gen::T(1)]));
        assert_eq!(parse_expr("[T1 X1]^-1").unwrap(), w(&[Gen::Xinv(1), Gen::Tinv(1)]));
        assert_eq!(parse_expr("pi - X1").unwrap(), g(Gen::Pi).sub(&g(Gen::X(1))));
        assert_eq!(parse_expr("s1_3 y2").unwrap(), w(&[Gen::Sij(1, 3), Gen::Ylow(2)]));
        assert_eq!(parse_expr("t").unwrap(), c(Coef::t()));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_expr("T1 + "), Err(OpsError::Parse { .. })));
        assert!(matches!(parse_expr("Q7"), Err(OpsError::Parse { pos: 0, .. })));
        assert!(matches!(parse_expr("[D1 X1]^-1"), Err(OpsError::NotInvertible(_))));
        assert!(matches!(parse_expr("X1 ]"), Err(OpsError::Parse { pos: 3, .. })));
    }
}
