//! Surface syntax for umbral expressions.
//!
//! Grammar (loosest-binding `+`, left-associative `.`, unary `-` binding to
//! the following atom):
//!
//! ```text
//! expr     := term ('+' term)*
//! term     := ['-'] dotchain
//! dotchain := atom ('.' atom)*
//! atom     := ['-'] core
//! core     := NAME | INT | 'x' | '(' expr ')'
//!           | 'adj(' expr ')' | 'inv(' expr ')' | 'D(' expr ')'
//! NAME     := eps | u | chi | bell | iota | ubar | delta
//! ```
//!
//! A leading integer or `x` in a dotchain acts as the integer or polynomial
//! dot-product; `adj`, `inv` and `D` are the adjoint, compositional-inverse
//! and derivative umbrae. `parse` and the canonical printer round-trip.

use std::fmt;

use thiserror::Error;

use crate::series::rat_int;
use crate::umbra::{Special, Umbra, UmbralExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown name `{name}` at byte {position}")]
    UnknownName { position: usize, name: String },
}

/// A parsed atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DslAtom {
    Special(Special),
    Int(u64),
    X,
    Paren(Box<DslExpr>),
    Adj(Box<DslExpr>),
    Inv(Box<DslExpr>),
    Deriv(Box<DslExpr>),
    Neg(Box<DslAtom>),
}

/// A dot-chain of atoms, applied left-associatively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslChain(pub Vec<DslAtom>);

/// A sum of dot-chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslExpr(pub Vec<DslChain>);

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Int(u64),
    Plus,
    Minus,
    Dot,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Token, usize)>, DslError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                tokens.push((Token::Plus, i));
                i += 1;
            }
            b'-' => {
                tokens.push((Token::Minus, i));
                i += 1;
            }
            b'.' => {
                tokens.push((Token::Dot, i));
                i += 1;
            }
            b'(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            b')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let value = text.parse().map_err(|_| DslError::Syntax {
                    position: start,
                    message: format!("integer literal `{text}` out of range"),
                })?;
                tokens.push((Token::Int(value), start));
            }
            _ if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((Token::Name(src[start..i].to_string()), start));
            }
            _ => {
                return Err(DslError::Syntax {
                    position: i,
                    message: format!("unexpected character `{}`", b as char),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(Token, usize)],
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t);
        self.pos += 1;
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), DslError> {
        if self.peek() == Some(&token) {
            self.pos += 1;
            Ok(())
        } else {
            Err(DslError::Syntax {
                position: self.position(),
                message: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<DslExpr, DslError> {
        let mut chains = vec![self.chain()?];
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            chains.push(self.chain()?);
        }
        Ok(DslExpr(chains))
    }

    fn chain(&mut self) -> Result<DslChain, DslError> {
        let mut atoms = vec![self.atom()?];
        while self.peek() == Some(&Token::Dot) {
            self.pos += 1;
            atoms.push(self.atom()?);
        }
        Ok(DslChain(atoms))
    }

    fn atom(&mut self) -> Result<DslAtom, DslError> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(DslAtom::Neg(Box::new(self.atom()?)));
        }
        self.core()
    }

    fn core(&mut self) -> Result<DslAtom, DslError> {
        let position = self.position();
        match self.bump() {
            Some(Token::Int(value)) => Ok(DslAtom::Int(*value)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(DslAtom::Paren(Box::new(inner)))
            }
            Some(Token::Name(name)) => {
                let name = name.clone();
                match name.as_str() {
                    "x" => Ok(DslAtom::X),
                    "adj" | "inv" | "D" => {
                        self.expect(Token::LParen, &format!("`(` after `{name}`"))?;
                        let inner = Box::new(self.expr()?);
                        self.expect(Token::RParen, "`)`")?;
                        Ok(match name.as_str() {
                            "adj" => DslAtom::Adj(inner),
                            "inv" => DslAtom::Inv(inner),
                            _ => DslAtom::Deriv(inner),
                        })
                    }
                    _ => Special::from_name(&name)
                        .map(DslAtom::Special)
                        .ok_or(DslError::UnknownName { position, name }),
                }
            }
            Some(_) | None => Err(DslError::Syntax {
                position,
                message: "expected a name, integer, `x`, or `(`".to_string(),
            }),
        }
    }
}

/// Parses a source string into a surface expression.
pub fn parse(src: &str) -> Result<DslExpr, DslError> {
    if src.trim().is_empty() {
        return Err(DslError::Syntax {
            position: 0,
            message: "empty expression".to_string(),
        });
    }
    let tokens = lex(src)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        len: src.len(),
    };
    let expr = parser.expr()?;
    if parser.pos < tokens.len() {
        return Err(DslError::Syntax {
            position: parser.position(),
            message: "trailing input".to_string(),
        });
    }
    Ok(expr)
}

impl fmt::Display for DslAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DslAtom::Special(s) => f.write_str(s.name()),
            DslAtom::Int(n) => write!(f, "{n}"),
            DslAtom::X => f.write_str("x"),
            DslAtom::Paren(e) => write!(f, "({e})"),
            DslAtom::Adj(e) => write!(f, "adj({e})"),
            DslAtom::Inv(e) => write!(f, "inv({e})"),
            DslAtom::Deriv(e) => write!(f, "D({e})"),
            DslAtom::Neg(a) => write!(f, "-{a}"),
        }
    }
}

impl fmt::Display for DslChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl fmt::Display for DslExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, chain) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{chain}")?;
        }
        Ok(())
    }
}

impl DslAtom {
    fn to_umbral(&self, order: usize) -> UmbralExpr {
        match self {
            DslAtom::Special(s) => UmbralExpr::umbra(Umbra::special(*s, order)),
            DslAtom::Int(n) => UmbralExpr::constant(rat_int(*n as i64)),
            DslAtom::X => UmbralExpr::X,
            DslAtom::Paren(e) => e.to_umbral(order),
            DslAtom::Adj(e) => UmbralExpr::Adjoint(Box::new(e.to_umbral(order))),
            DslAtom::Inv(e) => UmbralExpr::CompInverse(Box::new(e.to_umbral(order))),
            DslAtom::Deriv(e) => UmbralExpr::Derivative(Box::new(e.to_umbral(order))),
            DslAtom::Neg(a) => UmbralExpr::scale(rat_int(-1), a.to_umbral(order)),
        }
    }
}

impl DslChain {
    fn to_umbral(&self, order: usize) -> UmbralExpr {
        let mut iter = self.0.iter();
        let mut acc = iter.next().expect("chains are nonempty").to_umbral(order);
        for atom in iter {
            acc = UmbralExpr::dot(acc, atom.to_umbral(order));
        }
        acc
    }
}

impl DslExpr {
    /// Lowers to an evaluable umbral expression, instantiating special
    /// umbrae at the given truncation order.
    pub fn to_umbral(&self, order: usize) -> UmbralExpr {
        if self.0.len() == 1 {
            self.0[0].to_umbral(order)
        } else {
            UmbralExpr::sum(self.0.iter().map(|c| c.to_umbral(order)).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, Poly, Rational};
    use num_traits::Zero;

    #[test]
    fn parses_the_pascal_solution_shape() {
        let e = parse("ubar.bell.D(delta) + (x+3).chi").unwrap();
        assert_eq!(e.0.len(), 2);
        assert_eq!(e.0[0].0.len(), 3);
        assert_eq!(e.to_string(), "ubar.bell.D(delta) + (x + 3).chi");
    }

    #[test]
    fn parses_double_negation_chain() {
        let e = parse("-1.-chi").unwrap();
        assert_eq!(
            e.0[0].0,
            vec![
                DslAtom::Neg(Box::new(DslAtom::Int(1))),
                DslAtom::Neg(Box::new(DslAtom::Special(Special::Singleton))),
            ]
        );
        // and its generating function is 1/(1 - t)
        let gf = e.to_umbral(8).gf::<Rational>(8).unwrap();
        let ubar = Umbra::special(Special::Factorial, 8);
        assert_eq!(&gf, ubar.gf());
    }

    #[test]
    fn adjoint_of_unity_is_singleton() {
        let e = parse("adj(u)").unwrap();
        let gf = e.to_umbral(6).gf::<Rational>(6).unwrap();
        let chi = Umbra::special(Special::Singleton, 6);
        assert_eq!(&gf, chi.gf());
    }

    #[test]
    fn error_positions_are_reported() {
        match parse("u + @") {
            Err(DslError::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("u + zeta") {
            Err(DslError::UnknownName { position, name }) => {
                assert_eq!((position, name.as_str()), (4, "zeta"));
            }
            other => panic!("expected unknown name, got {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("u +").is_err());
        assert!(parse("(u").is_err());
        assert!(parse("u)").is_err());
        assert!(parse("adj u").is_err());
    }

    #[test]
    fn roundtrip_corpus() {
        let corpus = [
            "eps",
            "u",
            "chi",
            "bell",
            "iota",
            "ubar",
            "delta",
            "x",
            "7",
            "-chi",
            "-1.-chi",
            "x.chi",
            "x.ubar",
            "2.chi",
            "-3.delta",
            "u + chi",
            "ubar + iota.chi",
            "ubar.bell.D(delta)",
            "ubar.bell.D(delta) + (x+3).chi",
            "(iota + x.u).chi",
            "ubar + (iota + x.u).chi",
            "adj(u)",
            "adj(chi)",
            "inv(u)",
            "inv(chi)",
            "D(delta)",
            "D(D(chi))",
            "adj(inv(u))",
            "(x+3).chi",
            "(u + chi).bell",
            "x.adj(u)",
            "delta + x.chi",
            "chi.2.bell",
            "chi.2.bell.D(u)",
            "(ubar + -2.chi).u",
            "-(u + chi)",
            "1 + 2 + 3",
            "x + -1.iota",
        ];
        for src in corpus {
            let parsed = parse(src).unwrap();
            let printed = parsed.to_string();
            let reparsed = parse(&printed).unwrap();
            assert_eq!(parsed, reparsed, "roundtrip instability for `{src}`");
            // canonical form is a fixed point
            assert_eq!(printed, reparsed.to_string());
        }
    }

    #[test]
    fn falling_factorial_through_the_dsl() {
        let e = parse("x.chi").unwrap();
        let value = e.to_umbral(8).evaluate(3, 8).unwrap();
        let expected =
            Poly::from_coeffs(vec![Rational::zero(), rat(2, 1), rat(-3, 1), rat(1, 1)]);
        assert_eq!(value, expected);
    }

    #[test]
    fn constant_expressions_evaluate_numerically() {
        let e = parse("ubar").unwrap();
        assert_eq!(e.to_umbral(6).evaluate_scalar(4, 6).unwrap(), rat(24, 1));
        let e = parse("eps").unwrap();
        assert_eq!(e.to_umbral(6).evaluate_scalar(5, 6).unwrap(), rat(0, 1));
    }
}
