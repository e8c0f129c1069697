//! Text grammar for dipolynomials and term polynomials, shared by the
//! command-line interface:
//!
//! - identifiers are generators; a `^` suffix marks the central letter;
//! - juxtaposed letters form a dimonomial (`x y^ z`);
//! - `|>` and `<|` are the dialgebra products, `*>` and `<*` the Jordan
//!   diproducts, `.` the single nonassociative product;
//! - coefficients are rationals `p/q` attached with `*`; terms are joined
//!   by `+` and `-`; nested products must be parenthesized.

use crate::diassoc::{
    jordan_left, jordan_right, mul_left, mul_right, Dimonomial, Dipolynomial, Var,
};
use crate::diterm::{AlgTerm, AlgTermPoly, DiOp, DiTerm, DiTermPoly};
use crate::linalg::{half, LinComb, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

/// Declared generator order (`--order x,y,z`); identifiers not listed are
/// ordered by first appearance after all listed ones.
#[derive(Clone, Debug, Default)]
pub struct VarOrder {
    declared: Vec<String>,
    seen: BTreeMap<String, u32>,
}

impl VarOrder {
    pub fn new(names: &[&str]) -> Self {
        VarOrder {
            declared: names.iter().map(|s| s.to_string()).collect(),
            seen: BTreeMap::new(),
        }
    }

    pub fn resolve(&mut self, name: &str) -> Var {
        if let Some(i) = self.declared.iter().position(|n| n == name) {
            return Var::with_ord(name, i as u32 + 1);
        }
        let next = self.declared.len() as u32 + 1 + self.seen.len() as u32;
        let ord = *self.seen.entry(name.to_string()).or_insert(next);
        Var::with_ord(name, ord)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
    Dot,
    LPar,
    RPar,
    OpRight,  // |>
    OpLeft,   // <|
    JRight,   // *>
    JLeft,    // <*
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let b = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '.' => {
                toks.push((i, Tok::Dot));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LPar));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RPar));
                i += 1;
            }
            '|' if b.get(i + 1) == Some(&b'>') => {
                toks.push((i, Tok::OpRight));
                i += 2;
            }
            '<' if b.get(i + 1) == Some(&b'|') => {
                toks.push((i, Tok::OpLeft));
                i += 2;
            }
            '<' if b.get(i + 1) == Some(&b'*') => {
                toks.push((i, Tok::JLeft));
                i += 2;
            }
            '*' if b.get(i + 1) == Some(&b'>') => {
                toks.push((i, Tok::JRight));
                i += 2;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < b.len() && (b[i] as char).is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Int(input[start..i].to_string())));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < b.len() {
                    let ch = b[i] as char;
                    if ch.is_ascii_alphanumeric() || ch == '_' || ch == '#' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                toks.push((start, Tok::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character '{}'", c),
                })
            }
        }
    }
    Ok(toks)
}

/// Product operators at the single binary-product position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    /// `|>`
    Right,
    /// `<|`
    Left,
    /// `*>`
    JordanRight,
    /// `<*`
    JordanLeft,
    /// `.`
    NonAssoc,
}

/// One letter of a juxtaposed word: name, central-letter marker, source
/// position.
#[derive(Clone, Debug)]
pub struct Letter {
    pub name: String,
    pub dotted: bool,
    pub pos: usize,
}

/// Parsed expression, interpreted per target domain afterwards.
#[derive(Clone, Debug)]
pub enum Ast {
    Word(Vec<Letter>),
    Bin(BinOp, usize, Box<Ast>, Box<Ast>),
    Sum(Vec<(Scalar, Ast)>),
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<()> {
        if self.peek() == Some(t) {
            self.at += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                pos: self.pos(),
                msg: format!("expected {}", what),
            })
        }
    }
}

fn parse_int(lx: &mut Lexer) -> Result<BigInt> {
    match lx.bump() {
        Some(Tok::Int(s)) => Ok(s.parse().expect("lexed integer")),
        _ => Err(Error::Parse {
            pos: lx.pos(),
            msg: "expected integer".into(),
        }),
    }
}

/// `number := int ['/' int]`, already past the leading int check.
fn parse_coefficient(lx: &mut Lexer) -> Result<Scalar> {
    let num = parse_int(lx)?;
    let den = if lx.peek() == Some(&Tok::Slash) {
        lx.bump();
        let pos = lx.pos();
        let d = parse_int(lx)?;
        if d == BigInt::from(0) {
            return Err(Error::Parse {
                pos,
                msg: "zero denominator".into(),
            });
        }
        d
    } else {
        BigInt::from(1)
    };
    Ok(Scalar::new(num, den))
}

fn parse_word_or_paren(lx: &mut Lexer) -> Result<Ast> {
    match lx.peek() {
        Some(Tok::LPar) => {
            lx.bump();
            let inner = parse_sum(lx)?;
            lx.expect(&Tok::RPar, "')'")?;
            Ok(inner)
        }
        Some(Tok::Ident(_)) => {
            let mut letters = Vec::new();
            while let Some(Tok::Ident(_)) = lx.peek() {
                let pos = lx.pos();
                let name = match lx.bump() {
                    Some(Tok::Ident(n)) => n,
                    _ => unreachable!(),
                };
                let dotted = if lx.peek() == Some(&Tok::Caret) {
                    lx.bump();
                    true
                } else {
                    false
                };
                letters.push(Letter { name, dotted, pos });
            }
            Ok(Ast::Word(letters))
        }
        _ => Err(Error::Parse {
            pos: lx.pos(),
            msg: "expected identifier or '('".into(),
        }),
    }
}

/// At most one binary product per parenthesization level.
fn parse_product(lx: &mut Lexer) -> Result<Ast> {
    let first = parse_word_or_paren(lx)?;
    let op = match lx.peek() {
        Some(Tok::OpRight) => BinOp::Right,
        Some(Tok::OpLeft) => BinOp::Left,
        Some(Tok::JRight) => BinOp::JordanRight,
        Some(Tok::JLeft) => BinOp::JordanLeft,
        Some(Tok::Dot) => BinOp::NonAssoc,
        _ => return Ok(first),
    };
    let op_pos = lx.pos();
    lx.bump();
    let second = parse_word_or_paren(lx)?;
    match lx.peek() {
        Some(Tok::OpRight | Tok::OpLeft | Tok::JRight | Tok::JLeft | Tok::Dot) => {
            Err(Error::Parse {
                pos: lx.pos(),
                msg: "nested products must be parenthesized".into(),
            })
        }
        _ => Ok(Ast::Bin(op, op_pos, Box::new(first), Box::new(second))),
    }
}

/// `term := [number ['*']] product | number`
fn parse_term(lx: &mut Lexer) -> Result<(Scalar, Option<Ast>)> {
    if let Some(Tok::Int(_)) = lx.peek() {
        let c = parse_coefficient(lx)?;
        match lx.peek() {
            Some(Tok::Star) => {
                lx.bump();
                let p = parse_product(lx)?;
                Ok((c, Some(p)))
            }
            Some(Tok::Ident(_) | Tok::LPar) => {
                let p = parse_product(lx)?;
                Ok((c, Some(p)))
            }
            _ => Ok((c, None)),
        }
    } else {
        let p = parse_product(lx)?;
        Ok((Scalar::one(), Some(p)))
    }
}

/// `sum := ['-'] term (('+'|'-') term)*`
fn parse_sum(lx: &mut Lexer) -> Result<Ast> {
    let mut terms = Vec::new();
    let mut sign = Scalar::one();
    if lx.peek() == Some(&Tok::Minus) {
        lx.bump();
        sign = -sign;
    }
    loop {
        let pos = lx.pos();
        let (c, body) = parse_term(lx)?;
        match body {
            Some(ast) => terms.push((&sign * &c, ast)),
            None => {
                return Err(Error::Parse {
                    pos,
                    msg: "bare number is not an expression".into(),
                })
            }
        }
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.bump();
                sign = Scalar::one();
            }
            Some(Tok::Minus) => {
                lx.bump();
                sign = -Scalar::one();
            }
            _ => break,
        }
    }
    Ok(Ast::Sum(terms))
}

/// Parses a complete expression into the shared AST.
pub fn parse_ast(input: &str) -> Result<Ast> {
    let toks = lex(input)?;
    let mut lx = Lexer {
        toks,
        at: 0,
        end: input.len(),
    };
    let ast = parse_sum(&mut lx)?;
    if lx.peek().is_some() {
        return Err(Error::Parse {
            pos: lx.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(ast)
}

fn word_to_dimonomial(letters: &[Letter], order: &mut VarOrder) -> Result<Dimonomial> {
    let vars: Vec<Var> = letters.iter().map(|l| order.resolve(&l.name)).collect();
    let dots: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, l)| l.dotted)
        .map(|(i, _)| i)
        .collect();
    let dot = match (dots.len(), letters.len()) {
        (1, _) => dots[0],
        (0, 1) => 0,
        (0, _) => {
            return Err(Error::Parse {
                pos: letters[0].pos,
                msg: "word needs a central letter marked with '^'".into(),
            })
        }
        _ => {
            return Err(Error::Parse {
                pos: letters[dots[1]].pos,
                msg: "more than one central letter".into(),
            })
        }
    };
    Ok(Dimonomial::new(vars, dot))
}

/// Interprets the AST in the free associative dialgebra.
pub fn ast_to_dipolynomial(ast: &Ast, order: &mut VarOrder) -> Result<Dipolynomial> {
    match ast {
        Ast::Word(letters) => Ok(LinComb::unit(word_to_dimonomial(letters, order)?)),
        Ast::Bin(op, pos, l, r) => {
            let a = ast_to_dipolynomial(l, order)?;
            let b = ast_to_dipolynomial(r, order)?;
            match op {
                BinOp::Right => Ok(mul_right(&a, &b)),
                BinOp::Left => Ok(mul_left(&a, &b)),
                BinOp::JordanRight => Ok(jordan_right(&a, &b)),
                BinOp::JordanLeft => Ok(jordan_left(&a, &b)),
                BinOp::NonAssoc => Err(Error::Parse {
                    pos: *pos,
                    msg: "'.' is not a dialgebra product".into(),
                }),
            }
        }
        Ast::Sum(terms) => {
            let mut out = Dipolynomial::zero();
            for (c, t) in terms {
                out.add_scaled(&ast_to_dipolynomial(t, order)?, c);
            }
            Ok(out)
        }
    }
}

fn require_single_letter(letters: &[Letter]) -> Result<&Letter> {
    if letters.len() != 1 {
        return Err(Error::Parse {
            pos: letters[0].pos,
            msg: "juxtaposed words are not terms; use explicit products".into(),
        });
    }
    let l = &letters[0];
    if l.dotted {
        return Err(Error::Parse {
            pos: l.pos,
            msg: "'^' has no meaning on a term variable".into(),
        });
    }
    Ok(l)
}

/// Interprets the AST as a polynomial in free dialgebra terms; the Jordan
/// diproducts expand bilinearly into `|>` and `<|` terms.
pub fn ast_to_diterm_poly(ast: &Ast, order: &mut VarOrder) -> Result<DiTermPoly> {
    let node = |op: DiOp, a: &DiTermPoly, b: &DiTermPoly| -> DiTermPoly {
        a.bilinear(b, |s, t| {
            LinComb::unit(DiTerm::node(op, s.clone(), t.clone()))
        })
    };
    match ast {
        Ast::Word(letters) => {
            let l = require_single_letter(letters)?;
            Ok(LinComb::unit(DiTerm::leaf(&order.resolve(&l.name))))
        }
        Ast::Bin(op, pos, l, r) => {
            let a = ast_to_diterm_poly(l, order)?;
            let b = ast_to_diterm_poly(r, order)?;
            match op {
                BinOp::Right => Ok(node(DiOp::Right, &a, &b)),
                BinOp::Left => Ok(node(DiOp::Left, &a, &b)),
                BinOp::JordanRight => Ok(node(DiOp::Right, &a, &b)
                    .add(&node(DiOp::Left, &b, &a))
                    .scale(&half())),
                BinOp::JordanLeft => Ok(node(DiOp::Left, &a, &b)
                    .add(&node(DiOp::Right, &b, &a))
                    .scale(&half())),
                BinOp::NonAssoc => Err(Error::Parse {
                    pos: *pos,
                    msg: "'.' is not a dialgebra product".into(),
                }),
            }
        }
        Ast::Sum(terms) => {
            let mut out = DiTermPoly::zero();
            for (c, t) in terms {
                out.add_scaled(&ast_to_diterm_poly(t, order)?, c);
            }
            Ok(out)
        }
    }
}

/// Interprets the AST as a polynomial in free nonassociative algebra
/// terms; only `.` is a valid product.
pub fn ast_to_algterm_poly(ast: &Ast, order: &mut VarOrder) -> Result<AlgTermPoly> {
    match ast {
        Ast::Word(letters) => {
            let l = require_single_letter(letters)?;
            Ok(LinComb::unit(AlgTerm::leaf(&order.resolve(&l.name))))
        }
        Ast::Bin(op, pos, l, r) => {
            let a = ast_to_algterm_poly(l, order)?;
            let b = ast_to_algterm_poly(r, order)?;
            match op {
                BinOp::NonAssoc => Ok(a.bilinear(&b, |s, t| {
                    LinComb::unit(AlgTerm::mul(s.clone(), t.clone()))
                })),
                _ => Err(Error::Parse {
                    pos: *pos,
                    msg: "only '.' is valid in algebra terms".into(),
                }),
            }
        }
        Ast::Sum(terms) => {
            let mut out = AlgTermPoly::zero();
            for (c, t) in terms {
                out.add_scaled(&ast_to_algterm_poly(t, order)?, c);
            }
            Ok(out)
        }
    }
}

pub fn parse_dipolynomial(input: &str, order: &mut VarOrder) -> Result<Dipolynomial> {
    ast_to_dipolynomial(&parse_ast(input)?, order)
}

pub fn parse_diterm_poly(input: &str, order: &mut VarOrder) -> Result<DiTermPoly> {
    ast_to_diterm_poly(&parse_ast(input)?, order)
}

pub fn parse_algterm_poly(input: &str, order: &mut VarOrder) -> Result<AlgTermPoly> {
    ast_to_algterm_poly(&parse_ast(input)?, order)
}

/// Convenience for tests: a dipolynomial in the default order.
pub fn dipoly(input: &str) -> Result<Dipolynomial> {
    parse_dipolynomial(input, &mut VarOrder::default())
}
