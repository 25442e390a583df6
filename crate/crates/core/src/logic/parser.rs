//! Precedence-climbing parser for the ASCII term grammar.
//!
//! ```text
//! term  ::= unary (binop unary)*
//! unary ::= "~" unary | "(" term ")" | "0" | "1" | [a-z][a-z0-9_]*
//! binop ::= "(.)" | "(+)" | "(-)" | "/\" | "\/" | "->"
//! ```

use crate::error::{Error, Result};
use crate::logic::term::{BinOp, Equation, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(String),
    Zero,
    One,
    Tilde,
    LParen,
    RParen,
    Op(BinOp),
    Equals,
    End,
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
}

fn error(position: usize, found: &str, expected: &[&str]) -> Error {
    Error::Parse {
        position,
        message: format!("found {found}, expected one of: {}", expected.join(", ")),
    }
}

const OPERAND_START: [&str; 5] = ["variable", "0", "1", "~", "("];

impl<'a> Lexer<'a> {
    fn run(src: &'a str) -> Result<Vec<(usize, Tok)>> {
        let mut lx = Lexer { src, toks: Vec::new() };
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let rest = &src[i..];
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let fixed: &[(&str, Tok)] = &[
                ("(+)", Tok::Op(BinOp::Oplus)),
                ("(.)", Tok::Op(BinOp::Odot)),
                ("(-)", Tok::Op(BinOp::Ominus)),
                ("->", Tok::Op(BinOp::Implies)),
                ("/\\", Tok::Op(BinOp::Meet)),
                ("\\/", Tok::Op(BinOp::Join)),
                ("~", Tok::Tilde),
                ("(", Tok::LParen),
                (")", Tok::RParen),
                ("=", Tok::Equals),
                ("0", Tok::Zero),
                ("1", Tok::One),
            ];
            if let Some((s, t)) = fixed.iter().find(|(s, _)| rest.starts_with(s)) {
                lx.toks.push((i, t.clone()));
                i += s.len();
                continue;
            }
            if c.is_ascii_lowercase() {
                let len = rest
                    .bytes()
                    .take_while(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || *b == b'_')
                    .count();
                lx.toks.push((i, Tok::Var(rest[..len].to_string())));
                i += len;
                continue;
            }
            let ch = rest.chars().next().unwrap();
            let mut expected = OPERAND_START.to_vec();
            expected.extend(BinOp::ALL.iter().map(|o| o.symbol()));
            expected.push(")");
            return Err(error(i, &format!("unexpected character {ch:?}"), &expected));
        }
        lx.toks.push((lx.src.len(), Tok::End));
        Ok(lx.toks)
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Var(v) => format!("variable {v:?}"),
        Tok::Zero => "\"0\"".into(),
        Tok::One => "\"1\"".into(),
        Tok::Tilde => "\"~\"".into(),
        Tok::LParen => "\"(\"".into(),
        Tok::RParen => "\")\"".into(),
        Tok::Op(o) => format!("{:?}", o.symbol()),
        Tok::Equals => "\"=\"".into(),
        Tok::End => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if t.1 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn term(&mut self, min_prec: u8) -> Result<Term> {
        let mut lhs = self.unary()?;
        loop {
            let op = match &self.peek().1 {
                Tok::Op(op) if op.precedence() >= min_prec => *op,
                _ => return Ok(lhs),
            };
            self.bump();
            let next = if op.right_assoc() { op.precedence() } else { op.precedence() + 1 };
            let rhs = self.term(next)?;
            lhs = op.build(lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Term> {
        let (at, tok) = self.bump();
        match tok {
            Tok::Var(v) => Ok(Term::Var(v)),
            Tok::Zero => Ok(Term::Const0),
            Tok::One => Ok(Term::Const1),
            Tok::Tilde => Ok(Term::neg(self.unary()?)),
            Tok::LParen => {
                let inner = self.term(0)?;
                let (at, close) = self.bump();
                if close != Tok::RParen {
                    let mut expected: Vec<&str> = BinOp::ALL.iter().map(|o| o.symbol()).collect();
                    expected.push(")");
                    return Err(error(at, &describe(&close), &expected));
                }
                Ok(inner)
            }
            other => Err(error(at, &describe(&other), &OPERAND_START)),
        }
    }

    fn expect_end(&mut self, allow_equals: bool) -> Result<()> {
        let (at, tok) = self.peek().clone();
        if tok == Tok::End {
            return Ok(());
        }
        let mut expected: Vec<&str> = BinOp::ALL.iter().map(|o| o.symbol()).collect();
        if allow_equals {
            expected.push("=");
        }
        expected.push("end of input");
        Err(error(at, &describe(&tok), &expected))
    }
}

pub fn parse(text: &str) -> Result<Term> {
    let mut p = Parser {
        toks: Lexer::run(text)?,
        pos: 0,
    };
    let t = p.term(0)?;
    p.expect_end(false)?;
    Ok(t)
}

/// Parses `lhs = rhs`.
pub fn parse_equation(text: &str) -> Result<Equation> {
    let mut p = Parser {
        toks: Lexer::run(text)?,
        pos: 0,
    };
    let lhs = p.term(0)?;
    let (at, tok) = p.bump();
    if tok != Tok::Equals {
        let mut expected: Vec<&str> = BinOp::ALL.iter().map(|o| o.symbol()).collect();
        expected.push("=");
        return Err(error(at, &describe(&tok), &expected));
    }
    let rhs = p.term(0)?;
    p.expect_end(false)?;
    Ok(Equation::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse("x -> (y -> x)").unwrap(),
            Term::implies(v("x"), Term::implies(v("y"), v("x")))
        );
        assert_eq!(parse("~(x (+) y)").unwrap(), Term::neg(Term::oplus(v("x"), v("y"))));
        assert_eq!(
            parse("x (+) y (.) z").unwrap(),
            Term::oplus(v("x"), Term::odot(v("y"), v("z")))
        );
    }

    #[test]
    fn associativity() {
        assert_eq!(
            parse("x -> y -> z").unwrap(),
            Term::implies(v("x"), Term::implies(v("y"), v("z")))
        );
        assert_eq!(
            parse("x (+) y (-) z").unwrap(),
            BinOp::Ominus.build(Term::oplus(v("x"), v("y")), v("z"))
        );
        assert_eq!(
            parse("a \\/ b /\\ c").unwrap(),
            BinOp::Join.build(v("a"), BinOp::Meet.build(v("b"), v("c")))
        );
        assert_eq!(parse("~~x_1").unwrap(), Term::neg(Term::neg(v("x_1"))));
    }

    #[test]
    fn compact_spacing() {
        assert_eq!(
            parse("(x(+)x)(.)(x(+)x)").unwrap().to_string(),
            "(x (+) x) (.) (x (+) x)"
        );
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        match parse("x (+) ") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 6);
                assert!(message.contains("end of input"), "{message}");
                assert!(message.contains("variable"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        match parse("(x -> y") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 7);
                assert!(message.contains(")"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("x y"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse("X"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse("x = y"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn equations() {
        let e = parse_equation("x (+) 1 = 1").unwrap();
        assert_eq!(e.lhs, Term::oplus(v("x"), Term::Const1));
        assert_eq!(e.rhs, Term::Const1);
        assert!(parse_equation("x (+) 1").is_err());
        assert!(parse_equation("x = y = z").is_err());
    }
}
