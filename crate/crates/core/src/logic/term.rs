//! Łukasiewicz terms and their minimal-parentheses printer.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const0,
    Const1,
    Neg(Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    Odot(Box<Term>, Box<Term>),
    Ominus(Box<Term>, Box<Term>),
    Implies(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

/// Binary connectives with their ASCII symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Oplus,
    Odot,
    Ominus,
    Implies,
    Meet,
    Join,
}

impl BinOp {
    pub const ALL: [BinOp; 6] = [
        BinOp::Odot,
        BinOp::Oplus,
        BinOp::Ominus,
        BinOp::Meet,
        BinOp::Join,
        BinOp::Implies,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Oplus => "(+)",
            BinOp::Odot => "(.)",
            BinOp::Ominus => "(-)",
            BinOp::Implies => "->",
            BinOp::Meet => "/\\",
            BinOp::Join => "\\/",
        }
    }

    /// Binding strength; larger binds tighter.
    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Odot => 4,
            BinOp::Oplus | BinOp::Ominus => 3,
            BinOp::Meet => 2,
            BinOp::Join => 1,
            BinOp::Implies => 0,
        }
    }

    pub fn right_assoc(self) -> bool {
        self == BinOp::Implies
    }

    pub fn build(self, l: Term, r: Term) -> Term {
        let (l, r) = (Box::new(l), Box::new(r));
        match self {
            BinOp::Oplus => Term::Oplus(l, r),
            BinOp::Odot => Term::Odot(l, r),
            BinOp::Ominus => Term::Ominus(l, r),
            BinOp::Implies => Term::Implies(l, r),
            BinOp::Meet => Term::Meet(l, r),
            BinOp::Join => Term::Join(l, r),
        }
    }
}

const PREFIX_PREC: u8 = 5;
const ATOM_PREC: u8 = 6;

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn oplus(l: Term, r: Term) -> Term {
        BinOp::Oplus.build(l, r)
    }

    pub fn odot(l: Term, r: Term) -> Term {
        BinOp::Odot.build(l, r)
    }

    pub fn implies(l: Term, r: Term) -> Term {
        BinOp::Implies.build(l, r)
    }

    pub fn as_binary(&self) -> Option<(BinOp, &Term, &Term)> {
        let (op, l, r) = match self {
            Term::Oplus(l, r) => (BinOp::Oplus, l, r),
            Term::Odot(l, r) => (BinOp::Odot, l, r),
            Term::Ominus(l, r) => (BinOp::Ominus, l, r),
            Term::Implies(l, r) => (BinOp::Implies, l, r),
            Term::Meet(l, r) => (BinOp::Meet, l, r),
            Term::Join(l, r) => (BinOp::Join, l, r),
            _ => return None,
        };
        Some((op, l, r))
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Var(_) | Term::Const0 | Term::Const1 => ATOM_PREC,
            Term::Neg(_) => PREFIX_PREC,
            t => t.as_binary().unwrap().0.precedence(),
        }
    }

    /// Variables in alphabetical order.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const0 | Term::Const1 => {}
            Term::Neg(t) => t.collect_vars(out),
            t => {
                let (_, l, r) = t.as_binary().unwrap();
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Number of connective occurrences.
    pub fn op_count(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const0 | Term::Const1 => 0,
            Term::Neg(t) => 1 + t.op_count(),
            t => {
                let (_, l, r) = t.as_binary().unwrap();
                1 + l.op_count() + r.op_count()
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const0 | Term::Const1 => 0,
            Term::Neg(t) => 1 + t.depth(),
            t => {
                let (_, l, r) = t.as_binary().unwrap();
                1 + l.depth().max(r.depth())
            }
        }
    }

    /// `self[name := s]`.
    pub fn substitute(&self, name: &str, s: &Term) -> Term {
        match self {
            Term::Var(v) if v == name => s.clone(),
            Term::Var(_) | Term::Const0 | Term::Const1 => self.clone(),
            Term::Neg(t) => Term::neg(t.substitute(name, s)),
            t => {
                let (op, l, r) = t.as_binary().unwrap();
                op.build(l.substitute(name, s), r.substitute(name, s))
            }
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, parens: bool) -> fmt::Result {
        if parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const0 => f.write_str("0"),
            Term::Const1 => f.write_str("1"),
            Term::Neg(t) => {
                f.write_str("~")?;
                t.write_child(f, t.precedence() < PREFIX_PREC)
            }
            t => {
                let (op, l, r) = t.as_binary().unwrap();
                let p = op.precedence();
                let (lp, rp) = if op.right_assoc() {
                    (l.precedence() <= p, r.precedence() < p)
                } else {
                    (l.precedence() < p, r.precedence() <= p)
                };
                l.write_child(f, lp)?;
                write!(f, " {} ", op.symbol())?;
                r.write_child(f, rp)
            }
        }
    }
}

/// `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vs = self.lhs.variables();
        vs.extend(self.rhs.variables());
        vs
    }

    pub fn op_count(&self) -> usize {
        self.lhs.op_count() + self.rhs.op_count()
    }

    /// `(2x)² = 2(x²)`, the equation of the variety generated by Chang's algebra.
    pub fn vc_axiom() -> Self {
        let x = Term::var("x");
        let two_x = Term::oplus(x.clone(), x.clone());
        let x_sq = Term::odot(x.clone(), x);
        Equation::new(Term::odot(two_x.clone(), two_x), Term::oplus(x_sq.clone(), x_sq))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
