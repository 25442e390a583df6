//! Łukasiewicz logic: terms, parsing, evaluation and checking.

pub mod check;
pub mod eval;
pub mod parser;
pub mod term;

pub use check::{
    axiom_suite, axiom_suite_with, check_equation_chang, check_equation_finite, default_chang_bound,
    lukasiewicz_axioms, scan_equation, tautology_check, vc_membership, Failure,
};
pub use eval::{eval_with, evaluate, Valuation};
pub use parser::{parse, parse_equation};
pub use term::{BinOp, Equation, Term};
