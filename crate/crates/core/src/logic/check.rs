//! Equation, tautology and axiom checks over finite chains, products and
//! bounded fragments of Chang's algebra.

use std::collections::BTreeMap;

use crate::algebra::check::{carrier_for, sample_tuples, CheckMode};
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};
use crate::logic::eval::eval_with;
use crate::logic::parser::parse;
use crate::logic::term::{Equation, Term};
use crate::rational::Rational;
use crate::report::{CheckReport, Witness};

/// First failing valuation found by a scan, with both sides' values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub assignment: BTreeMap<String, MvValue>,
    pub lhs: MvValue,
    pub rhs: MvValue,
}

impl Failure {
    fn witness(&self) -> Witness {
        self.assignment.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
    }
}

/// Calls `f` on every assignment of `vars` to elements of `pool`, first
/// variable slowest, until `f` returns `false`. Returns the number visited.
fn for_each_assignment<F>(vars: &[String], pool: &[MvValue], mut f: F) -> u64
where
    F: FnMut(&BTreeMap<String, MvValue>) -> bool,
{
    if !vars.is_empty() && pool.is_empty() {
        return 0;
    }
    let mut idx = vec![0usize; vars.len()];
    let mut visited = 0;
    loop {
        let assignment: BTreeMap<String, MvValue> = vars
            .iter()
            .zip(&idx)
            .map(|(v, &i)| (v.clone(), pool[i].clone()))
            .collect();
        visited += 1;
        if !f(&assignment) {
            return visited;
        }
        let mut k = vars.len();
        loop {
            if k == 0 {
                return visited;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pool.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn sides(alg: &MvAlgebra, eq: &Equation, a: &BTreeMap<String, MvValue>) -> (MvValue, MvValue) {
    let lookup = |name: &str| a.get(name);
    let lhs = eval_with(alg, &eq.lhs, &lookup).expect("all variables are bound");
    let rhs = eval_with(alg, &eq.rhs, &lookup).expect("all variables are bound");
    (lhs, rhs)
}

/// Scans every assignment from `pool`; returns the first failure and the count.
pub fn scan_equation(eq: &Equation, alg: &MvAlgebra, pool: &[MvValue]) -> (Option<Failure>, u64) {
    let vars: Vec<String> = eq.variables().into_iter().collect();
    let mut failure = None;
    let checked = for_each_assignment(&vars, pool, |a| {
        let (lhs, rhs) = sides(alg, eq, a);
        if lhs == rhs {
            true
        } else {
            failure = Some(Failure {
                assignment: a.clone(),
                lhs,
                rhs,
            });
            false
        }
    });
    (failure, checked)
}

fn report(eq: &Equation, failure: Option<Failure>, checked: u64, exhaustive: bool) -> CheckReport {
    match failure {
        Some(f) => CheckReport::counterexample(eq.to_string(), f.witness(), checked)
            .with_detail("lhs", &f.lhs)
            .with_detail("rhs", &f.rhs),
        None if exhaustive => CheckReport::valid(checked),
        None => CheckReport::valid_up_to_bound(checked),
    }
}

fn require_finite(alg: &MvAlgebra) -> Result<Vec<MvValue>> {
    carrier_for(alg, CheckMode::Exhaustive)
}

/// Exhaustive check of `eq` over every valuation in a finite algebra.
pub fn check_equation_finite(eq: &Equation, alg: &MvAlgebra) -> Result<CheckReport> {
    let pool = require_finite(alg)?;
    let (failure, checked) = scan_equation(eq, alg, &pool);
    Ok(report(eq, failure, checked, true))
}

/// Offset bound used when none is given: twice the number of connectives.
pub fn default_chang_bound(eq: &Equation) -> u64 {
    (2 * eq.op_count() as u64).max(1)
}

/// Check of `eq` in Chang's algebra over the elements `(0, n)` and `(1, −n)`
/// with `n <= bound`. A counterexample refutes validity in the variety
/// generated by Chang's algebra; otherwise the verdict only covers the fragment.
pub fn check_equation_chang(eq: &Equation, bound: Option<u64>) -> Result<CheckReport> {
    let bound = bound.unwrap_or_else(|| default_chang_bound(eq));
    if bound == 0 {
        return Err(Error::Domain("bound must be at least 1".into()));
    }
    let pool = MvAlgebra::Chang.enumerate(bound);
    let (failure, checked) = scan_equation(eq, &MvAlgebra::Chang, &pool);
    Ok(report(eq, failure, checked, false)
        .with_detail("bound", bound)
        .with_detail("fragment_size", pool.len()))
}

/// Valid iff `t` evaluates to 1 under every valuation of a finite algebra.
pub fn tautology_check(t: &Term, alg: &MvAlgebra) -> Result<CheckReport> {
    let pool = require_finite(alg)?;
    let eq = Equation::new(t.clone(), Term::Const1);
    let (failure, checked) = scan_equation(&eq, alg, &pool);
    Ok(match failure {
        Some(f) => CheckReport::counterexample(format!("{t} = 1"), f.witness(), checked).with_detail("value", &f.lhs),
        None => CheckReport::valid(checked),
    })
}

fn distance_to_half(x: &MvValue) -> Option<Rational> {
    match x {
        MvValue::Scalar(q) => Some((q - &Rational::new(1, 2)).abs()),
        _ => None,
    }
}

/// Decides whether a finite algebra satisfies `(2x)² = 2(x²)`.
///
/// On chains the reported witness is the failing element closest to `1/2`,
/// the lower one on ties. Other algebras report the first failure.
pub fn vc_membership(alg: &MvAlgebra) -> Result<CheckReport> {
    let pool = require_finite(alg)?;
    let eq = Equation::vc_axiom();
    let mut failures: Vec<Failure> = Vec::new();
    for x in &pool {
        let a: BTreeMap<String, MvValue> = [("x".to_string(), x.clone())].into();
        let (lhs, rhs) = sides(alg, &eq, &a);
        if lhs != rhs {
            failures.push(Failure { assignment: a, lhs, rhs });
        }
    }
    let checked = pool.len() as u64;
    let count = failures.len();
    let chosen = failures
        .into_iter()
        .enumerate()
        .min_by_key(|(i, f)| (distance_to_half(&f.assignment["x"]), *i))
        .map(|(_, f)| f);
    Ok(match chosen {
        Some(f) => report(&eq, Some(f), checked, true).with_detail("failures", count),
        None => CheckReport::valid(checked),
    })
}

/// The four axioms of Łukasiewicz logic.
pub fn lukasiewicz_axioms() -> [Term; 4] {
    [
        "x -> (y -> x)",
        "(x -> y) -> ((y -> z) -> (x -> z))",
        "((x -> y) -> y) -> ((y -> x) -> x)",
        "(~x -> ~y) -> (y -> x)",
    ]
    .map(|s| parse(s).expect("axiom text parses"))
}

/// [`axiom_suite_with`] on the four axioms.
pub fn axiom_suite(alg: &MvAlgebra, mode: CheckMode) -> Result<CheckReport> {
    axiom_suite_with(&lukasiewicz_axioms(), alg, mode)
}

/// Checks that each axiom evaluates to 1 and that modus ponens preserves 1,
/// over every valuation (exhaustive) or over seeded draws from the bounded
/// fragment (sampled).
pub fn axiom_suite_with(axioms: &[Term], alg: &MvAlgebra, mode: CheckMode) -> Result<CheckReport> {
    let pool = carrier_for(alg, mode)?;
    let mut vars: Vec<String> = axioms.iter().flat_map(Term::variables).collect();
    vars.extend(["x".to_string(), "y".to_string()]);
    vars.sort();
    vars.dedup();
    let assignments: Vec<BTreeMap<String, MvValue>> = match mode {
        CheckMode::Exhaustive => {
            let mut all = Vec::new();
            for_each_assignment(&vars, &pool, |a| {
                all.push(a.clone());
                true
            });
            all
        }
        CheckMode::Sampled { count, seed, .. } => sample_tuples(&pool, vars.len(), count, seed)
            .into_iter()
            .map(|t| vars.iter().cloned().zip(t).collect())
            .collect(),
    };
    let one = alg.one();
    let mut checked = 0;
    for (i, axiom) in axioms.iter().enumerate() {
        for a in &assignments {
            checked += 1;
            let value = eval_with(alg, axiom, &|n| a.get(n))?;
            if value != one {
                let w = axiom
                    .variables()
                    .into_iter()
                    .map(|v| (v.clone(), a[&v].to_string()))
                    .collect();
                return Ok(CheckReport::counterexample(format!("axiom {}: {axiom}", i + 1), w, checked)
                    .with_detail("value", value));
            }
        }
    }
    let (x, y) = (Term::var("x"), Term::var("y"));
    let premise = Term::implies(x.clone(), y.clone());
    for a in &assignments {
        checked += 1;
        let holds = |t: &Term| eval_with(alg, t, &|n| a.get(n)).map(|v| v == one);
        if holds(&premise)? && holds(&x)? && !holds(&y)? {
            let w = [("x", &a["x"]), ("y", &a["y"])]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect();
            return Ok(CheckReport::counterexample("modus ponens", w, checked));
        }
    }
    let r = match mode {
        CheckMode::Exhaustive => CheckReport::valid(checked),
        CheckMode::Sampled { count, seed, bound } => CheckReport::valid_up_to_bound(checked)
            .with_detail("samples", count)
            .with_detail("seed", seed)
            .with_detail("bound", bound),
    };
    Ok(r.with_detail("axioms", axioms.len()))
}
