//! Bounded-fragment checks of the structural facts about θ and θ*.

use crate::algebra::bisemiring::{in_theta, in_theta_star};
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::functors::constructions::{boolean_part, theta};
use crate::report::{witness, CheckReport};

fn finish(a: &MvAlgebra, checked: u64, bound: u64) -> CheckReport {
    if a.is_finite() {
        CheckReport::valid(checked)
    } else {
        CheckReport::valid_up_to_bound(checked).with_detail("bound", bound)
    }
}

/// `x ∈ θ*(A) ⟺ ¬x ∈ θ(A)` for every element of the bounded fragment.
pub fn check_duality(a: &MvAlgebra, bound: u64) -> CheckReport {
    let mut checked = 0;
    for x in a.enumerate(bound) {
        checked += 1;
        if in_theta_star(a, &x) != in_theta(a, &a.neg(&x)) {
            return CheckReport::counterexample("x in theta* iff not-x in theta", witness([("x", &x)]), checked);
        }
    }
    finish(a, checked, bound)
}

/// `θ(A)` is closed under `⊕, ⊙, ∧, ∨` on pairs from the bounded fragment.
pub fn check_closure(a: &MvAlgebra, bound: u64) -> CheckReport {
    let elems = theta(a).elements(bound);
    let mut checked = 0;
    for x in &elems {
        for y in &elems {
            checked += 1;
            let results = [
                ("oplus", a.oplus(x, y)),
                ("odot", a.odot(x, y)),
                ("meet", a.meet(x, y)),
                ("join", a.join(x, y)),
            ];
            if let Some((op, _)) = results.iter().find(|(_, r)| !in_theta(a, r)) {
                return CheckReport::counterexample(
                    format!("theta closed under {op}"),
                    witness([("x", x), ("y", y)]),
                    checked,
                );
            }
        }
    }
    finish(a, checked, bound).with_detail("theta_elements", elems.len())
}

fn is_infinitesimal(a: &MvAlgebra, x: &MvValue, horizon: u32) -> bool {
    a.is_infinitesimal_exact(x)
        .unwrap_or_else(|| a.infinitesimal_up_to(x, horizon))
}

/// `B(A) ⊆ θ(A)`, `Rad(A) ⊆ θ(A)` and `¬Rad(A) ∩ θ(A) = {1}` on the fragment.
pub fn check_radical_placement(a: &MvAlgebra, bound: u64) -> CheckReport {
    let horizon = 64;
    let mut checked = 0;
    let one = a.one();
    for x in a.enumerate(bound) {
        checked += 1;
        let failure = if a.is_boolean(&x) && !in_theta(a, &x) {
            Some("boolean part inside theta")
        } else if is_infinitesimal(a, &x, horizon) && !in_theta(a, &x) {
            Some("radical inside theta")
        } else if is_infinitesimal(a, &a.neg(&x), horizon) && in_theta(a, &x) && x != one {
            Some("co-radical meets theta only in 1")
        } else {
            None
        };
        if let Some(law) = failure {
            return CheckReport::counterexample(law, witness([("x", &x)]), checked);
        }
    }
    finish(a, checked, bound)
}

/// Every `x ∈ θ(A)` in the fragment is `b ⊕ ε` with `b` idempotent and `ε`
/// infinitesimal, both drawn from the same fragment.
pub fn check_sum_decomposition(a: &MvAlgebra, bound: u64) -> CheckReport {
    let frag = a.enumerate(bound);
    let booleans = boolean_part(a, bound);
    let infinitesimals: Vec<&MvValue> = frag.iter().filter(|e| is_infinitesimal(a, e, 64)).collect();
    let mut checked = 0;
    for x in frag.iter().filter(|x| in_theta(a, x)) {
        checked += 1;
        let found = booleans
            .iter()
            .any(|b| infinitesimals.iter().any(|e| a.oplus(b, e) == *x));
        if !found {
            return CheckReport::counterexample("boolean plus infinitesimal", witness([("x", x)]), checked);
        }
    }
    finish(a, checked, bound)
}
