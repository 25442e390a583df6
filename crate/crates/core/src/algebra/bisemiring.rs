//! ℓ-bisemirings carried by subsets of an MV-algebra.

use std::fmt;

use crate::algebra::check::all_triples;
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::report::{witness, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Carrier {
    /// A materialized finite subset, in canonical order.
    Explicit(Vec<MvValue>),
    /// `{x : x >= 2x²}`.
    Theta,
    /// `{x : x <= 2x²}`.
    ThetaStar,
}

/// A subset of `host` with the inherited `∧, ∨, ⊕, ⊙, 0, 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bisemiring {
    pub host: MvAlgebra,
    pub carrier: Carrier,
}

/// `2x² = (x ⊙ x) ⊕ (x ⊙ x)`.
pub fn two_x_squared(host: &MvAlgebra, x: &MvValue) -> MvValue {
    host.double(&host.square(x))
}

pub fn in_theta(host: &MvAlgebra, x: &MvValue) -> bool {
    host.leq(&two_x_squared(host, x), x)
}

pub fn in_theta_star(host: &MvAlgebra, x: &MvValue) -> bool {
    host.leq(x, &two_x_squared(host, x))
}

impl Bisemiring {
    pub fn is_explicit(&self) -> bool {
        matches!(self.carrier, Carrier::Explicit(_))
    }

    pub fn contains(&self, x: &MvValue) -> bool {
        if !self.host.contains(x) {
            return false;
        }
        match &self.carrier {
            Carrier::Explicit(elems) => elems.contains(x),
            Carrier::Theta => in_theta(&self.host, x),
            Carrier::ThetaStar => in_theta_star(&self.host, x),
        }
    }

    /// The explicit carrier, or the members of the host's bounded fragment.
    pub fn elements(&self, bound: u64) -> Vec<MvValue> {
        match &self.carrier {
            Carrier::Explicit(elems) => elems.clone(),
            _ => self
                .host
                .enumerate(bound)
                .into_iter()
                .filter(|x| self.contains(x))
                .collect(),
        }
    }

    /// Closure plus the ℓ-bisemiring laws over all triples of `elements(bound)`.
    ///
    /// `(S, ∧, ∨, 0, 1)` must be a bounded distributive lattice,
    /// `(S, ∧, ⊕)` an idempotent semiring with zero `1` and one `0`, and
    /// `(S, ∨, ⊙)` one with zero `0` and one `1`. Explicit carriers yield
    /// `valid`; predicate carriers only `valid_up_to_bound`.
    pub fn check_axioms(&self, bound: u64) -> CheckReport {
        let h = &self.host;
        let elems = self.elements(bound);
        let (zero, one) = (h.zero(), h.one());
        for c in [&zero, &one] {
            if !self.contains(c) {
                return CheckReport::counterexample("constants", witness([("missing", c)]), 0);
            }
        }
        let mut checked = 0;
        for (x, y, z) in all_triples(&elems) {
            checked += 1;
            let ops: [(&str, MvValue); 4] = [
                ("meet", h.meet(&x, &y)),
                ("join", h.join(&x, &y)),
                ("oplus", h.oplus(&x, &y)),
                ("odot", h.odot(&x, &y)),
            ];
            if let Some((name, _)) = ops.iter().find(|(_, r)| !self.contains(r)) {
                return CheckReport::counterexample(
                    format!("closure under {name}"),
                    witness([("x", &x), ("y", &y)]),
                    checked,
                );
            }
            if let Some(law) = bisemiring_law_failure(h, &x, &y, &z) {
                return CheckReport::counterexample(law, witness([("x", &x), ("y", &y), ("z", &z)]), checked);
            }
        }
        if self.is_explicit() {
            CheckReport::valid(checked)
        } else {
            CheckReport::valid_up_to_bound(checked).with_detail("bound", bound)
        }
    }
}

fn bisemiring_law_failure(h: &MvAlgebra, x: &MvValue, y: &MvValue, z: &MvValue) -> Option<&'static str> {
    let (zero, one) = (h.zero(), h.one());
    let meet = |a: &MvValue, b: &MvValue| h.meet(a, b);
    let join = |a: &MvValue, b: &MvValue| h.join(a, b);
    let oplus = |a: &MvValue, b: &MvValue| h.oplus(a, b);
    let odot = |a: &MvValue, b: &MvValue| h.odot(a, b);
    let checks: [(&str, bool); 14] = [
        ("lattice: meet associative", meet(&meet(x, y), z) == meet(x, &meet(y, z))),
        ("lattice: join associative", join(&join(x, y), z) == join(x, &join(y, z))),
        ("lattice: commutative", meet(x, y) == meet(y, x) && join(x, y) == join(y, x)),
        ("lattice: absorption", meet(x, &join(x, y)) == *x && join(x, &meet(x, y)) == *x),
        ("lattice: bounded", meet(x, &zero) == zero && join(x, &one) == one),
        (
            "lattice: distributive",
            meet(x, &join(y, z)) == join(&meet(x, y), &meet(x, z)),
        ),
        ("semiring meet-oplus: idempotent", meet(x, x) == *x),
        (
            "semiring meet-oplus: monoid",
            oplus(&oplus(x, y), z) == oplus(x, &oplus(y, z)) && oplus(x, &zero) == *x && oplus(x, y) == oplus(y, x),
        ),
        (
            "semiring meet-oplus: distributive",
            oplus(x, &meet(y, z)) == meet(&oplus(x, y), &oplus(x, z)),
        ),
        ("semiring meet-oplus: annihilator", oplus(x, &one) == one && meet(x, &one) == *x),
        ("semiring join-odot: idempotent", join(x, x) == *x),
        (
            "semiring join-odot: monoid",
            odot(&odot(x, y), z) == odot(x, &odot(y, z)) && odot(x, &one) == *x && odot(x, y) == odot(y, x),
        ),
        (
            "semiring join-odot: distributive",
            odot(x, &join(y, z)) == join(&odot(x, y), &odot(x, z)),
        ),
        ("semiring join-odot: annihilator", odot(x, &zero) == zero && join(x, &zero) == *x),
    ];
    checks.iter().find(|(_, ok)| !ok).map(|(law, _)| *law)
}

impl fmt::Display for Bisemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.carrier {
            Carrier::Explicit(elems) => {
                let parts: Vec<String> = elems.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}} in {}", parts.join(", "), self.host)
            }
            Carrier::Theta => write!(f, "theta({})", self.host),
            Carrier::ThetaStar => write!(f, "theta*({})", self.host),
        }
    }
}
