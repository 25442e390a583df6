//! Deciding whether a finite ℓ-bisemiring is the θ of a V(C) algebra.

use std::collections::BTreeSet;

use crate::algebra::bisemiring::Bisemiring;
use crate::algebra::mv::MvValue;
use crate::error::{Error, Result};
use crate::report::{witness, CheckReport};

/// A finite structure `(S, ∧, ∨, ⊕, ⊙, 0, 1)` given by tables over `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBisemiring {
    pub labels: Vec<String>,
    pub zero: usize,
    pub one: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub oplus: Vec<Vec<usize>>,
    pub odot: Vec<Vec<usize>>,
}

impl FiniteBisemiring {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Tabulates an explicit carrier; operations that leave it are malformed.
    pub fn from_bisemiring(s: &Bisemiring) -> Result<Self> {
        if !s.is_explicit() {
            return Err(Error::Mode(format!("{s} has no explicit carrier")));
        }
        let elems = s.elements(0);
        let h = &s.host;
        let index = |v: &MvValue| {
            elems
                .iter()
                .position(|e| e == v)
                .ok_or_else(|| Error::Malformed(format!("{v} lies outside the carrier")))
        };
        let table = |op: &dyn Fn(&MvValue, &MvValue) -> MvValue| -> Result<Vec<Vec<usize>>> {
            elems
                .iter()
                .map(|x| elems.iter().map(|y| index(&op(x, y))).collect())
                .collect()
        };
        Ok(FiniteBisemiring {
            labels: elems.iter().map(ToString::to_string).collect(),
            zero: index(&h.zero())?,
            one: index(&h.one())?,
            meet: table(&|x, y| h.meet(x, y))?,
            join: table(&|x, y| h.join(x, y))?,
            oplus: table(&|x, y| h.oplus(x, y))?,
            odot: table(&|x, y| h.odot(x, y))?,
        })
    }

    fn validate(&self) -> Result<()> {
        let n = self.size();
        if n < 2 || self.zero == self.one {
            return Err(Error::Malformed("0 = 1 violates the bounded lattice axioms".into()));
        }
        if self.zero >= n || self.one >= n {
            return Err(Error::Malformed("constants outside the carrier".into()));
        }
        for (name, t) in [("meet", &self.meet), ("join", &self.join), ("oplus", &self.oplus), ("odot", &self.odot)] {
            if t.len() != n || t.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
                return Err(Error::Malformed(format!("{name} is not closed on the carrier")));
            }
        }
        Ok(())
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.meet[x][y] == x
    }
}

/// Checks the two predicates on `Inf(S) = {x : x² = 0}` and
/// `Bool(S) = {x : x² = x}`, then decides the finite case, where the answer
/// is yes exactly when `Inf(S) = {0}` and `Bool(S) = S` is Boolean.
pub fn recognize_theta_image(s: &FiniteBisemiring) -> Result<CheckReport> {
    s.validate()?;
    let n = s.size();
    let inf: BTreeSet<usize> = (0..n).filter(|&x| s.odot[x][x] == s.zero).collect();
    let boo: BTreeSet<usize> = (0..n).filter(|&x| s.odot[x][x] == x).collect();
    let label = |x: usize| s.labels[x].clone();
    let mut checked = 0;

    for &x in &inf {
        for &y in &inf {
            checked += 1;
            for (op, t) in [("oplus", &s.oplus), ("odot", &s.odot), ("meet", &s.meet), ("join", &s.join)] {
                if !inf.contains(&t[x][y]) {
                    return Ok(CheckReport::counterexample(
                        format!("Inf(S) closed under {op}"),
                        witness([("x", label(x)), ("y", label(y))]),
                        checked,
                    ));
                }
            }
        }
        for y in 0..n {
            checked += 1;
            if s.leq(y, x) && !inf.contains(&y) {
                return Ok(CheckReport::counterexample(
                    "Inf(S) downward closed",
                    witness([("x", label(x)), ("y", label(y))]),
                    checked,
                ));
            }
        }
    }

    for &x in &boo {
        checked += 1;
        let complemented = boo
            .iter()
            .any(|&y| s.join[x][y] == s.one && s.meet[x][y] == s.zero);
        if !complemented {
            return Ok(CheckReport::counterexample(
                "Bool(S) complemented",
                witness([("x", label(x))]),
                checked,
            ));
        }
        for &y in &boo {
            checked += 1;
            let ok = s.oplus[x][y] == s.join[x][y]
                && s.odot[x][y] == s.meet[x][y]
                && boo.contains(&s.join[x][y])
                && boo.contains(&s.meet[x][y]);
            if !ok {
                return Ok(CheckReport::counterexample(
                    "Bool(S) Boolean with join = oplus and meet = odot",
                    witness([("x", label(x)), ("y", label(y))]),
                    checked,
                ));
            }
        }
    }

    if let Some(&x) = inf.iter().find(|&&x| x != s.zero) {
        return Ok(CheckReport::counterexample(
            "finite case: Inf(S) = {0}",
            witness([("x", label(x))]),
            checked,
        ));
    }
    if let Some(x) = (0..n).find(|x| !boo.contains(x)) {
        return Ok(CheckReport::counterexample(
            "finite case: Bool(S) = S",
            witness([("x", label(x))]),
            checked,
        ));
    }
    Ok(CheckReport::valid(checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::bisemiring::Carrier;
    use crate::algebra::mv::MvAlgebra;
    use crate::functors::constructions::theta;

    fn whole(host: MvAlgebra) -> FiniteBisemiring {
        let s = Bisemiring {
            carrier: Carrier::Explicit(host.enumerate(0)),
            host,
        };
        FiniteBisemiring::from_bisemiring(&s).unwrap()
    }

    #[test]
    fn boolean_four_is_recognized() {
        let r = recognize_theta_image(&whole(MvAlgebra::boolean(2).unwrap())).unwrap();
        assert!(r.is_valid(), "{r}");
        let t = FiniteBisemiring::from_bisemiring(&theta(&MvAlgebra::boolean(3).unwrap())).unwrap();
        assert!(recognize_theta_image(&t).unwrap().is_valid());
    }

    #[test]
    fn three_chain_is_rejected_at_one_half() {
        let r = recognize_theta_image(&whole(MvAlgebra::FiniteChain { n: 3 })).unwrap();
        assert!(!r.is_valid());
        assert_eq!(r.law.as_deref(), Some("Inf(S) closed under oplus"));
        assert_eq!(r.witness.unwrap()["x"], "1/2");
    }

    #[test]
    fn degenerate_input_is_malformed() {
        let one_point = FiniteBisemiring {
            labels: vec!["0".into()],
            zero: 0,
            one: 0,
            meet: vec![vec![0]],
            join: vec![vec![0]],
            oplus: vec![vec![0]],
            odot: vec![vec![0]],
        };
        assert!(matches!(recognize_theta_image(&one_point), Err(Error::Malformed(_))));
    }

    #[test]
    fn unclosed_carrier_is_malformed() {
        let host = MvAlgebra::FiniteChain { n: 5 };
        let s = Bisemiring {
            carrier: Carrier::Explicit(vec![MvValue::scalar(0, 1), MvValue::scalar(1, 4), MvValue::scalar(1, 1)]),
            host,
        };
        assert!(matches!(FiniteBisemiring::from_bisemiring(&s), Err(Error::Malformed(_))));
    }
}
