//! Positive cones with a top element, and the functors landing in them.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::algebra::bisemiring::in_theta;
use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::algebra::semifield::Semifield;
use crate::error::{Error, Result};
use crate::functors::constructions::{delta, delta_inverse, detrop, theta};
use crate::report::{witness, CheckReport};

/// `G⁺ ∪ {⊤}` for an ℓ-group `G`.
///
/// Addition is the group law with `⊤` absorbing, `∧`/`∨` are min and max
/// with `⊤` on top, and `⊙` has `⊤` as unit and sends any two finite
/// elements to `0`. These mirror `⊕, ∧, ∨, ⊙` on `Rad(P) ∪ {1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopCone {
    pub base_group: LGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConeValue {
    Finite(GroupElem),
    Top,
}

pub const TOP_SYMBOL: &str = "⊤";

impl fmt::Display for ConeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeValue::Finite(g) => write!(f, "{g}"),
            ConeValue::Top => f.write_str(TOP_SYMBOL),
        }
    }
}

impl TopCone {
    pub fn new(base_group: LGroup) -> Self {
        TopCone { base_group }
    }

    pub fn zero(&self) -> ConeValue {
        ConeValue::Finite(self.base_group.zero())
    }

    pub fn contains(&self, x: &ConeValue) -> bool {
        match x {
            ConeValue::Top => true,
            ConeValue::Finite(g) => self.base_group.contains(g) && self.base_group.is_nonnegative(g),
        }
    }

    pub fn add(&self, x: &ConeValue, y: &ConeValue) -> ConeValue {
        match (x, y) {
            (ConeValue::Finite(a), ConeValue::Finite(b)) => ConeValue::Finite(self.base_group.add(a, b)),
            _ => ConeValue::Top,
        }
    }

    pub fn odot(&self, x: &ConeValue, y: &ConeValue) -> ConeValue {
        match (x, y) {
            (ConeValue::Top, v) | (v, ConeValue::Top) => v.clone(),
            _ => self.zero(),
        }
    }

    pub fn leq(&self, x: &ConeValue, y: &ConeValue) -> bool {
        match (x, y) {
            (_, ConeValue::Top) => true,
            (ConeValue::Top, ConeValue::Finite(_)) => false,
            (ConeValue::Finite(a), ConeValue::Finite(b)) => self.base_group.leq(a, b),
        }
    }

    pub fn meet(&self, x: &ConeValue, y: &ConeValue) -> ConeValue {
        if self.leq(x, y) { x } else { y }.clone()
    }

    pub fn join(&self, x: &ConeValue, y: &ConeValue) -> ConeValue {
        if self.leq(x, y) { y } else { x }.clone()
    }

    /// Bounded cone fragment in increasing order, then `⊤`.
    pub fn enumerate(&self, bound: u64) -> Vec<ConeValue> {
        self.base_group
            .enumerate_cone(bound)
            .into_iter()
            .map(ConeValue::Finite)
            .chain(std::iter::once(ConeValue::Top))
            .collect()
    }

    pub fn value_to_json(&self, x: &ConeValue) -> Value {
        match x {
            ConeValue::Top => Value::String(TOP_SYMBOL.into()),
            ConeValue::Finite(g) => self.base_group.elem_to_json(g),
        }
    }

    /// `{"base_group": ..., "elements": [...], "top": "⊤"}` over the bounded fragment.
    pub fn to_json(&self, bound: u64) -> Value {
        let elements: Vec<Value> = self
            .base_group
            .enumerate_cone(bound)
            .iter()
            .map(|g| self.base_group.elem_to_json(g))
            .collect();
        json!({
            "base_group": serde_json::to_value(&self.base_group).expect("descriptor serializes"),
            "elements": elements,
            "top": TOP_SYMBOL,
        })
    }
}

impl fmt::Display for TopCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone({}) with {TOP_SYMBOL}", self.base_group)
    }
}

/// `θ(P) = Rad(P) ∪ {1}` read as the cone of `Δ⁻¹(P)` with a top.
pub fn theta_perfect(p: &MvAlgebra) -> Result<TopCone> {
    Ok(TopCone::new(delta_inverse(p)?))
}

pub fn theta_perfect_inverse(t: &TopCone) -> MvAlgebra {
    delta(&t.base_group)
}

/// `F(S) = θ(Δ(Detrop(S)))`.
pub fn f_equiv(s: &Semifield) -> Result<TopCone> {
    theta_perfect(&delta(&detrop(s)))
}

/// The canonical map `θ(P) → cone`: `(0, g) ↦ g` and `1 ↦ ⊤`.
pub fn theta_to_cone(p: &MvAlgebra, cone: &TopCone, x: &MvValue) -> Result<ConeValue> {
    if !in_theta(p, x) {
        return Err(Error::Domain(format!("{x} is not in θ({p})")));
    }
    let v = match x {
        MvValue::Lex { top: true, .. } if *x == p.one() => ConeValue::Top,
        MvValue::Lex { top: false, offset } => ConeValue::Finite(offset.clone()),
        _ => return Err(Error::Unsupported(format!("{x} is not an element of a perfect algebra"))),
    };
    if !cone.contains(&v) {
        return Err(Error::Domain(format!("{v} is not in {cone}")));
    }
    Ok(v)
}

/// Checks that [`theta_to_cone`] is a bijection between the bounded
/// fragments of `θ(host)` and `cone`, preserving order and `⊕, ⊙, ∧, ∨`.
pub fn verify_cone_iso(cone: &TopCone, host: &MvAlgebra, bound: u64) -> Result<CheckReport> {
    let elems = theta(host).elements(bound);
    let images: Vec<ConeValue> = elems
        .iter()
        .map(|x| theta_to_cone(host, cone, x))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<String> = images.iter().map(ToString::to_string).collect();
    if distinct.len() != images.len() {
        return Ok(CheckReport::counterexample("injective", witness([("bound", bound)]), 0));
    }
    let target: BTreeSet<String> = cone.enumerate(bound).iter().map(ToString::to_string).collect();
    if distinct != target {
        let missing = target.symmetric_difference(&distinct).next().cloned().unwrap_or_default();
        return Ok(CheckReport::counterexample("surjective", witness([("unmatched", missing)]), 0));
    }
    let mut checked = 0;
    for (x, fx) in elems.iter().zip(&images) {
        for (y, fy) in elems.iter().zip(&images) {
            checked += 1;
            let laws = [
                ("order", host.leq(x, y) == cone.leq(fx, fy)),
                ("oplus", theta_to_cone(host, cone, &host.oplus(x, y))? == cone.add(fx, fy)),
                ("odot", theta_to_cone(host, cone, &host.odot(x, y))? == cone.odot(fx, fy)),
                ("meet", theta_to_cone(host, cone, &host.meet(x, y))? == cone.meet(fx, fy)),
                ("join", theta_to_cone(host, cone, &host.join(x, y))? == cone.join(fx, fy)),
            ];
            if let Some((law, _)) = laws.iter().find(|(_, ok)| !ok) {
                return Ok(CheckReport::counterexample(
                    format!("preserves {law}"),
                    witness([("x", x), ("y", y)]),
                    checked,
                ));
            }
        }
    }
    Ok(CheckReport::valid_up_to_bound(checked).with_detail("bound", bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::constructions::trop;
    use crate::qpoints::Characteristic;
    use crate::rational::Rational;

    fn dq() -> MvAlgebra {
        delta(&LGroup::q_subgroup(Characteristic::rationals()))
    }

    #[test]
    fn theta_perfect_of_chang_is_the_naturals() {
        let t = theta_perfect(&MvAlgebra::Chang).unwrap();
        assert_eq!(t.base_group, LGroup::Integers);
        let e = t.enumerate(3);
        assert_eq!(e.len(), 5);
        assert_eq!(e[4], ConeValue::Top);
        assert_eq!(t.add(&e[1], &e[2]), ConeValue::Finite(GroupElem::int(3)));
        assert_eq!(t.add(&e[1], &ConeValue::Top), ConeValue::Top);
    }

    #[test]
    fn theta_perfect_of_delta_q_is_nonnegative_rationals() {
        let t = theta_perfect(&dq()).unwrap();
        assert!(t.contains(&ConeValue::Finite(GroupElem::Scalar(Rational::new(2, 7)))));
        assert!(!t.contains(&ConeValue::Finite(GroupElem::Scalar(Rational::new(-2, 7)))));
    }

    #[test]
    fn degenerate_cone() {
        let t = theta_perfect(&delta(&LGroup::TrivialGroup)).unwrap();
        assert_eq!(t.enumerate(9), vec![ConeValue::Finite(GroupElem::int(0)), ConeValue::Top]);
        assert_eq!(theta_perfect_inverse(&t), MvAlgebra::DeltaOfGroup { group: LGroup::TrivialGroup });
        assert_eq!(theta_perfect_inverse(&t).cardinality(), Some(2));
    }

    #[test]
    fn round_trips() {
        for p in [MvAlgebra::Chang, dq()] {
            assert_eq!(theta_perfect_inverse(&theta_perfect(&p).unwrap()), p);
        }
        let t = TopCone::new(LGroup::q_subgroup(Characteristic::rationals()));
        assert_eq!(theta_perfect(&theta_perfect_inverse(&t)).unwrap(), t);
    }

    #[test]
    fn theta_perfect_rejects_chains() {
        assert!(matches!(
            theta_perfect(&MvAlgebra::FiniteChain { n: 3 }),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn f_equiv_examples() {
        assert_eq!(f_equiv(&trop(&LGroup::Integers)).unwrap(), theta_perfect(&MvAlgebra::Chang).unwrap());
        assert_eq!(f_equiv(&trop(&LGroup::TrivialGroup)).unwrap().enumerate(4).len(), 2);
        let dy = f_equiv(&trop(&LGroup::q_subgroup(Characteristic::localization(&[2]).unwrap()))).unwrap();
        assert!(dy.contains(&ConeValue::Finite(GroupElem::Scalar(Rational::new(3, 8)))));
        assert!(!dy.contains(&ConeValue::Finite(GroupElem::Scalar(Rational::new(1, 3)))));
    }

    #[test]
    fn cone_iso_with_theta_of_chang() {
        let cone = f_equiv(&trop(&LGroup::Integers)).unwrap();
        let r = verify_cone_iso(&cone, &MvAlgebra::Chang, 8).unwrap();
        assert!(r.is_valid(), "{r}");
        assert_eq!(r.checked, 100);
    }

    #[test]
    fn cone_iso_detects_a_wrong_cone() {
        let cone = TopCone::new(LGroup::TrivialGroup);
        assert!(verify_cone_iso(&cone, &MvAlgebra::Chang, 3).is_err());
    }

    #[test]
    fn json_form() {
        let t = theta_perfect(&MvAlgebra::Chang).unwrap();
        assert_eq!(
            t.to_json(2).to_string(),
            r#"{"base_group":{"kind":"integers"},"elements":["0","1","2"],"top":"⊤"}"#
        );
    }
}
