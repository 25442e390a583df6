//! Named, computable maps between MV-algebras and their restriction to θ.

use serde::{Deserialize, Serialize};

use crate::algebra::bisemiring::{in_theta, Bisemiring};
use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};
use crate::functors::constructions::theta;
use crate::rational::Rational;
use crate::report::{witness, CheckReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum MorphismRule {
    Identity,
    /// `(x_1, ..., x_k) ↦ x_index` out of a product.
    Projection { index: usize },
    /// `x ↦ 1`; not a homomorphism, kept as a negative control.
    ConstantOne,
    /// `Δ(r·)`: `(b, g) ↦ (b, r·g)` between `Δ` of rational subgroups.
    DeltaScale { factor: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MvMorphism {
    pub source: MvAlgebra,
    pub target: MvAlgebra,
    #[serde(flatten)]
    pub rule: MorphismRule,
}

/// A morphism restricted to `θ(source) → θ(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMorphism {
    pub source: Bisemiring,
    pub target: Bisemiring,
    pub underlying: MvMorphism,
}

impl MvMorphism {
    pub fn new(source: MvAlgebra, target: MvAlgebra, rule: MorphismRule) -> Result<Self> {
        let ok = match &rule {
            MorphismRule::Identity => source == target,
            MorphismRule::Projection { index } => match &source {
                MvAlgebra::Product { factors } => factors.get(*index) == Some(&target),
                _ => false,
            },
            MorphismRule::ConstantOne => true,
            MorphismRule::DeltaScale { factor } => {
                factor.is_positive()
                    && matches!(
                        (source.lex_group(), target.lex_group()),
                        (Some(LGroup::Integers | LGroup::QSubgroup { .. }), Some(LGroup::Integers | LGroup::QSubgroup { .. }))
                    )
            }
        };
        if !ok {
            return Err(Error::Structural(format!(
                "rule {rule:?} does not map {source} to {target}"
            )));
        }
        Ok(MvMorphism { source, target, rule })
    }

    pub fn apply(&self, x: &MvValue) -> Result<MvValue> {
        self.source.require(x)?;
        let y = match (&self.rule, x) {
            (MorphismRule::Identity, _) => x.clone(),
            (MorphismRule::Projection { index }, MvValue::Tuple(xs)) => xs[*index].clone(),
            (MorphismRule::ConstantOne, _) => self.target.one(),
            (MorphismRule::DeltaScale { factor }, MvValue::Lex { top, offset: GroupElem::Scalar(g) }) => {
                MvValue::Lex {
                    top: *top,
                    offset: GroupElem::Scalar(g * factor),
                }
            }
            _ => return Err(Error::Structural(format!("{x} does not match rule {:?}", self.rule))),
        };
        if !self.target.contains(&y) {
            return Err(Error::BrokenHom(format!("{x} is sent to {y}, outside {}", self.target)));
        }
        Ok(y)
    }

    /// Preservation of `0`, `¬` and `⊕` over the bounded fragment of the source.
    pub fn verify_homomorphism(&self, bound: u64) -> Result<CheckReport> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(&s.zero())? != t.zero() {
            return Ok(CheckReport::counterexample("preserves 0", witness([("x", s.zero())]), 1));
        }
        let elems = s.enumerate(bound);
        let mut checked = 1;
        for x in &elems {
            checked += 1;
            let hx = self.apply(x)?;
            if self.apply(&s.neg(x))? != t.neg(&hx) {
                return Ok(CheckReport::counterexample("preserves negation", witness([("x", x)]), checked));
            }
            for y in &elems {
                checked += 1;
                if self.apply(&s.oplus(x, y))? != t.oplus(&hx, &self.apply(y)?) {
                    return Ok(CheckReport::counterexample(
                        "preserves oplus",
                        witness([("x", x), ("y", y)]),
                        checked,
                    ));
                }
            }
        }
        Ok(if s.is_finite() {
            CheckReport::valid(checked)
        } else {
            CheckReport::valid_up_to_bound(checked).with_detail("bound", bound)
        })
    }
}

/// `θ(h)`: the restriction of a homomorphism to `θ(source) → θ(target)`.
///
/// `h` is first checked on the bounded fragment; a failure is reported as
/// [`Error::NotHomomorphism`]. Any fragment element of `θ(source)` landing
/// outside `θ(target)` is reported as [`Error::BrokenHom`].
pub fn theta_on_morphism(h: &MvMorphism, bound: u64) -> Result<ThetaMorphism> {
    let report = h.verify_homomorphism(bound)?;
    if !report.is_valid() {
        return Err(Error::NotHomomorphism(format!(
            "{:?} fails {} at {:?}",
            h.rule,
            report.law.unwrap_or_default(),
            report.witness.unwrap_or_default()
        )));
    }
    let source = theta(&h.source);
    for x in source.elements(bound) {
        let y = h.apply(&x)?;
        if !in_theta(&h.target, &y) {
            return Err(Error::BrokenHom(format!(
                "{x} lies in θ({}) but its image {y} is outside θ({})",
                h.source, h.target
            )));
        }
    }
    Ok(ThetaMorphism {
        source,
        target: theta(&h.target),
        underlying: h.clone(),
    })
}

impl ThetaMorphism {
    /// Preservation of `⊕, ⊙, ∧, ∨` on pairs of the bounded θ fragment.
    pub fn verify(&self, bound: u64) -> Result<CheckReport> {
        let (s, t) = (&self.source.host, &self.target.host);
        let h = &self.underlying;
        let elems = self.source.elements(bound);
        let mut checked = 0;
        for (x, y) in elems.iter().flat_map(|x| elems.iter().map(move |y| (x.clone(), y.clone()))) {
            checked += 1;
            let (hx, hy) = (h.apply(&x)?, h.apply(&y)?);
            let pairs = [
                ("oplus", h.apply(&s.oplus(&x, &y))?, t.oplus(&hx, &hy)),
                ("odot", h.apply(&s.odot(&x, &y))?, t.odot(&hx, &hy)),
                ("meet", h.apply(&s.meet(&x, &y))?, t.meet(&hx, &hy)),
                ("join", h.apply(&s.join(&x, &y))?, t.join(&hx, &hy)),
            ];
            if let Some((op, _, _)) = pairs.iter().find(|(_, a, b)| a != b) {
                return Ok(CheckReport::counterexample(
                    format!("preserves {op}"),
                    witness([("x", &x), ("y", &y)]),
                    checked,
                ));
            }
        }
        Ok(CheckReport::valid_up_to_bound(checked).with_detail("bound", bound))
    }
}
