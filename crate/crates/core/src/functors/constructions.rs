//! Γ, Δ, Trop, Detrop, θ and θ* on descriptors.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::algebra::bisemiring::{in_theta, in_theta_star, Bisemiring, Carrier};
use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::algebra::semifield::{Semifield, TropValue};
use crate::error::{Error, Result};
use crate::qpoints::Characteristic;
use crate::rational::Rational;

/// `Γ(G, u)`: the interval `[0, u]` with `x ⊕ y = (x + y) ∧ u`, `¬x = u − x`.
///
/// The result is returned as the isomorphic shipped descriptor; use
/// [`gamma_embed`] to carry group elements of `[0, u]` into it.
pub fn gamma(group: &LGroup, u: &GroupElem) -> Result<MvAlgebra> {
    if !group.contains(u) {
        return Err(Error::Structural(format!("{u} is not an element of {group}")));
    }
    if !group.is_positive(u) {
        return Err(Error::Domain(format!("unit {u} must be positive in {group}")));
    }
    if !group.is_strong_unit(u) {
        return Err(Error::Domain(format!("{u} is not a strong unit of {group}")));
    }
    match (group, u) {
        (LGroup::Integers, GroupElem::Scalar(n)) => chain_of_length(n),
        (LGroup::QSubgroup { chi }, GroupElem::Scalar(q)) => {
            if let Some(d) = chi.cyclic_denominator() {
                chain_of_length(&(q * &Rational::from(d)))
            } else if *chi == Characteristic::rationals() {
                Ok(MvAlgebra::RationalInterval)
            } else {
                Err(Error::Unsupported(format!(
                    "Γ({}, {q}) has no shipped descriptor; only cyclic groups and Q are covered",
                    chi.shorthand()
                )))
            }
        }
        (LGroup::LexZG { group: inner }, GroupElem::Lex(a, _)) => {
            if a.is_one() {
                Ok(delta(inner))
            } else {
                Err(Error::Unsupported(format!(
                    "Γ({group}, {u}) with integer coordinate {a} is not perfect and has no shipped descriptor"
                )))
            }
        }
        _ => Err(Error::Structural(format!("{u} does not match {group}"))),
    }
}

fn chain_of_length(n: &Rational) -> Result<MvAlgebra> {
    let steps = n
        .to_u64()
        .and_then(|k| u32::try_from(k).ok())
        .filter(|k| *k < u32::MAX)
        .ok_or_else(|| Error::Unsupported(format!("unit {n} is too large for a chain")))?;
    MvAlgebra::chain(steps + 1)
}

/// Image of `x ∈ [0, u]` in the descriptor returned by [`gamma`].
pub fn gamma_embed(group: &LGroup, u: &GroupElem, x: &GroupElem) -> Result<MvValue> {
    let alg = gamma(group, u)?;
    if !group.contains(x) || !group.is_nonnegative(x) || !group.leq(x, u) {
        return Err(Error::Domain(format!("{x} is outside [0, {u}]")));
    }
    let value = match (group, u, x) {
        (LGroup::Integers | LGroup::QSubgroup { .. }, GroupElem::Scalar(u), GroupElem::Scalar(x)) => {
            MvValue::Scalar(x / u)
        }
        (LGroup::LexZG { group: inner }, GroupElem::Lex(_, h), GroupElem::Lex(a, g)) => {
            // (a, g) ↦ (a, g − a·h) carries Γ(Z ×lex G, (1, h)) onto Δ(G)
            let shift = if a.is_positive() {
                inner.sub(g, h)
            } else {
                (**g).clone()
            };
            MvValue::Lex {
                top: a.is_one(),
                offset: shift,
            }
        }
        _ => return Err(Error::Structural(format!("{x} does not match {group}"))),
    };
    alg.require(&value)?;
    Ok(value)
}

/// `Δ(G) = Γ(Z ×lex G, (1, 0))`; `Δ(Z)` is Chang's algebra.
pub fn delta(group: &LGroup) -> MvAlgebra {
    match group {
        LGroup::Integers => MvAlgebra::Chang,
        g => MvAlgebra::DeltaOfGroup { group: g.clone() },
    }
}

/// The base group of an algebra built by [`delta`].
pub fn delta_inverse(p: &MvAlgebra) -> Result<LGroup> {
    p.lex_group().cloned().ok_or_else(|| {
        Error::Unsupported(format!(
            "{p} was not built by delta; general inverses are not supported"
        ))
    })
}

pub fn trop(group: &LGroup) -> Semifield {
    Semifield::TropOfGroup {
        group: group.clone(),
    }
}

pub fn detrop(s: &Semifield) -> LGroup {
    s.group().clone()
}

/// The MV-algebra `Γ(Detrop(S), u)` of a semifield with strong unit `u`.
pub fn mv_from_semifield(s: &Semifield, u: &TropValue) -> Result<MvAlgebra> {
    match u {
        TropValue::NegInf => Err(Error::Domain("-inf cannot be a strong unit".into())),
        TropValue::Finite(g) => gamma(&detrop(s), g),
    }
}

/// `θ(A) = {x : x >= 2x²}`, materialized when `A` is finite.
pub fn theta(a: &MvAlgebra) -> Bisemiring {
    restrict(a, Carrier::Theta, in_theta)
}

/// `θ*(A) = {x : x <= 2x²}`, materialized when `A` is finite.
pub fn theta_star(a: &MvAlgebra) -> Bisemiring {
    restrict(a, Carrier::ThetaStar, in_theta_star)
}

fn restrict(a: &MvAlgebra, predicate: Carrier, keep: fn(&MvAlgebra, &MvValue) -> bool) -> Bisemiring {
    let carrier = if a.is_finite() {
        Carrier::Explicit(a.enumerate(0).into_iter().filter(|x| keep(a, x)).collect())
    } else {
        predicate
    };
    Bisemiring {
        host: a.clone(),
        carrier,
    }
}

/// Idempotents `x = x ⊕ x` among the elements of the bounded fragment.
pub fn boolean_part(a: &MvAlgebra, bound: u64) -> Vec<MvValue> {
    a.enumerate(bound)
        .into_iter()
        .filter(|x| a.is_boolean(x))
        .collect()
}

/// Positive unit `1` of a subgroup of `Q`, or `(1, 0)` of a lex product.
pub fn standard_unit(group: &LGroup) -> Option<GroupElem> {
    match group {
        LGroup::Integers | LGroup::QSubgroup { .. } => Some(GroupElem::int(1)),
        LGroup::LexZG { group } => Some(GroupElem::Lex(BigInt::one(), Box::new(group.zero()))),
        LGroup::TrivialGroup => None,
    }
}
