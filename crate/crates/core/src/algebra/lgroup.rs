//! Abelian lattice-ordered groups: the integers, subgroups of the rationals,
//! lexicographic products `Z ×lex G`, and the trivial group.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::qpoints::Characteristic;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum LGroup {
    #[serde(rename = "integers")]
    Integers,
    #[serde(rename = "q_subgroup")]
    QSubgroup { chi: Characteristic },
    /// `Z ×lex G`, ordered by the integer coordinate first.
    #[serde(rename = "lex_zg")]
    LexZG { group: Box<LGroup> },
    #[serde(rename = "trivial")]
    TrivialGroup,
}

/// Element of an [`LGroup`]. Integers, rational subgroups and the trivial
/// group use `Scalar`; `Z ×lex G` uses `Lex`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElem {
    Scalar(Rational),
    Lex(BigInt, Box<GroupElem>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LGroupOp {
    Add,
    Negate,
    Meet,
    Join,
}

pub(crate) static INTEGERS: LGroup = LGroup::Integers;

impl GroupElem {
    pub fn int(n: i64) -> Self {
        GroupElem::Scalar(Rational::from(n))
    }

    pub fn lex(a: i64, rest: GroupElem) -> Self {
        GroupElem::Lex(BigInt::from(a), Box::new(rest))
    }

    pub fn as_scalar(&self) -> Option<&Rational> {
        match self {
            GroupElem::Scalar(q) => Some(q),
            GroupElem::Lex(..) => None,
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElem::Scalar(q) => write!(f, "{q}"),
            GroupElem::Lex(a, g) => write!(f, "({a},{g})"),
        }
    }
}

impl LGroup {
    /// The subgroup of `Q` with characteristic `chi`; the integers get
    /// their own variant.
    pub fn q_subgroup(chi: Characteristic) -> Self {
        if chi == Characteristic::integers() {
            LGroup::Integers
        } else {
            LGroup::QSubgroup { chi }
        }
    }

    pub fn lex(inner: LGroup) -> Self {
        LGroup::LexZG {
            group: Box::new(inner),
        }
    }

    pub fn zero(&self) -> GroupElem {
        match self {
            LGroup::LexZG { group } => GroupElem::Lex(BigInt::zero(), Box::new(group.zero())),
            _ => GroupElem::Scalar(Rational::zero()),
        }
    }

    pub fn contains(&self, x: &GroupElem) -> bool {
        match (self, x) {
            (LGroup::Integers, GroupElem::Scalar(q)) => q.is_integer(),
            (LGroup::QSubgroup { chi }, GroupElem::Scalar(q)) => chi.contains(q),
            (LGroup::TrivialGroup, GroupElem::Scalar(q)) => q.is_zero(),
            (LGroup::LexZG { group }, GroupElem::Lex(_, g)) => group.contains(g),
            _ => false,
        }
    }

    fn require(&self, x: &GroupElem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Structural(format!("{x} is not an element of {self}")))
        }
    }

    pub fn add(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        match (self, x, y) {
            (LGroup::LexZG { group }, GroupElem::Lex(a, g), GroupElem::Lex(b, h)) => {
                GroupElem::Lex(a + b, Box::new(group.add(g, h)))
            }
            (_, GroupElem::Scalar(p), GroupElem::Scalar(q)) => GroupElem::Scalar(p + q),
            _ => panic!("mismatched group element shapes: {x} + {y}"),
        }
    }

    pub fn neg(&self, x: &GroupElem) -> GroupElem {
        match (self, x) {
            (LGroup::LexZG { group }, GroupElem::Lex(a, g)) => {
                GroupElem::Lex(-a, Box::new(group.neg(g)))
            }
            (_, GroupElem::Scalar(q)) => GroupElem::Scalar(-q),
            _ => panic!("mismatched group element shape: -{x}"),
        }
    }

    pub fn sub(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        self.add(x, &self.neg(y))
    }

    /// The group order. Every shipped group is totally ordered, so this is total.
    pub fn compare(&self, x: &GroupElem, y: &GroupElem) -> Ordering {
        match (self, x, y) {
            (LGroup::LexZG { group }, GroupElem::Lex(a, g), GroupElem::Lex(b, h)) => {
                a.cmp(b).then_with(|| group.compare(g, h))
            }
            (_, GroupElem::Scalar(p), GroupElem::Scalar(q)) => p.cmp(q),
            _ => panic!("mismatched group element shapes: {x} vs {y}"),
        }
    }

    pub fn leq(&self, x: &GroupElem, y: &GroupElem) -> bool {
        self.compare(x, y) != Ordering::Greater
    }

    pub fn meet(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        match (self, x, y) {
            (LGroup::LexZG { group }, GroupElem::Lex(a, g), GroupElem::Lex(b, h)) => {
                match a.cmp(b) {
                    Ordering::Less => x.clone(),
                    Ordering::Greater => y.clone(),
                    Ordering::Equal => GroupElem::Lex(a.clone(), Box::new(group.meet(g, h))),
                }
            }
            (_, GroupElem::Scalar(p), GroupElem::Scalar(q)) => {
                GroupElem::Scalar(p.clone().min(q.clone()))
            }
            _ => panic!("mismatched group element shapes: {x} ∧ {y}"),
        }
    }

    pub fn join(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        let nx = self.neg(x);
        let ny = self.neg(y);
        self.neg(&self.meet(&nx, &ny))
    }

    pub fn is_positive(&self, x: &GroupElem) -> bool {
        self.compare(x, &self.zero()) == Ordering::Greater
    }

    pub fn is_nonnegative(&self, x: &GroupElem) -> bool {
        self.compare(x, &self.zero()) != Ordering::Less
    }

    /// Strong unit test: `u > 0` and every element lies below some `n·u`.
    ///
    /// Rational subgroups are archimedean, so any positive element qualifies;
    /// in `Z ×lex G` a unit needs a positive integer coordinate.
    pub fn is_strong_unit(&self, u: &GroupElem) -> bool {
        if !self.contains(u) || !self.is_positive(u) {
            return false;
        }
        match (self, u) {
            (LGroup::LexZG { .. }, GroupElem::Lex(a, _)) => a.is_positive(),
            _ => true,
        }
    }

    /// Checked form of the four lattice-group operations. `Negate` ignores `y`.
    pub fn apply(&self, op: LGroupOp, x: &GroupElem, y: &GroupElem) -> Result<GroupElem> {
        self.require(x)?;
        if op != LGroupOp::Negate {
            self.require(y)?;
        }
        Ok(match op {
            LGroupOp::Add => self.add(x, y),
            LGroupOp::Negate => self.neg(x),
            LGroupOp::Meet => self.meet(x, y),
            LGroupOp::Join => self.join(x, y),
        })
    }

    /// Bounded fragment in increasing order.
    ///
    /// Integer coordinates range over `[-bound, bound]`; rational subgroups
    /// contribute every member with denominator at most `bound` and absolute
    /// value at most `bound`.
    pub fn enumerate(&self, bound: u64) -> Vec<GroupElem> {
        let b = bound as i64;
        match self {
            LGroup::Integers => (-b..=b).map(GroupElem::int).collect(),
            LGroup::TrivialGroup => vec![self.zero()],
            LGroup::QSubgroup { chi } => {
                let mut out: Vec<Rational> = Vec::new();
                for d in 1..=b {
                    if !chi.contains(&Rational::new(1, d)) {
                        continue;
                    }
                    for k in -b * d..=b * d {
                        if k.gcd(&d) == 1 || (k == 0 && d == 1) {
                            out.push(Rational::new(k, d));
                        }
                    }
                }
                out.sort();
                out.into_iter().map(GroupElem::Scalar).collect()
            }
            LGroup::LexZG { group } => {
                let inner = group.enumerate(bound);
                (-b..=b)
                    .flat_map(|a| {
                        inner
                            .iter()
                            .map(move |g| GroupElem::Lex(BigInt::from(a), Box::new(g.clone())))
                    })
                    .collect()
            }
        }
    }

    /// Nonnegative part of [`LGroup::enumerate`].
    pub fn enumerate_cone(&self, bound: u64) -> Vec<GroupElem> {
        self.enumerate(bound)
            .into_iter()
            .filter(|g| self.is_nonnegative(g))
            .collect()
    }

    pub fn elem_to_json(&self, x: &GroupElem) -> Value {
        match x {
            GroupElem::Scalar(q) => Value::String(q.to_string()),
            GroupElem::Lex(a, g) => {
                let inner = match self {
                    LGroup::LexZG { group } => group.elem_to_json(g),
                    _ => Value::Null,
                };
                Value::Array(vec![Value::String(a.to_string()), inner])
            }
        }
    }

    pub fn elem_from_json(&self, v: &Value) -> Result<GroupElem> {
        let bad = || Error::Structural(format!("cannot read {v} as an element of {self}"));
        let x = match (self, v) {
            (LGroup::LexZG { group }, Value::Array(items)) if items.len() == 2 => {
                let a: BigInt = items[0]
                    .as_str()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(bad)?;
                GroupElem::Lex(a, Box::new(group.elem_from_json(&items[1])?))
            }
            (LGroup::LexZG { .. }, _) => return Err(bad()),
            (_, Value::String(s)) => GroupElem::Scalar(s.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        self.require(&x)?;
        Ok(x)
    }

    pub fn shorthand(&self) -> String {
        match self {
            LGroup::Integers => "Z".into(),
            LGroup::QSubgroup { chi } => chi.shorthand(),
            LGroup::LexZG { group } => format!("lex:{}", group.shorthand()),
            LGroup::TrivialGroup => "trivial".into(),
        }
    }
}

impl fmt::Display for LGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shorthand())
    }
}
