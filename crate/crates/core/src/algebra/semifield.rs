//! Idempotent semifields `G ∪ {−∞}` built from lattice-ordered groups.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Semifield {
    /// Semiring addition is the lattice join, multiplication the group law.
    #[serde(rename = "trop_of_group")]
    TropOfGroup { group: LGroup },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropValue {
    /// The semiring zero.
    NegInf,
    Finite(GroupElem),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemifieldOp {
    Plus,
    Times,
    Inverse,
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropValue::NegInf => f.write_str("-inf"),
            TropValue::Finite(g) => write!(f, "{g}"),
        }
    }
}

impl Semifield {
    pub fn group(&self) -> &LGroup {
        match self {
            Semifield::TropOfGroup { group } => group,
        }
    }

    pub fn zero(&self) -> TropValue {
        TropValue::NegInf
    }

    /// Multiplicative identity: the group's neutral element.
    pub fn one(&self) -> TropValue {
        TropValue::Finite(self.group().zero())
    }

    pub fn contains(&self, x: &TropValue) -> bool {
        match x {
            TropValue::NegInf => true,
            TropValue::Finite(g) => self.group().contains(g),
        }
    }

    pub fn plus(&self, x: &TropValue, y: &TropValue) -> TropValue {
        match (x, y) {
            (TropValue::NegInf, v) | (v, TropValue::NegInf) => v.clone(),
            (TropValue::Finite(a), TropValue::Finite(b)) => {
                TropValue::Finite(self.group().join(a, b))
            }
        }
    }

    pub fn times(&self, x: &TropValue, y: &TropValue) -> TropValue {
        match (x, y) {
            (TropValue::Finite(a), TropValue::Finite(b)) => {
                TropValue::Finite(self.group().add(a, b))
            }
            _ => TropValue::NegInf,
        }
    }

    pub fn inverse(&self, x: &TropValue) -> Result<TropValue> {
        match x {
            TropValue::NegInf => Err(Error::Domain("-inf has no multiplicative inverse".into())),
            TropValue::Finite(a) => Ok(TropValue::Finite(self.group().neg(a))),
        }
    }

    /// Semiring order: `x <= y` iff `x + y = y`.
    pub fn leq(&self, x: &TropValue, y: &TropValue) -> bool {
        self.plus(x, y) == *y
    }

    /// Checked form of the semifield operations. `Inverse` ignores `y`.
    pub fn apply(&self, op: SemifieldOp, x: &TropValue, y: &TropValue) -> Result<TropValue> {
        for v in [x, y].into_iter().take(if op == SemifieldOp::Inverse { 1 } else { 2 }) {
            if !self.contains(v) {
                return Err(Error::Structural(format!("{v} is not an element of {self}")));
            }
        }
        match op {
            SemifieldOp::Plus => Ok(self.plus(x, y)),
            SemifieldOp::Times => Ok(self.times(x, y)),
            SemifieldOp::Inverse => self.inverse(x),
        }
    }

    /// `−∞` followed by the bounded fragment of the group.
    pub fn enumerate(&self, bound: u64) -> Vec<TropValue> {
        std::iter::once(TropValue::NegInf)
            .chain(self.group().enumerate(bound).into_iter().map(TropValue::Finite))
            .collect()
    }

    pub fn value_to_json(&self, x: &TropValue) -> Value {
        match x {
            TropValue::NegInf => Value::String("-inf".into()),
            TropValue::Finite(g) => self.group().elem_to_json(g),
        }
    }

    pub fn value_from_json(&self, v: &Value) -> Result<TropValue> {
        if v.as_str() == Some("-inf") {
            return Ok(TropValue::NegInf);
        }
        self.group().elem_from_json(v).map(TropValue::Finite)
    }
}

impl fmt::Display for Semifield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trop({})", self.group())
    }
}
