use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};

/// An element together with the algebra it inhabits.
///
/// Binary operations refuse operands from different algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MvElement {
    algebra: Arc<MvAlgebra>,
    value: MvValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MvConnective {
    Odot,
    Ominus,
    Meet,
    Join,
    Implies,
}

/// Verdict of an infinitesimality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Infinitesimality {
    /// Decided from the representation.
    Exact(bool),
    /// Only `n·x <= ¬x` for `n <= horizon` was checked.
    UpToHorizon { holds: bool, horizon: u32 },
}

impl Infinitesimality {
    pub fn holds(self) -> bool {
        match self {
            Infinitesimality::Exact(b) => b,
            Infinitesimality::UpToHorizon { holds, .. } => holds,
        }
    }
}

impl MvElement {
    pub fn new(algebra: impl Into<Arc<MvAlgebra>>, value: MvValue) -> Result<Self> {
        let algebra = algebra.into();
        algebra.require(&value)?;
        Ok(MvElement { algebra, value })
    }

    pub fn zero(algebra: impl Into<Arc<MvAlgebra>>) -> Self {
        let algebra = algebra.into();
        let value = algebra.zero();
        MvElement { algebra, value }
    }

    pub fn one(algebra: impl Into<Arc<MvAlgebra>>) -> Self {
        let algebra = algebra.into();
        let value = algebra.one();
        MvElement { algebra, value }
    }

    pub fn algebra(&self) -> &MvAlgebra {
        &self.algebra
    }

    pub fn value(&self) -> &MvValue {
        &self.value
    }

    pub fn into_value(self) -> MvValue {
        self.value
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::Structural(format!(
                "operands live in different algebras: {} and {}",
                self.algebra, other.algebra
            )))
        }
    }

    fn with(&self, value: MvValue) -> Self {
        MvElement {
            algebra: Arc::clone(&self.algebra),
            value,
        }
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.with(self.algebra.oplus(&self.value, &other.value)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.algebra.neg(&self.value))
    }

    pub fn derived(&self, other: &Self, which: MvConnective) -> Result<Self> {
        self.same_algebra(other)?;
        let a = &self.algebra;
        let (x, y) = (&self.value, &other.value);
        Ok(self.with(match which {
            MvConnective::Odot => a.odot(x, y),
            MvConnective::Ominus => a.ominus(x, y),
            MvConnective::Meet => a.meet(x, y),
            MvConnective::Join => a.join(x, y),
            MvConnective::Implies => a.implies(x, y),
        }))
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_algebra(other)?;
        Ok(self.algebra.leq(&self.value, &other.value))
    }

    pub fn is_boolean(&self) -> bool {
        self.algebra.is_boolean(&self.value)
    }

    /// Exact where the representation decides; otherwise checks `n·x <= ¬x` up to `horizon`.
    pub fn is_infinitesimal(&self, horizon: u32) -> Infinitesimality {
        match self.algebra.is_infinitesimal_exact(&self.value) {
            Some(b) => Infinitesimality::Exact(b),
            None => Infinitesimality::UpToHorizon {
                holds: self.algebra.infinitesimal_up_to(&self.value, horizon),
                horizon,
            },
        }
    }

    /// `{"algebra": descriptor, "payload": ...}`.
    pub fn to_json(&self) -> Value {
        json!({
            "algebra": serde_json::to_value(&*self.algebra).expect("descriptor serializes"),
            "payload": self.algebra.value_to_json(&self.value),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let algebra: MvAlgebra = serde_json::from_value(v["algebra"].clone())
            .map_err(|e| Error::Structural(format!("bad algebra descriptor: {e}")))?;
        algebra.validate()?;
        let value = algebra.value_from_json(&v["payload"])?;
        Ok(MvElement {
            algebra: Arc::new(algebra),
            value,
        })
    }
}

impl fmt::Display for MvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
