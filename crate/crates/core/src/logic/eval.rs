//! Evaluation of terms in an MV-algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::element::MvElement;
use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};
use crate::logic::term::Term;

/// Assignment of elements of one algebra to variable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    algebra: Arc<MvAlgebra>,
    bindings: BTreeMap<String, MvValue>,
}

impl Valuation {
    pub fn new(algebra: impl Into<Arc<MvAlgebra>>, bindings: BTreeMap<String, MvValue>) -> Result<Self> {
        let algebra = algebra.into();
        for v in bindings.values() {
            algebra.require(v)?;
        }
        Ok(Valuation { algebra, bindings })
    }

    pub fn empty(algebra: impl Into<Arc<MvAlgebra>>) -> Self {
        Valuation {
            algebra: algebra.into(),
            bindings: BTreeMap::new(),
        }
    }

    pub fn algebra(&self) -> &MvAlgebra {
        &self.algebra
    }

    pub fn bindings(&self) -> &BTreeMap<String, MvValue> {
        &self.bindings
    }

    pub fn bind(&mut self, name: impl Into<String>, value: MvValue) -> Result<()> {
        self.algebra.require(&value)?;
        self.bindings.insert(name.into(), value);
        Ok(())
    }
}

/// Evaluates `t` with variables looked up by `lookup`.
pub fn eval_with<'a, F>(alg: &MvAlgebra, t: &Term, lookup: &F) -> Result<MvValue>
where
    F: Fn(&str) -> Option<&'a MvValue>,
{
    Ok(match t {
        Term::Var(v) => lookup(v).cloned().ok_or_else(|| Error::UnboundVariable(v.clone()))?,
        Term::Const0 => alg.zero(),
        Term::Const1 => alg.one(),
        Term::Neg(s) => alg.neg(&eval_with(alg, s, lookup)?),
        Term::Oplus(l, r) => alg.oplus(&eval_with(alg, l, lookup)?, &eval_with(alg, r, lookup)?),
        Term::Odot(l, r) => alg.odot(&eval_with(alg, l, lookup)?, &eval_with(alg, r, lookup)?),
        Term::Ominus(l, r) => alg.ominus(&eval_with(alg, l, lookup)?, &eval_with(alg, r, lookup)?),
        Term::Implies(l, r) => {
            let a = eval_with(alg, l, lookup)?;
            alg.oplus(&alg.neg(&a), &eval_with(alg, r, lookup)?)
        }
        Term::Meet(l, r) => alg.meet(&eval_with(alg, l, lookup)?, &eval_with(alg, r, lookup)?),
        Term::Join(l, r) => alg.join(&eval_with(alg, l, lookup)?, &eval_with(alg, r, lookup)?),
    })
}

pub fn evaluate(t: &Term, v: &Valuation) -> Result<MvElement> {
    let value = eval_with(&v.algebra, t, &|name| v.bindings.get(name))?;
    MvElement::new(v.algebra.clone(), value)
}
