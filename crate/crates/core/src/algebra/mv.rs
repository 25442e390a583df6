//! MV-algebra descriptors and exact operations on their elements.
//!
//! Every algebra here is an interval `[0, u]` of some lattice-ordered group
//! with truncated addition `x ⊕ y = (x + y) ∧ u` and `¬x = u − x`:
//! chains and the rational interval sit inside `Q` with `u = 1`, while Chang's
//! algebra and `Δ(G)` sit inside `Z ×lex G` with `u = (1, 0)`.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::lgroup::{GroupElem, LGroup, INTEGERS};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MvAlgebra {
    /// `{0, 1/(n-1), ..., 1}`.
    #[serde(rename = "finite_chain")]
    FiniteChain { n: u32 },
    /// `[0, 1] ∩ Q`.
    #[serde(rename = "rational_interval")]
    RationalInterval,
    /// `Γ(Z ×lex Z, (1, 0))`.
    #[serde(rename = "chang")]
    Chang,
    /// `Δ(G) = Γ(Z ×lex G, (1, 0))`.
    #[serde(rename = "delta_of_group")]
    DeltaOfGroup { group: LGroup },
    #[serde(rename = "product")]
    Product { factors: Vec<MvAlgebra> },
    /// Subalgebra `{(b, p) : p mod Rad(P) = [a <= b]}` of `B × P`, where `a`
    /// is the first atom of the Boolean algebra `B` and `P` is perfect.
    #[serde(rename = "glued")]
    Glued {
        boolean: Box<MvAlgebra>,
        perfect: Box<MvAlgebra>,
    },
}

/// Payload of an MV-algebra element. Its meaning depends on the descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MvValue {
    /// A point of `[0, 1]` (chains and the rational interval).
    Scalar(Rational),
    /// `(0, g)` with `g >= 0` when `top` is false, `(1, g)` with `g <= 0` when true.
    Lex { top: bool, offset: GroupElem },
    /// Componentwise value for products and glued algebras.
    Tuple(Vec<MvValue>),
}

impl MvValue {
    pub fn scalar(n: i64, d: i64) -> Self {
        MvValue::Scalar(Rational::new(n, d))
    }

    /// Chang element `(bit, offset)` with an integer offset.
    pub fn chang(bit: u8, offset: i64) -> Self {
        MvValue::Lex {
            top: bit == 1,
            offset: GroupElem::int(offset),
        }
    }
}

impl fmt::Display for MvValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MvValue::Scalar(q) => write!(f, "{q}"),
            MvValue::Lex { top, offset } => write!(f, "({},{offset})", u8::from(*top)),
            MvValue::Tuple(items) => {
                f.write_str("[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl MvAlgebra {
    pub fn chain(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("a finite chain needs at least 2 elements, got {n}")));
        }
        Ok(MvAlgebra::FiniteChain { n })
    }

    pub fn product(factors: Vec<MvAlgebra>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Domain("product of no factors".into()));
        }
        Ok(MvAlgebra::Product { factors })
    }

    /// The Boolean algebra with `2^k` elements, as a power of the 2-chain.
    pub fn boolean(k: usize) -> Result<Self> {
        if k == 1 {
            return Ok(MvAlgebra::FiniteChain { n: 2 });
        }
        Self::product(vec![MvAlgebra::FiniteChain { n: 2 }; k])
    }

    /// Checks descriptor invariants recursively.
    pub fn validate(&self) -> Result<()> {
        match self {
            MvAlgebra::FiniteChain { n } if *n < 2 => Err(Error::Domain(format!(
                "a finite chain needs at least 2 elements, got {n}"
            ))),
            MvAlgebra::Product { factors } if factors.is_empty() => {
                Err(Error::Domain("product of no factors".into()))
            }
            MvAlgebra::Product { factors } => factors.iter().try_for_each(MvAlgebra::validate),
            MvAlgebra::Glued { boolean, perfect } => {
                boolean.validate()?;
                perfect.validate()?;
                if perfect.lex_group().is_none() {
                    return Err(Error::Domain("glued algebra needs a perfect factor".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Base group `G` when the algebra is `Δ(G)` (Chang's algebra is `Δ(Z)`).
    pub fn lex_group(&self) -> Option<&LGroup> {
        match self {
            MvAlgebra::Chang => Some(&INTEGERS),
            MvAlgebra::DeltaOfGroup { group } => Some(group),
            _ => None,
        }
    }

    fn components(&self) -> Option<Vec<&MvAlgebra>> {
        match self {
            MvAlgebra::Product { factors } => Some(factors.iter().collect()),
            MvAlgebra::Glued { boolean, perfect } => Some(vec![boolean, perfect]),
            _ => None,
        }
    }

    pub fn zero(&self) -> MvValue {
        match self {
            MvAlgebra::FiniteChain { .. } | MvAlgebra::RationalInterval => {
                MvValue::Scalar(Rational::zero())
            }
            MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. } => MvValue::Lex {
                top: false,
                offset: self.lex_group().unwrap().zero(),
            },
            _ => MvValue::Tuple(self.components().unwrap().iter().map(|a| a.zero()).collect()),
        }
    }

    pub fn one(&self) -> MvValue {
        match self {
            MvAlgebra::FiniteChain { .. } | MvAlgebra::RationalInterval => {
                MvValue::Scalar(Rational::one())
            }
            MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. } => MvValue::Lex {
                top: true,
                offset: self.lex_group().unwrap().zero(),
            },
            _ => MvValue::Tuple(self.components().unwrap().iter().map(|a| a.one()).collect()),
        }
    }

    /// Whether `x` is a well-formed element of this algebra.
    pub fn contains(&self, x: &MvValue) -> bool {
        match (self, x) {
            (MvAlgebra::FiniteChain { n }, MvValue::Scalar(q)) => {
                in_unit_interval(q) && (q * &Rational::from(i64::from(*n) - 1)).is_integer()
            }
            (MvAlgebra::RationalInterval, MvValue::Scalar(q)) => in_unit_interval(q),
            (MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. }, MvValue::Lex { top, offset }) => {
                let g = self.lex_group().unwrap();
                g.contains(offset)
                    && if *top {
                        g.leq(offset, &g.zero())
                    } else {
                        g.is_nonnegative(offset)
                    }
            }
            (MvAlgebra::Product { factors }, MvValue::Tuple(items)) => {
                factors.len() == items.len()
                    && factors.iter().zip(items).all(|(a, v)| a.contains(v))
            }
            (MvAlgebra::Glued { boolean, perfect }, MvValue::Tuple(items)) => {
                items.len() == 2
                    && boolean.contains(&items[0])
                    && perfect.contains(&items[1])
                    && glue_constraint(boolean, &items[0], perfect, &items[1])
            }
            _ => false,
        }
    }

    pub fn require(&self, x: &MvValue) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::Structural(format!("{x} is not an element of {self}")))
        }
    }

    pub fn oplus(&self, x: &MvValue, y: &MvValue) -> MvValue {
        match (self, x, y) {
            (_, MvValue::Scalar(p), MvValue::Scalar(q)) => {
                MvValue::Scalar((p + q).min(Rational::one()))
            }
            (
                MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. },
                MvValue::Lex { top: a, offset: g },
                MvValue::Lex { top: b, offset: h },
            ) => {
                // (a + b, g + h) ∧ (1, 0) in Z ×lex G
                let group = self.lex_group().unwrap();
                let sum = group.add(g, h);
                match (a, b) {
                    (false, false) => MvValue::Lex {
                        top: false,
                        offset: sum,
                    },
                    (true, true) => self.one(),
                    _ => MvValue::Lex {
                        top: true,
                        offset: group.meet(&sum, &group.zero()),
                    },
                }
            }
            (_, MvValue::Tuple(xs), MvValue::Tuple(ys)) => {
                let comps = self.components().expect("tuple value in non-product algebra");
                MvValue::Tuple(
                    comps
                        .iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(a, (u, v))| a.oplus(u, v))
                        .collect(),
                )
            }
            _ => panic!("value shapes do not match {self}: {x}, {y}"),
        }
    }

    pub fn neg(&self, x: &MvValue) -> MvValue {
        match (self, x) {
            (_, MvValue::Scalar(q)) => MvValue::Scalar(&Rational::one() - q),
            (_, MvValue::Lex { top, offset }) => MvValue::Lex {
                top: !top,
                offset: self.lex_group().unwrap().neg(offset),
            },
            (_, MvValue::Tuple(xs)) => {
                let comps = self.components().expect("tuple value in non-product algebra");
                MvValue::Tuple(comps.iter().zip(xs).map(|(a, v)| a.neg(v)).collect())
            }
        }
    }

    pub fn odot(&self, x: &MvValue, y: &MvValue) -> MvValue {
        self.neg(&self.oplus(&self.neg(x), &self.neg(y)))
    }

    /// `x ⊖ y = x ⊙ ¬y`.
    pub fn ominus(&self, x: &MvValue, y: &MvValue) -> MvValue {
        self.odot(x, &self.neg(y))
    }

    /// `x → y = ¬x ⊕ y`.
    pub fn implies(&self, x: &MvValue, y: &MvValue) -> MvValue {
        self.oplus(&self.neg(x), y)
    }

    /// `x ∨ y = (x ⊖ y) ⊕ y`.
    pub fn join(&self, x: &MvValue, y: &MvValue) -> MvValue {
        self.oplus(&self.ominus(x, y), y)
    }

    /// `x ∧ y = ¬(¬x ∨ ¬y)`.
    pub fn meet(&self, x: &MvValue, y: &MvValue) -> MvValue {
        self.neg(&self.join(&self.neg(x), &self.neg(y)))
    }

    /// Natural order, decided as `¬x ⊕ y = 1`.
    pub fn leq(&self, x: &MvValue, y: &MvValue) -> bool {
        self.implies(x, y) == self.one()
    }

    /// `2x = x ⊕ x`.
    pub fn double(&self, x: &MvValue) -> MvValue {
        self.oplus(x, x)
    }

    /// `x² = x ⊙ x`.
    pub fn square(&self, x: &MvValue) -> MvValue {
        self.odot(x, x)
    }

    pub fn is_boolean(&self, x: &MvValue) -> bool {
        self.oplus(x, x) == *x
    }

    /// Exact infinitesimality where the representation decides it.
    pub fn is_infinitesimal_exact(&self, x: &MvValue) -> Option<bool> {
        match (self, x) {
            (MvAlgebra::FiniteChain { .. } | MvAlgebra::RationalInterval, MvValue::Scalar(q)) => {
                Some(q.is_zero())
            }
            (MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. }, MvValue::Lex { top, .. }) => {
                Some(!top)
            }
            (_, MvValue::Tuple(xs)) => {
                let comps = self.components()?;
                let mut all = true;
                for (a, v) in comps.iter().zip(xs) {
                    all &= a.is_infinitesimal_exact(v)?;
                }
                Some(all)
            }
            _ => None,
        }
    }

    /// Checks `n·x <= ¬x` for `n = 1..=horizon`.
    pub fn infinitesimal_up_to(&self, x: &MvValue, horizon: u32) -> bool {
        let nx_bound = self.neg(x);
        let mut acc = x.clone();
        for _ in 0..horizon {
            if !self.leq(&acc, &nx_bound) {
                return false;
            }
            acc = self.oplus(&acc, x);
        }
        true
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            MvAlgebra::FiniteChain { n } => Some(u64::from(*n)),
            MvAlgebra::RationalInterval | MvAlgebra::Chang => None,
            MvAlgebra::DeltaOfGroup { group } => match group {
                LGroup::TrivialGroup => Some(2),
                _ => None,
            },
            MvAlgebra::Product { factors } => factors
                .iter()
                .try_fold(1u64, |acc, a| a.cardinality().and_then(|c| acc.checked_mul(c))),
            MvAlgebra::Glued { .. } => {
                if self.components()?.iter().all(|a| a.is_finite()) {
                    Some(self.enumerate(0).len() as u64)
                } else {
                    None
                }
            }
        }
    }

    /// Elements in canonical order; `bound` only matters for infinite carriers.
    ///
    /// Chang and `Δ(G)` list the radical `(0, g)` for the nonnegative part of
    /// the bounded fragment of `G`, then the co-radical `(1, −g)` in the same
    /// order. The rational interval lists the Farey fractions of order
    /// `bound`. Products enumerate lexicographically.
    pub fn enumerate(&self, bound: u64) -> Vec<MvValue> {
        match self {
            MvAlgebra::FiniteChain { n } => {
                let d = i64::from(*n) - 1;
                (0..=d).map(|k| MvValue::scalar(k, d)).collect()
            }
            MvAlgebra::RationalInterval => {
                let b = bound.max(1) as i64;
                let mut out = Vec::new();
                for d in 1..=b {
                    for k in 0..=d {
                        if k.gcd(&d) == 1 || (k == 0 && d == 1) {
                            out.push(Rational::new(k, d));
                        }
                    }
                }
                out.sort();
                out.into_iter().map(MvValue::Scalar).collect()
            }
            MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. } => {
                let g = self.lex_group().unwrap();
                let cone = g.enumerate_cone(bound);
                let radical = cone.iter().map(|c| MvValue::Lex {
                    top: false,
                    offset: c.clone(),
                });
                let coradical = cone.iter().map(|c| MvValue::Lex {
                    top: true,
                    offset: g.neg(c),
                });
                radical.chain(coradical).collect()
            }
            MvAlgebra::Product { factors } => cartesian(factors.iter().map(|a| a.enumerate(bound)).collect()),
            MvAlgebra::Glued { boolean, perfect } => {
                cartesian(vec![boolean.enumerate(bound), perfect.enumerate(bound)])
                    .into_iter()
                    .filter(|v| self.contains(v))
                    .collect()
            }
        }
    }

    pub fn value_to_json(&self, x: &MvValue) -> Value {
        match x {
            MvValue::Scalar(q) => Value::String(q.to_string()),
            MvValue::Lex { top, offset } => {
                let off = self
                    .lex_group()
                    .map(|g| g.elem_to_json(offset))
                    .unwrap_or(Value::Null);
                Value::Array(vec![Value::from(u8::from(*top)), off])
            }
            MvValue::Tuple(xs) => match self.components() {
                Some(comps) => Value::Array(
                    comps
                        .iter()
                        .zip(xs)
                        .map(|(a, v)| a.value_to_json(v))
                        .collect(),
                ),
                None => Value::Null,
            },
        }
    }

    pub fn value_from_json(&self, v: &Value) -> Result<MvValue> {
        let bad = || Error::Structural(format!("cannot read {v} as an element of {self}"));
        let x = match self {
            MvAlgebra::FiniteChain { .. } | MvAlgebra::RationalInterval => {
                let s = v.as_str().ok_or_else(bad)?;
                MvValue::Scalar(s.parse().map_err(|_| bad())?)
            }
            MvAlgebra::Chang | MvAlgebra::DeltaOfGroup { .. } => {
                let items = v.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
                let top = match items[0].as_u64() {
                    Some(0) => false,
                    Some(1) => true,
                    _ => return Err(bad()),
                };
                let offset = self.lex_group().unwrap().elem_from_json(&items[1])?;
                MvValue::Lex { top, offset }
            }
            MvAlgebra::Product { .. } | MvAlgebra::Glued { .. } => {
                let comps = self.components().unwrap();
                let items = v
                    .as_array()
                    .filter(|a| a.len() == comps.len())
                    .ok_or_else(bad)?;
                MvValue::Tuple(
                    comps
                        .iter()
                        .zip(items)
                        .map(|(a, item)| a.value_from_json(item))
                        .collect::<Result<_>>()?,
                )
            }
        };
        self.require(&x)?;
        Ok(x)
    }

    pub fn shorthand(&self) -> String {
        match self {
            MvAlgebra::FiniteChain { n } => format!("chain:{n}"),
            MvAlgebra::RationalInterval => "interval".into(),
            MvAlgebra::Chang => "chang".into(),
            MvAlgebra::DeltaOfGroup { group } => format!("delta:{}", group.shorthand()),
            MvAlgebra::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|a| wrap(a.shorthand())).collect();
                format!("prod:{}", parts.join(","))
            }
            MvAlgebra::Glued { boolean, perfect } => {
                format!("glue:{},{}", wrap(boolean.shorthand()), wrap(perfect.shorthand()))
            }
        }
    }
}

fn wrap(s: String) -> String {
    if s.contains(',') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for MvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shorthand())
    }
}

fn in_unit_interval(q: &Rational) -> bool {
    !q.is_negative() && *q <= Rational::one()
}

fn cartesian(lists: Vec<Vec<MvValue>>) -> Vec<MvValue> {
    let mut acc: Vec<Vec<MvValue>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(acc.len() * list.len());
        for prefix in &acc {
            for v in &list {
                let mut p = prefix.clone();
                p.push(v.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc.into_iter().map(MvValue::Tuple).collect()
}

/// First atom of a finite Boolean algebra in canonical enumeration order.
pub fn first_atom(boolean: &MvAlgebra) -> Option<MvValue> {
    let elems = boolean.enumerate(0);
    let zero = boolean.zero();
    elems
        .iter()
        .filter(|x| **x != zero)
        .find(|x| {
            !elems
                .iter()
                .any(|y| *y != zero && y != *x && boolean.leq(y, x))
        })
        .cloned()
}

fn glue_constraint(boolean: &MvAlgebra, b: &MvValue, perfect: &MvAlgebra, p: &MvValue) -> bool {
    let Some(atom) = first_atom(boolean) else {
        return false;
    };
    let in_ultrafilter = boolean.leq(&atom, b);
    let p_is_infinitesimal = perfect.is_infinitesimal_exact(p).unwrap_or(false);
    in_ultrafilter != p_is_infinitesimal
}

/// Compare two elements of a totally ordered algebra via the natural order.
pub fn compare_in_chain(alg: &MvAlgebra, x: &MvValue, y: &MvValue) -> Ordering {
    match (alg.leq(x, y), alg.leq(y, x)) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => panic!("{x} and {y} are incomparable in {alg}"),
    }
}

/// Integer multiple `n·x = x ⊕ ... ⊕ x`.
pub fn multiple(alg: &MvAlgebra, x: &MvValue, n: u32) -> MvValue {
    let mut acc = alg.zero();
    for _ in 0..n {
        acc = alg.oplus(&acc, x);
    }
    acc
}
