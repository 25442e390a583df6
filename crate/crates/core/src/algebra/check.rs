//! Axiom suites for MV-algebras, run exhaustively or on seeded samples.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::mv::{MvAlgebra, MvValue};
use crate::error::{Error, Result};
use crate::report::{witness, CheckReport};

/// Bound on offsets and denominators used when sampling infinite carriers.
pub const DEFAULT_SAMPLE_BOUND: u64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    /// `count` draws, uniform over the bounded fragment of the carrier.
    Sampled { count: u64, seed: u64, bound: u64 },
}

impl CheckMode {
    pub fn sampled(count: u64, seed: u64) -> Self {
        CheckMode::Sampled {
            count,
            seed,
            bound: DEFAULT_SAMPLE_BOUND,
        }
    }
}

/// The signature `(A, ⊕, ¬, 0, 1)`.
pub trait MvSignature {
    type Elem: Clone + PartialEq + Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn oplus(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
}

impl MvSignature for MvAlgebra {
    type Elem = MvValue;

    fn zero(&self) -> MvValue {
        MvAlgebra::zero(self)
    }
    fn one(&self) -> MvValue {
        MvAlgebra::one(self)
    }
    fn oplus(&self, x: &MvValue, y: &MvValue) -> MvValue {
        MvAlgebra::oplus(self, x, y)
    }
    fn neg(&self, x: &MvValue) -> MvValue {
        MvAlgebra::neg(self, x)
    }
}

/// A finite algebra given by explicit operation tables over `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMv {
    pub zero: usize,
    pub one: usize,
    pub oplus: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
}

impl TableMv {
    pub fn size(&self) -> usize {
        self.neg.len()
    }

    /// Tabulates a finite algebra in canonical enumeration order.
    pub fn from_algebra(alg: &MvAlgebra) -> Result<(Self, Vec<MvValue>)> {
        if !alg.is_finite() {
            return Err(Error::Mode(format!("{alg} is infinite")));
        }
        let elems = alg.enumerate(0);
        let index = |v: &MvValue| elems.iter().position(|e| e == v).expect("closed");
        let oplus = elems
            .iter()
            .map(|x| elems.iter().map(|y| index(&alg.oplus(x, y))).collect())
            .collect();
        let neg = elems.iter().map(|x| index(&alg.neg(x))).collect();
        let table = TableMv {
            zero: index(&alg.zero()),
            one: index(&alg.one()),
            oplus,
            neg,
        };
        Ok((table, elems))
    }
}

impl MvSignature for TableMv {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn oplus(&self, x: &usize, y: &usize) -> usize {
        self.oplus[*x][*y]
    }
    fn neg(&self, x: &usize) -> usize {
        self.neg[*x]
    }
}

/// Checks the five MV axioms on each triple, stopping at the first failure.
///
/// The clauses are: `(A, ⊕, 0)` is a commutative monoid, `¬0 = 1`,
/// `x ⊕ 1 = 1`, `¬¬x = x`, and `¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x`.
pub fn check_mv_laws<S, I>(alg: &S, triples: I) -> CheckReport
where
    S: MvSignature,
    I: IntoIterator<Item = (S::Elem, S::Elem, S::Elem)>,
{
    let zero = alg.zero();
    let one = alg.one();
    if alg.neg(&zero) != one {
        return CheckReport::counterexample("neg_zero", witness([("x", &zero)]), 0);
    }
    let mut checked = 0u64;
    for (x, y, z) in triples {
        checked += 1;
        let xy = alg.oplus(&x, &y);
        let failure = if alg.oplus(&xy, &z) != alg.oplus(&x, &alg.oplus(&y, &z)) {
            Some("commutative_monoid: associativity")
        } else if xy != alg.oplus(&y, &x) {
            Some("commutative_monoid: commutativity")
        } else if alg.oplus(&x, &zero) != x {
            Some("commutative_monoid: zero is neutral")
        } else if alg.oplus(&x, &one) != one {
            Some("one_absorbs")
        } else if alg.neg(&alg.neg(&x)) != x {
            Some("involution")
        } else if alg.oplus(&alg.neg(&alg.oplus(&alg.neg(&x), &y)), &y)
            != alg.oplus(&alg.neg(&alg.oplus(&alg.neg(&y), &x)), &x)
        {
            Some("lukasiewicz")
        } else {
            None
        };
        if let Some(law) = failure {
            return CheckReport::counterexample(law, witness([("x", &x), ("y", &y), ("z", &z)]), checked);
        }
    }
    CheckReport::valid(checked)
}

pub fn all_triples<T: Clone>(elems: &[T]) -> impl Iterator<Item = (T, T, T)> + '_ {
    elems.iter().flat_map(move |x| {
        elems.iter().flat_map(move |y| {
            elems
                .iter()
                .map(move |z| (x.clone(), y.clone(), z.clone()))
        })
    })
}

/// Draws `count` tuples of `arity` elements uniformly from `pool`.
pub fn sample_tuples<T: Clone>(pool: &[T], arity: usize, count: u64, seed: u64) -> Vec<Vec<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..arity)
                .map(|_| pool[rng.random_range(0..pool.len())].clone())
                .collect()
        })
        .collect()
}

/// Elements of `alg` under `mode`: the full carrier, or the bounded fragment
/// used as the sampling pool.
pub fn carrier_for(alg: &MvAlgebra, mode: CheckMode) -> Result<Vec<MvValue>> {
    match mode {
        CheckMode::Exhaustive if !alg.is_finite() => Err(Error::Mode(format!(
            "exhaustive check requested on infinite algebra {alg}"
        ))),
        CheckMode::Exhaustive => Ok(alg.enumerate(0)),
        CheckMode::Sampled { bound, .. } => Ok(alg.enumerate(bound)),
    }
}

pub fn check_mv_axioms(alg: &MvAlgebra, mode: CheckMode) -> Result<CheckReport> {
    let pool = carrier_for(alg, mode)?;
    Ok(match mode {
        CheckMode::Exhaustive => check_mv_laws(alg, all_triples(&pool)),
        CheckMode::Sampled { count, seed, .. } => {
            let triples = sample_tuples(&pool, 3, count, seed)
                .into_iter()
                .map(|t| (t[0].clone(), t[1].clone(), t[2].clone()));
            check_mv_laws(alg, triples)
        }
    })
}

/// The bounded fragment, or a seeded sample of it.
pub fn enumerate_or_sample(
    alg: &MvAlgebra,
    bound: u64,
    sample: Option<(u64, u64)>,
) -> Result<Vec<MvValue>> {
    if bound == 0 {
        return Err(Error::Domain("bound must be at least 1".into()));
    }
    let frag = alg.enumerate(bound);
    Ok(match sample {
        None => frag,
        Some((count, seed)) => sample_tuples(&frag, 1, count, seed)
            .into_iter()
            .map(|mut t| t.remove(0))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn chain_four_exhaustive() {
        let r = check_mv_axioms(&MvAlgebra::FiniteChain { n: 4 }, CheckMode::Exhaustive).unwrap();
        assert_eq!(r.verdict, Verdict::Valid);
        assert_eq!(r.checked, 64);
    }

    #[test]
    fn chang_sampled() {
        let r = check_mv_axioms(&MvAlgebra::Chang, CheckMode::sampled(1000, 1)).unwrap();
        assert_eq!(r.verdict, Verdict::Valid);
        assert_eq!(r.checked, 1000);
    }

    #[test]
    fn exhaustive_on_infinite_is_a_mode_error() {
        assert!(matches!(
            check_mv_axioms(&MvAlgebra::Chang, CheckMode::Exhaustive),
            Err(Error::Mode(_))
        ));
    }

    #[test]
    fn corrupted_table_is_caught() {
        let (mut table, _) = TableMv::from_algebra(&MvAlgebra::FiniteChain { n: 3 }).unwrap();
        // 1/2 ⊕ 1/2 should be 1; make it 1/2
        table.oplus[1][1] = 1;
        let elems: Vec<usize> = (0..table.size()).collect();
        let r = check_mv_laws(&table, all_triples(&elems));
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert!(r.witness.is_some());
    }

    #[test]
    fn sampling_is_deterministic() {
        let pool: Vec<u32> = (0..100).collect();
        assert_eq!(sample_tuples(&pool, 2, 50, 9), sample_tuples(&pool, 2, 50, 9));
        assert_ne!(sample_tuples(&pool, 2, 50, 9), sample_tuples(&pool, 2, 50, 10));
    }

    #[test]
    fn enumerate_or_sample_rejects_zero_bound() {
        assert!(enumerate_or_sample(&MvAlgebra::Chang, 0, None).is_err());
        let s = enumerate_or_sample(&MvAlgebra::Chang, 3, Some((10, 4))).unwrap();
        assert_eq!(s.len(), 10);
        assert!(s.iter().all(|v| MvAlgebra::Chang.contains(v)));
    }
}
