//! Actions of the multiplicative monoid of positive integers on positive
//! cones of subgroups of `Q`, their flatness, and the group they determine.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::check::sample_tuples;
use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::error::{Error, Result};
use crate::qpoints::characteristic::{is_prime, Characteristic, DefaultExponent, Exponent};
use crate::rational::Rational;
use crate::report::{witness, CheckReport};

/// Bound on the fragment of the cone that samples are drawn from.
pub const FLAT_SAMPLE_BOUND: u64 = 12;

/// Multipliers for condition 3 are drawn uniformly from `1..=MAX_MULTIPLIER`.
pub const MAX_MULTIPLIER: u64 = 97;

/// Divisions by `p` beyond this many are read as infinite `p`-divisibility.
pub const DIVISIBILITY_HORIZON: u32 = 64;

/// An action `(n, x) ↦ act(n, x)` of positive integers on a set of rationals.
pub trait MonoidAction {
    fn base(&self) -> &Characteristic;
    fn in_carrier(&self, x: &Rational) -> bool;
    fn act(&self, n: u64, x: &Rational) -> Rational;
}

/// `(n, x) ↦ n·x` on the strictly positive part of a subgroup of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusAction {
    pub base: Characteristic,
}

pub fn frobenius_action(chi: &Characteristic) -> FrobeniusAction {
    FrobeniusAction { base: chi.clone() }
}

impl MonoidAction for FrobeniusAction {
    fn base(&self) -> &Characteristic {
        &self.base
    }

    fn in_carrier(&self, x: &Rational) -> bool {
        x.is_positive() && self.base.contains(x)
    }

    fn act(&self, n: u64, x: &Rational) -> Rational {
        x.mul_u64(n)
    }
}

/// `gcd(a, c) / lcm(b, d)` for `a/b`, `c/d` in lowest terms.
pub fn rational_gcd(x: &Rational, y: &Rational) -> Rational {
    Rational::new(x.numer().gcd(y.numer()), x.denom().lcm(y.denom()))
}

fn cone_pool(action: &impl MonoidAction) -> Vec<Rational> {
    LGroup::q_subgroup(action.base().clone())
        .enumerate(FLAT_SAMPLE_BOUND)
        .into_iter()
        .filter_map(|g| match g {
            GroupElem::Scalar(q) if action.in_carrier(&q) => Some(q),
            _ => None,
        })
        .collect()
}

fn to_u64(q: &Rational) -> Option<u64> {
    q.is_integer().then(|| q.numer().to_u64()).flatten()
}

/// Samples the three flatness conditions.
///
/// Condition 1 asks for a point of the carrier. Condition 2 builds, for each
/// sampled `(y, z)`, the witness `w = gcd(y, z)` with `m·w = y`, `n·w = z`.
/// Condition 3 asks, for sampled `(m, n, y)` with `m ≠ n`, whether
/// `m·y = n·y` ever holds; on a torsion-free cone it never does, and the
/// report records that the condition held vacuously.
pub fn check_flatness(action: &impl MonoidAction, samples: u64, seed: u64) -> Result<CheckReport> {
    if samples == 0 {
        return Err(Error::Domain("samples must be at least 1".into()));
    }
    let pool = cone_pool(action);
    if pool.is_empty() || !action.in_carrier(&Rational::one()) {
        return Ok(CheckReport::counterexample("condition 1: nonempty", witness([("x", "1")]), 0));
    }
    let mut checked = 1;
    for pair in sample_tuples(&pool, 2, samples, seed) {
        checked += 1;
        let (y, z) = (&pair[0], &pair[1]);
        let w = rational_gcd(y, z);
        let (m, n) = (to_u64(&(y / &w)), to_u64(&(z / &w)));
        let ok = action.in_carrier(&w)
            && matches!((m, n), (Some(m), Some(n)) if action.act(m, &w) == *y && action.act(n, &w) == *z);
        if !ok {
            return Ok(CheckReport::counterexample(
                "condition 2: common divisor",
                witness([("y", y.to_string()), ("z", z.to_string()), ("w", w.to_string())]),
                checked,
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let mut distinct_pairs = 0u64;
    for y in sample_tuples(&pool, 1, samples, seed.wrapping_add(2)).into_iter().map(|mut t| t.remove(0)) {
        checked += 1;
        let (m, n) = (rng.random_range(1..=MAX_MULTIPLIER), rng.random_range(1..=MAX_MULTIPLIER));
        if m == n {
            continue;
        }
        distinct_pairs += 1;
        if action.act(m, &y) == action.act(n, &y) {
            return Ok(CheckReport::counterexample(
                "condition 3: no p with m·p = n·p",
                witness([("m", m.to_string()), ("n", n.to_string()), ("y", y.to_string())]),
                checked,
            ));
        }
    }
    Ok(CheckReport::valid(checked)
        .with_detail("condition_3", "vacuous")
        .with_detail("condition_3_distinct_pairs", distinct_pairs)
        .with_detail("condition_3_coincidences", 0)
        .with_detail("sample_bound", FLAT_SAMPLE_BOUND))
}

/// Reconstructs the subgroup of `Q` generated by `probes` and the elements
/// the action can divide them into, normalized to contain `1`.
///
/// With `w` the gcd of the probes, every probe must equal `act(y/w, w)` or the
/// induced sum is not well defined. For each prime dividing a probe's
/// numerator or denominator, the exponent is the number of times `w` can be
/// divided by `p` inside the carrier, minus `v_p(w)`, up to the
/// divisibility horizon. Unrelated primes get exponent `0`.
pub fn group_from_action(action: &impl MonoidAction, probes: &[Rational]) -> Result<LGroup> {
    if probes.is_empty() {
        return Err(Error::Reconstruction("no probes".into()));
    }
    if let Some(bad) = probes.iter().find(|y| !action.in_carrier(y)) {
        return Err(Error::Reconstruction(format!("probe {bad} is outside the carrier")));
    }
    let w = probes[1..].iter().fold(probes[0].clone(), |acc, y| rational_gcd(&acc, y));
    for y in probes {
        let m = to_u64(&(y / &w));
        if !matches!(m, Some(m) if action.act(m, &w) == *y) {
            return Err(Error::Reconstruction(format!(
                "{y} is not a multiple of {w} under the action; the induced sum is not well defined"
            )));
        }
    }
    let mut relevant = BTreeSet::new();
    for y in probes {
        for n in [y.numer().abs(), y.denom().clone()] {
            relevant.extend(prime_factors(&n));
        }
    }
    let mut entries = Vec::new();
    for p in relevant {
        let mut z = w.clone();
        let mut k = 0u32;
        while k < DIVISIBILITY_HORIZON {
            let next = z.div_u64(p);
            if !(action.in_carrier(&next) && action.act(p, &next) == z) {
                break;
            }
            z = next;
            k += 1;
        }
        let exponent = if k >= DIVISIBILITY_HORIZON {
            Exponent::Infinite
        } else {
            let vw = w.valuation(p).expect("w is nonzero");
            Exponent::Finite(u32::try_from(i64::from(k) - vw).unwrap_or(0))
        };
        entries.push((p, exponent));
    }
    Ok(LGroup::q_subgroup(Characteristic::new(DefaultExponent::Zero, entries)?))
}

fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut p = 2u64;
    while rest > BigInt::one() {
        if BigInt::from(p) * BigInt::from(p) > rest {
            if let Some(r) = rest.to_u64() {
                out.push(r);
            }
            break;
        }
        if is_prime(p) && (&rest % p).is_zero() {
            out.push(p);
            while (&rest % p).is_zero() {
                rest /= p;
            }
        }
        p += 1;
    }
    out
}
