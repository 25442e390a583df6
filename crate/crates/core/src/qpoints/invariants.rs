//! Invariants of subgroups of `Q`: `G/pG`, regularity, divisible points, and
//! the existence of increasing homomorphisms between them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoints::characteristic::{is_prime, primes, Characteristic, DefaultExponent, Exponent};
use crate::rational::Rational;

/// Size of `G/pG`, read as the largest number of elements of `G` that are
/// pairwise incongruent modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GpInvariant {
    pub prime: u64,
    pub value: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    /// Has a least positive element.
    RegularlyDiscrete,
    /// Every interval contains a `p`-divisible element, for every `p`.
    RegularlyDense,
}

/// Outcome of [`hom_exists`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomExistence {
    /// `x ↦ scale·x` maps the source into the target.
    Exists { scale: Rational },
    /// `certificate` has infinite excess, so no positive scale works.
    Absent { certificate: u64 },
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{p} is not prime")))
    }
}

pub fn gp_invariant(chi: &Characteristic, p: u64) -> Result<GpInvariant> {
    require_prime(p)?;
    let value = if chi.exponent(p).is_infinite() { 1 } else { p };
    Ok(GpInvariant { prime: p, value })
}

pub fn classify_regularity(chi: &Characteristic) -> Regularity {
    if chi.is_cyclic() {
        Regularity::RegularlyDiscrete
    } else {
        Regularity::RegularlyDense
    }
}

/// Largest denominator tried before falling back to powers of a divisible prime.
const DENOMINATOR_SEARCH_LIMIT: i64 = 4096;

/// Some `x` with `a < x < b`, `x ∈ G` and `x/p ∈ G`.
///
/// Returns `0` when `a < 0 < b`. Otherwise returns `p·y` for the element `y`
/// of `G ∩ (a/p, b/p)` with the smallest denominator, and among those the
/// smallest value.
pub fn find_divisible_between(chi: &Characteristic, p: u64, a: &Rational, b: &Rational) -> Result<Rational> {
    require_prime(p)?;
    if a >= b {
        return Err(Error::Domain(format!("empty interval ({a}, {b})")));
    }
    for end in [a, b] {
        if !chi.contains(end) {
            return Err(Error::Domain(format!("{end} is not in {chi}")));
        }
    }
    if a.is_negative() && b.is_positive() {
        return Ok(Rational::zero());
    }
    let pr = Rational::from(p as i64);
    let (lo, hi) = (a / &pr, b / &pr);
    let first_above = |d: &BigInt| -> Option<Rational> {
        let dq = Rational::from(d.clone());
        let y = Rational::from((&lo * &dq).floor() + 1) / dq;
        (y < hi).then_some(y)
    };
    let y = if let Some(d) = chi.cyclic_denominator() {
        first_above(&d).ok_or_else(|| {
            Error::WitnessNotFound(format!(
                "{chi} is discrete with step 1/{d}; no multiple of {p}/{d} lies in ({a}, {b})"
            ))
        })?
    } else {
        let found = (1..=DENOMINATOR_SEARCH_LIMIT)
            .filter(|&d| chi.contains(&Rational::new(1, d)))
            .find_map(|d| first_above(&BigInt::from(d)));
        match found {
            Some(y) => y,
            None => {
                let r = chi
                    .first_divisible_prime()
                    .expect("dense characteristics have a divisible prime");
                let mut d = BigInt::from(r);
                loop {
                    if let Some(y) = first_above(&d) {
                        break y;
                    }
                    d *= r;
                }
            }
        }
    };
    let x = &y * &pr;
    debug_assert!(chi.contains(&x) && chi.contains(&y));
    Ok(x)
}

/// Least positive `(m, n)` with `m·x = n·y`.
pub fn common_measure(x: &Rational, y: &Rational) -> Result<(BigInt, BigInt)> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::Domain("common measure of zero".into()));
    }
    if x.is_positive() != y.is_positive() {
        return Err(Error::Domain(format!("{x} and {y} have opposite signs")));
    }
    let ratio = y / x;
    Ok((ratio.numer().clone(), ratio.denom().clone()))
}

/// Decides whether some `r > 0` has `r·G_src ⊆ G_dst`.
///
/// Such `r` exists iff only finitely many primes have `chi_src(p) > chi_dst(p)`
/// and each such excess is finite; then `r = ∏ p^excess` is the least one.
pub fn hom_exists(src: &Characteristic, dst: &Characteristic) -> HomExistence {
    if src.default_exponent() == DefaultExponent::Infinite && dst.default_exponent() == DefaultExponent::Zero {
        let certificate = primes()
            .find(|&p| src.exponent(p).is_infinite() && !dst.exponent(p).is_infinite())
            .expect("some prime has infinite excess");
        return HomExistence::Absent { certificate };
    }
    let listed: BTreeSet<u64> = src.listed().chain(dst.listed()).map(|(p, _)| p).collect();
    let mut scale = Rational::one();
    for p in listed {
        match (src.exponent(p), dst.exponent(p)) {
            (Exponent::Infinite, Exponent::Finite(_)) => return HomExistence::Absent { certificate: p },
            (Exponent::Finite(s), Exponent::Finite(d)) if s > d => {
                scale = scale * Rational::from(BigInt::from(p).pow(s - d));
            }
            _ => {}
        }
    }
    HomExistence::Exists { scale }
}
