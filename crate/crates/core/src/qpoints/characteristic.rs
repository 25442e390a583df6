//! Supernatural characteristics: prime-to-exponent assignments that pick out a
//! subgroup of the rationals containing 1.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Exponent of a prime in a characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exponent {
    Finite(u32),
    Infinite,
}

impl Exponent {
    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinite)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" => Ok(Exponent::Infinite),
            t => t.parse().map(Exponent::Finite).map_err(|_| Error::Parse {
                position: 0,
                message: format!("bad exponent {s:?}"),
            }),
        }
    }
}

/// Exponent given to every prime not listed explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DefaultExponent {
    Zero,
    Infinite,
}

impl DefaultExponent {
    pub fn exponent(self) -> Exponent {
        match self {
            DefaultExponent::Zero => Exponent::Finite(0),
            DefaultExponent::Infinite => Exponent::Infinite,
        }
    }
}

/// The group `{ q : v_p(q) >= -chi(p) for all primes p }`.
///
/// Always canonical: listed primes are genuine primes and no entry repeats
/// the default, so structural equality coincides with equality of groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic {
    default: DefaultExponent,
    primes: BTreeMap<u64, Exponent>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in increasing order, starting at 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

impl Characteristic {
    pub fn new(
        default: DefaultExponent,
        entries: impl IntoIterator<Item = (u64, Exponent)>,
    ) -> Result<Self> {
        let mut primes = BTreeMap::new();
        for (p, e) in entries {
            if !is_prime(p) {
                return Err(Error::Domain(format!("{p} is not prime")));
            }
            if primes.insert(p, e).is_some() {
                return Err(Error::Domain(format!("prime {p} listed twice")));
            }
        }
        primes.retain(|_, e| *e != default.exponent());
        Ok(Characteristic { default, primes })
    }

    /// Characteristic of the integers.
    pub fn integers() -> Self {
        Characteristic {
            default: DefaultExponent::Zero,
            primes: BTreeMap::new(),
        }
    }

    /// Characteristic of the full rationals.
    pub fn rationals() -> Self {
        Characteristic {
            default: DefaultExponent::Infinite,
            primes: BTreeMap::new(),
        }
    }

    /// `Z[1/p1, 1/p2, ...]`.
    pub fn localization(inverted: &[u64]) -> Result<Self> {
        Self::new(
            DefaultExponent::Zero,
            inverted.iter().map(|&p| (p, Exponent::Infinite)),
        )
    }

    pub fn default_exponent(&self) -> DefaultExponent {
        self.default
    }

    pub fn listed(&self) -> impl Iterator<Item = (u64, Exponent)> + '_ {
        self.primes.iter().map(|(&p, &e)| (p, e))
    }

    pub fn exponent(&self, p: u64) -> Exponent {
        self.primes
            .get(&p)
            .copied()
            .unwrap_or(self.default.exponent())
    }

    /// Membership of `q` in the denoted group.
    pub fn contains(&self, q: &Rational) -> bool {
        let mut rest = q.denom().clone();
        for (&p, &e) in &self.primes {
            let bp = BigInt::from(p);
            let mut k = 0u32;
            while rest.is_multiple_of(&bp) {
                rest /= &bp;
                k += 1;
            }
            if let Exponent::Finite(bound) = e {
                if k > bound {
                    return false;
                }
            }
        }
        match self.default {
            DefaultExponent::Infinite => true,
            DefaultExponent::Zero => rest.is_one(),
        }
    }

    /// True when the denoted group is infinite cyclic, i.e. `(1/D) Z`.
    pub fn is_cyclic(&self) -> bool {
        self.default == DefaultExponent::Zero && self.primes.values().all(|e| !e.is_infinite())
    }

    /// `D` such that the group is `(1/D) Z`, for cyclic characteristics.
    pub fn cyclic_denominator(&self) -> Option<BigInt> {
        if !self.is_cyclic() {
            return None;
        }
        let mut d = BigInt::one();
        for (&p, &e) in &self.primes {
            if let Exponent::Finite(k) = e {
                d *= BigInt::from(p).pow(k);
            }
        }
        Some(d)
    }

    /// Smallest prime whose exponent is infinite, if any.
    pub fn first_divisible_prime(&self) -> Option<u64> {
        match self.default {
            DefaultExponent::Infinite => primes().find(|&p| self.exponent(p).is_infinite()),
            DefaultExponent::Zero => self
                .primes
                .iter()
                .find(|(_, e)| e.is_infinite())
                .map(|(&p, _)| p),
        }
    }

    /// Human-readable shorthand: `Z`, `Q`, `Z[1/2,1/3]`, or `chi:...`.
    pub fn shorthand(&self) -> String {
        if *self == Self::integers() {
            return "Z".into();
        }
        if *self == Self::rationals() {
            return "Q".into();
        }
        if self.default == DefaultExponent::Zero && self.primes.values().all(|e| e.is_infinite()) {
            let inv: Vec<String> = self.primes.keys().map(|p| format!("1/{p}")).collect();
            return format!("Z[{}]", inv.join(","));
        }
        let mut parts: Vec<String> = self.primes.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        if self.default == DefaultExponent::Infinite {
            parts.push("default=inf".into());
        }
        format!("chi:{}", parts.join(","))
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.shorthand())
    }
}

struct PrimeTable<'a>(&'a BTreeMap<u64, Exponent>);

impl Serialize for PrimeTable<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (p, e) in self.0 {
            map.serialize_entry(&p.to_string(), &e.to_string())?;
        }
        map.end()
    }
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        let default = match self.default {
            DefaultExponent::Zero => "0",
            DefaultExponent::Infinite => "inf",
        };
        map.serialize_entry("default", default)?;
        map.serialize_entry("primes", &PrimeTable(&self.primes))?;
        map.end()
    }
}

#[derive(Deserialize)]
struct RawCharacteristic {
    default: String,
    #[serde(default)]
    primes: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for Characteristic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCharacteristic::deserialize(deserializer)?;
        let default = match raw.default.as_str() {
            "0" => DefaultExponent::Zero,
            "inf" => DefaultExponent::Infinite,
            other => return Err(D::Error::custom(format!("default must be \"0\" or \"inf\", got {other:?}"))),
        };
        let mut entries = Vec::with_capacity(raw.primes.len());
        for (p, e) in raw.primes {
            let p: u64 = p.parse().map_err(D::Error::custom)?;
            let e: Exponent = e.parse().map_err(D::Error::custom)?;
            entries.push((p, e));
        }
        Characteristic::new(default, entries).map_err(D::Error::custom)
    }
}
