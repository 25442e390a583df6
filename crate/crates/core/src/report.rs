//! Outcome of an exhaustive, bounded, or sampled verification.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    /// No counterexample inside a bounded fragment; not a completeness claim.
    ValidUpToBound,
    Counterexample,
}

/// Witness assignments are rendered with the display form of each element.
pub type Witness = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub checked: u64,
    /// Name of the law or clause that failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub law: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

impl CheckReport {
    pub fn valid(checked: u64) -> Self {
        CheckReport {
            verdict: Verdict::Valid,
            witness: None,
            checked,
            law: None,
            details: BTreeMap::new(),
        }
    }

    pub fn valid_up_to_bound(checked: u64) -> Self {
        CheckReport {
            verdict: Verdict::ValidUpToBound,
            ..Self::valid(checked)
        }
    }

    pub fn counterexample(law: impl Into<String>, witness: Witness, checked: u64) -> Self {
        CheckReport {
            verdict: Verdict::Counterexample,
            witness: Some(witness),
            checked,
            law: Some(law.into()),
            details: BTreeMap::new(),
        }
    }

    pub fn with_detail(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.details.insert(key.into(), value.to_string());
        self
    }

    pub fn is_valid(&self) -> bool {
        self.verdict != Verdict::Counterexample
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Valid => "valid",
            Verdict::ValidUpToBound => "valid up to bound",
            Verdict::Counterexample => "counterexample",
        };
        write!(f, "{verdict} ({} checked)", self.checked)?;
        if let Some(law) = &self.law {
            write!(f, "; law: {law}")?;
        }
        if let Some(w) = &self.witness {
            let parts: Vec<String> = w.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            write!(f, "; witness: {}", parts.join(", "))?;
        }
        for (k, v) in &self.details {
            write!(f, "; {k}: {v}")?;
        }
        Ok(())
    }
}

/// Build a witness map from `(name, display)` pairs.
pub fn witness<I, K, V>(pairs: I) -> Witness
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: ToString,
{
    pairs
        .into_iter()
        .map(|(k, v)| (k.into(), v.to_string()))
        .collect()
}
