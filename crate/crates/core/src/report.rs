use std::collections::BTreeMap;

use serde::Serialize;

/// Outcome of a verification sweep, serialized as
/// `{check, status, witnesses, counts}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub counts: BTreeMap<String, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    pub fn count(&mut self, key: &str, by: u64) {
        *self.counts.entry(key.to_string()).or_default() += by;
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.status = Status::Fail;
        self.witnesses.push(witness.into());
    }

    pub fn extend(&mut self, witnesses: impl IntoIterator<Item = String>) {
        for w in witnesses {
            self.fail(w);
        }
    }

    /// Sorts witnesses so that reports are reproducible.
    pub fn finish(mut self) -> Self {
        self.witnesses.sort();
        self.witnesses.dedup();
        self
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn merge(&mut self, other: CheckReport) {
        for (k, v) in other.counts {
            *self.counts.entry(format!("{}/{k}", other.check)).or_default() += v;
        }
        for w in other.witnesses {
            self.fail(format!("{}: {w}", other.check));
        }
    }
}
