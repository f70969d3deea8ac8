//! Structured pass/fail results for the theorem checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Witnesses kept per report; further failures are only counted.
pub const MAX_WITNESSES: usize = 64;

/// A concrete counterexample: what kind of object failed, which objects are
/// involved (vertex, edge or matrix-entry identifiers), and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub subject: Vec<String>,
    pub detail: String,
}

/// Outcome of one named check. `pass` is true exactly when no witness was
/// recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    name: String,
    pass: bool,
    witnesses: Vec<Witness>,
    stats: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass: true,
            witnesses: Vec::new(),
            stats: BTreeMap::new(),
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn stats(&self) -> &BTreeMap<String, u64> {
        &self.stats
    }

    pub fn stat(&self, key: &str) -> Option<u64> {
        self.stats.get(key).copied()
    }

    pub fn fail<S: ToString>(
        &mut self,
        kind: &str,
        subject: impl IntoIterator<Item = S>,
        detail: impl Into<String>,
    ) {
        self.pass = false;
        *self.stats.entry("failures".into()).or_insert(0) += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                kind: kind.into(),
                subject: subject.into_iter().map(|s| s.to_string()).collect(),
                detail: detail.into(),
            });
        }
    }

    pub fn set_stat(&mut self, key: &str, value: u64) {
        self.stats.insert(key.into(), value);
    }

    pub fn add_stat(&mut self, key: &str, value: u64) {
        *self.stats.entry(key.into()).or_insert(0) += value;
    }

    /// Folds another report into this one, prefixing its stats.
    pub fn absorb(&mut self, other: Report) {
        for w in other.witnesses {
            self.pass = false;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        for (k, v) in other.stats {
            self.add_stat(&format!("{}.{k}", other.name), v);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_tracks_witnesses() {
        let mut r = Report::new("demo");
        assert!(r.pass());
        r.set_stat("edges", 5);
        r.fail("edge", ["v0", "v1"], "label mismatch");
        assert!(!r.pass());
        assert_eq!(r.witnesses().len(), 1);
        assert_eq!(r.stat("failures"), Some(1));
        let json = r.to_json();
        let keys: Vec<usize> = ["\"name\"", "\"pass\"", "\"witnesses\"", "\"stats\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn witnesses_are_capped() {
        let mut r = Report::new("many");
        for k in 0..MAX_WITNESSES + 10 {
            r.fail("vertex", [k], "");
        }
        assert_eq!(r.witnesses().len(), MAX_WITNESSES);
        assert_eq!(r.stat("failures"), Some((MAX_WITNESSES + 10) as u64));
    }
}
