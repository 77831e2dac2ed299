use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;

/// Outcome of an exhaustive check. A failing report always carries a
/// witness that can be re-checked by direct computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub counts: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub elements: Vec<String>,
}

impl Witness {
    pub fn new<'a>(
        label: impl Into<String>,
        elements: impl IntoIterator<Item = &'a Partition>,
    ) -> Self {
        Witness {
            label: label.into(),
            elements: elements.into_iter().map(|e| e.to_string()).collect(),
        }
    }
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            holds: true,
            witness: None,
            counts: BTreeMap::new(),
        }
    }

    pub fn count(mut self, key: &str, value: impl TryInto<u64>) -> Self {
        self.counts
            .insert(key.to_string(), value.try_into().unwrap_or(u64::MAX));
        self
    }

    pub fn fail(mut self, witness: Witness) -> Self {
        self.holds = false;
        self.witness = Some(witness);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
