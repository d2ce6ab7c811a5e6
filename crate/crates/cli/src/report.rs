use std::collections::BTreeMap;

use nijenhuis_core::Check;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl From<Check> for CheckDoc {
    fn from(c: Check) -> Self {
        CheckDoc { name: c.name, pass: c.pass, witness: c.witness }
    }
}

/// The JSON record printed by every command.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 of each input document, keyed by flag name.
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<CheckDoc>,
    pub outputs: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), ..Report::default() }
    }

    pub fn check(&mut self, c: Check) -> &mut Self {
        self.checks.push(c.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.outputs.insert(key.to_string(), value);
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        // serde_json's map is ordered by key, so going through Value sorts nested objects
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
        s.push('\n');
        s
    }
}
