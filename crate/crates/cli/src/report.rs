//! The JSON report every command emits: echoed inputs, named exact results,
//! verification checks, warnings. All numbers are rational strings;
//! rendering is deterministic (sorted maps, ordered checks, no timestamps).

use std::collections::BTreeMap;

use kappa_core::ring::{rational_string, Rational};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl Check {
    pub fn rational(name: impl Into<String>, lhs: &Rational, rhs: &Rational) -> Self {
        Check {
            name: name.into(),
            lhs: rational_string(lhs),
            rhs: rational_string(rhs),
            equal: lhs == rhs,
        }
    }

    pub fn text(name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let equal = lhs == rhs;
        Check { name: name.into(), lhs, rhs, equal }
    }
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            checks: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn result_rational(&mut self, key: &str, value: &Rational) {
        self.result(key, rational_string(value));
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| !c.equal)
    }

    pub fn render(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}
