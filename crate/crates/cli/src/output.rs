use std::collections::BTreeMap;

use hcpairs::error::Error;
use hcpairs::report::{Check, Report};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
    Unsupported,
}

/// Everything printed for one invocation. Lists keep the order in which
/// checks and files were visited, so identical inputs give identical bytes.
#[derive(Debug, Serialize)]
pub struct Output {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub artifact: Value,
    #[serde(skip)]
    pub table: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Output {
    pub fn new(command: &str, input: &str) -> Output {
        Output {
            command: command.into(),
            input: input.into(),
            field: None,
            status: Status::Pass,
            error: None,
            checks: Vec::new(),
            artifact: Value::Null,
            table: None,
            timings: None,
        }
    }

    pub fn extend(&mut self, prefix: &str, r: Report) {
        let mut all = Report { checks: std::mem::take(&mut self.checks) };
        all.extend_prefixed(prefix, r);
        self.checks = all.checks;
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn finish_checks(&mut self) {
        self.status = if self.passed() { Status::Pass } else { Status::Fail };
    }

    pub fn set_error(&mut self, e: &Error) {
        self.status = match e {
            Error::CharacteristicTwo | Error::UnsupportedCharacteristic { .. } | Error::CharacteristicThreeLie => {
                Status::Unsupported
            }
            Error::Schema(_)
            | Error::InvalidScalar { .. }
            | Error::UnknownSymbol(_)
            | Error::NotPrime(_)
            | Error::Dimension(_) => Status::InputError,
            _ => Status::Fail,
        };
        self.error = Some(e.to_string());
    }

    pub fn set_timing(&mut self, key: &str, ms: f64) {
        self.timings.get_or_insert_with(BTreeMap::new).insert(key.into(), ms);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output serializes")
    }

    pub fn to_table(&self) -> String {
        let status = serde_json::to_value(self.status).expect("status serializes");
        let mut s = format!("{} {}: {}\n", self.command, self.input, status.as_str().unwrap_or("?"));
        if let Some(f) = &self.field {
            s.push_str(&format!("field: {f}\n"));
        }
        if let Some(e) = &self.error {
            s.push_str(&format!("error: {e}\n"));
        }
        s.push_str(&Report { checks: self.checks.clone() }.to_table());
        match &self.table {
            Some(t) => s.push_str(t),
            None => {
                if let Value::Object(m) = &self.artifact {
                    for (k, v) in m {
                        if !v.is_object() && !v.is_array() {
                            s.push_str(&format!("{k}: {v}\n"));
                        }
                    }
                }
            }
        }
        if let Some(t) = &self.timings {
            for (k, v) in t {
                s.push_str(&format!("{k}: {v:.1}\n"));
            }
        }
        s
    }
}
