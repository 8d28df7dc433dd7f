use serde::Serialize;

use crate::superlin::SparseVec;

/// A counterexample: where a check failed and the two sides that differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub at: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: &str) -> Check {
        Check {
            name: name.to_string(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: &str, witness: Witness) -> Check {
        Check {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn from_result(name: &str, r: Option<Witness>) -> Check {
        match r {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

/// Ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Plain-text table, one check per line.
    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{:width$}  {status}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!(
                    "  at ({})  lhs = {}  rhs = {}",
                    w.at.join(", "),
                    w.lhs,
                    w.rhs
                ));
            }
            out.push('\n');
        }
        out
    }
}

pub fn witness<S: Into<String>>(at: Vec<S>, lhs: String, rhs: String) -> Witness {
    Witness {
        at: at.into_iter().map(Into::into).collect(),
        lhs,
        rhs,
    }
}

/// Renders a linear combination as `2*a - b + 1/2*c`.
pub fn format_combination<K: Ord + Clone, F: Fn(&K) -> String>(v: &SparseVec<K>, label: F) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in v.iter().enumerate() {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let name = label(k);
        if mag == "1" {
            out.push_str(&name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    out
}

/// Renders a coordinate vector using basis names.
pub fn format_vector(names: &[String], v: &SparseVec<usize>) -> String {
    format_combination(v, |&i| names[i].clone())
}

/// Renders an element of a tensor square.
pub fn format_tensor(left: &[String], right: &[String], v: &SparseVec<(usize, usize)>) -> String {
    format_combination(v, |&(i, j)| format!("{}⊗{}", left[i], right[j]))
}
