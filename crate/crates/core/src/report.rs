use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::scalar::Scalar;

/// Outcome of one identity check, with both sides already cross-multiplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub holds: bool,
    pub notes: Vec<String>,
}

impl IdentityReport {
    pub fn new(identity: &str, lhs: Scalar, rhs: Scalar) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            lhs,
            rhs,
            holds,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// One JSON object: `{identity, params, lhs, rhs, holds, notes}` with
    /// scalars as `"p/q"` strings.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire<'a> {
            identity: &'a str,
            params: &'a BTreeMap<String, String>,
            lhs: String,
            rhs: String,
            holds: bool,
            notes: String,
        }
        serde_json::to_string(&Wire {
            identity: &self.identity,
            params: &self.params,
            lhs: self.lhs.to_ratio_string(),
            rhs: self.rhs.to_ratio_string(),
            holds: self.holds,
            notes: self.notes.join("; "),
        })
        .expect("report serializes")
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        write!(
            f,
            "{} [{}] {} : lhs={} rhs={}",
            self.identity,
            params,
            if self.holds { "holds" } else { "FAILS" },
            self.lhs,
            self.rhs
        )?;
        if !self.notes.is_empty() {
            write!(f, " ({})", self.notes.join("; "))?;
        }
        Ok(())
    }
}
