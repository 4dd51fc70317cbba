use std::fmt::Write as _;
use std::str::FromStr;

use conejac::AbelianGroup;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

fn number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub torsion: Vec<Number>,
    pub free_rank: usize,
}

impl From<&AbelianGroup> for GroupRecord {
    fn from(g: &AbelianGroup) -> Self {
        GroupRecord {
            torsion: g.torsion().iter().map(number).collect(),
            free_rank: g.free_rank(),
        }
    }
}

/// One computation's result. Field order is the serialization order and is
/// fixed; absent fields are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub input: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forest_count: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobian: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forest_group: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_tau: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_jacobian: Option<GroupRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trees: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rooted_forests: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bijection: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

impl Record {
    pub fn new(input: impl Into<String>) -> Self {
        Record {
            input: input.into(),
            ..Default::default()
        }
    }

    pub fn set_tau(&mut self, v: &BigInt) {
        self.tau = Some(number(v));
    }

    pub fn set_forest_count(&mut self, v: &BigInt) {
        self.forest_count = Some(number(v));
    }

    pub fn set_cone_tau(&mut self, v: &BigInt) {
        self.cone_tau = Some(number(v));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Human-readable block: one `key: value` line per present field, followed
/// by any extra notes.
pub fn render_human(groups: &[(&str, String)], notes: &[String]) -> String {
    let width = groups.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in groups {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    for note in notes {
        let _ = writeln!(out, "{note}");
    }
    out
}
