use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Outcome of checking one relation at one weight.
///
/// `holds` is decided from `values` alone, and `witnesses` is non-empty
/// exactly when the relation fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub n: u64,
    #[serde(serialize_with = "ordered_map")]
    pub values: Vec<(String, i64)>,
    pub holds: bool,
    pub witnesses: Vec<String>,
}

fn ordered_map<S: Serializer>(values: &[(String, i64)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(values.len()))?;
    for (k, v) in values {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl IdentityReport {
    /// Builds a report. A failing check with no partition witnesses gets
    /// `relation` (the instantiated claim) as its witness.
    pub fn new(
        identity_id: impl Into<String>,
        n: u64,
        values: Vec<(&str, i64)>,
        holds: bool,
        relation: impl FnOnce() -> String,
        witnesses: Vec<String>,
    ) -> Self {
        let witnesses = match (holds, witnesses.is_empty()) {
            (true, _) => Vec::new(),
            (false, true) => vec![relation()],
            (false, false) => witnesses,
        };
        IdentityReport {
            identity_id: identity_id.into(),
            n,
            values: values
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            holds,
            witnesses,
        }
    }

    pub fn value(&self, name: &str) -> Option<i64> {
        self.values.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }

    /// `name=value` pairs joined by `;`.
    pub fn values_field(&self) -> String {
        self.values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn witnesses_field(&self) -> String {
        self.witnesses.join("|")
    }

    /// Column order used by every tabular rendering.
    pub const COLUMNS: [&'static str; 5] = ["identity_id", "n", "values", "holds", "witnesses"];

    pub fn fields(&self) -> [String; 5] {
        [
            self.identity_id.clone(),
            self.n.to_string(),
            self.values_field(),
            self.holds.to_string(),
            self.witnesses_field(),
        ]
    }
}
