//! Cayley-table interchange format: a JSON object with fields "order"
//! (integer) and "table" (order x order integers, row i = left
//! multiplication by element i), plus optional "labels".

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct CayleyTableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Parses and validates a Cayley-table document. Returns the group and
/// whether the exhaustive associativity check ran (skipped above order 512).
pub fn import_json(text: &str, spec: String) -> Result<(FiniteGroup, bool)> {
    let file: CayleyTableFile =
        serde_json::from_str(text).map_err(|e| Error::BadInput(format!("malformed JSON: {e}")))?;
    FiniteGroup::from_table(file.order, file.table, file.labels, spec)
}

pub fn export_json(g: &FiniteGroup) -> String {
    let file = CayleyTableFile {
        order: g.order(),
        table: (0..g.order())
            .map(|i| (0..g.order()).map(|j| g.multiply(i, j).unwrap()).collect())
            .collect(),
        labels: Some(g.labels().to_vec()),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}
