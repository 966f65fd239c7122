use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use isopair_core::pairs::{AxiomReport, PairStructure};

/// A stored pair with the report produced from it. `pair_sha256` is the
/// digest of the pair's canonical JSON and links the two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub builder: String,
    pub pair: PairStructure,
    pub report: AxiomReport,
    pub pair_sha256: String,
    pub created_unix: u64,
}

pub fn digest(p: &PairStructure) -> String {
    hex::encode(Sha256::digest(p.to_json().as_bytes()))
}

impl CatalogEntry {
    pub fn new(name: &str, builder: &str, pair: PairStructure, report: AxiomReport) -> Self {
        let created_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        CatalogEntry { name: name.into(), builder: builder.into(), pair_sha256: digest(&pair), pair, report, created_unix }
    }

    pub fn linked(&self) -> bool {
        digest(&self.pair) == self.pair_sha256
    }
}
