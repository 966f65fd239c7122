//! Canonical JSON form of a pair. Only nonzero constants are written, in
//! index order, so serialization is byte-stable.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::report::Entry;
use super::{Kind, PairError, PairStructure, Side};
use crate::supercore::SuperSpace;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Wire {
    v1: SuperSpace,
    v2: SuperSpace,
    kind: Kind,
    #[serde(default)]
    m1: Vec<First>,
    #[serde(default)]
    m2: Vec<Second>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct First {
    u: usize,
    x: usize,
    y: usize,
    out: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Second {
    x: usize,
    u: usize,
    v: usize,
    out: Vec<Entry>,
}

fn entries(v: &[(usize, crate::exactlin::Scalar)]) -> Vec<Entry> {
    v.iter().map(|(i, c)| Entry { idx: *i, c: c.clone() }).collect()
}

impl Serialize for PairStructure {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            v1: self.v1.clone(),
            v2: self.v2.clone(),
            kind: self.kind,
            m1: self.entries(Side::First).map(|(u, x, y, o)| First { u, x, y, out: entries(o) }).collect(),
            m2: self.entries(Side::Second).map(|(x, u, v, o)| Second { x, u, v, out: entries(o) }).collect(),
        }
        .serialize(s)
    }
}

fn build(w: Wire) -> Result<PairStructure, PairError> {
    let mut p = PairStructure::zero(w.v1, w.v2, w.kind);
    let mut seen = std::collections::HashSet::new();
    let items = w
        .m1
        .into_iter()
        .map(|e| (Side::First, e.u, e.x, e.y, e.out))
        .chain(w.m2.into_iter().map(|e| (Side::Second, e.x, e.u, e.v, e.out)));
    for (side, s, a, b, out) in items {
        if !seen.insert((side, s, a, b)) {
            return Err(PairError::Malformed(format!("duplicate entry {side:?} ({s}, {a}, {b})")));
        }
        p.set(side, s, a, b, out.into_iter().map(|e| (e.idx, e.c)).collect())?;
    }
    Ok(p)
}

impl<'de> Deserialize<'de> for PairStructure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        build(Wire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl PairStructure {
    /// Pretty-printed canonical JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pairs always serialize")
    }

    pub fn from_json(src: &str) -> Result<PairStructure, PairError> {
        let w: Wire = serde_json::from_str(src).map_err(|e| PairError::Malformed(e.to_string()))?;
        build(w)
    }
}
