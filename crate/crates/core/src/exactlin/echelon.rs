//! Incremental sparse row echelon form. The pivot of a row is its largest
//! index, so reduction only ever introduces smaller indices and the normal
//! form of a vector is unique.

use std::collections::BTreeMap;

use super::{SVec, Scalar};

#[derive(Debug, Clone, Default)]
pub struct Echelon {
    /// Pivot index to a row whose largest index is the pivot, with
    /// coefficient one there.
    rows: BTreeMap<usize, SVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Normal form of `v` modulo the span: no pivot index survives.
    pub fn reduce(&self, v: &SVec) -> SVec {
        let mut w: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = usize::MAX;
        loop {
            let next = w.range(..=cursor).rev().map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(c) = next else { break };
            let f = w.remove(&c).expect("present");
            for (k, x) in &self.rows[&c] {
                if *k == c {
                    continue;
                }
                let e = w.entry(*k).or_insert_with(Scalar::zero);
                e.add_mul(&-&f, x);
                if e.is_zero() {
                    w.remove(k);
                }
            }
            if c == 0 {
                break;
            }
            cursor = c - 1;
        }
        w.into_iter().collect()
    }

    /// Adds `v` to the span. Returns the new pivot, or `None` if `v` was
    /// already in the span.
    pub fn insert(&mut self, v: &SVec) -> Option<usize> {
        let r = self.reduce(v);
        let (c, lead) = r.last().cloned()?;
        let inv = lead.recip().expect("nonzero lead");
        self.rows.insert(c, r.iter().map(|(k, x)| (*k, x * &inv)).collect());
        Some(c)
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[(usize, i64)]) -> SVec {
        v.iter().map(|&(i, c)| (i, Scalar::from_int(c))).collect()
    }

    #[test]
    fn reduce_and_insert() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(&s(&[(0, 1), (2, 2)])), Some(2));
        assert_eq!(e.insert(&s(&[(0, 2), (2, 4)])), None);
        assert_eq!(e.insert(&s(&[(1, 1), (2, 1)])), Some(1));
        // x2 = -x0/2, x1 = -x2 = x0/2.
        assert_eq!(e.reduce(&s(&[(2, 2)])), s(&[(0, -1)]));
        assert_eq!(e.reduce(&s(&[(1, 2)])), s(&[(0, 1)]));
        assert!(e.contains(&s(&[(0, 1), (1, -2)])));
        assert!(!e.contains(&s(&[(0, 1)])));
        assert_eq!(e.rank(), 2);
    }
}
