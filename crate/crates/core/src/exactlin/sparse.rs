//! Sparse vectors: sorted `(index, coefficient)` lists with no zero entries.

use super::Scalar;

pub type SVec = Vec<(usize, Scalar)>;

pub fn from_dense(v: &[Scalar]) -> SVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &SVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn unit(i: usize) -> SVec {
    vec![(i, Scalar::one())]
}

/// `a + s·b`, merged and with zeros dropped.
pub fn add_scaled(a: &SVec, s: &Scalar, b: &SVec) -> SVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = s * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            v.add_mul(s, &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &SVec, s: &Scalar) -> SVec {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, x)| (*i, x * s)).collect()
}

/// Dense accumulator with a touched-index list, reusable across evaluations.
#[derive(Debug, Clone)]
pub struct Accumulator {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub fn new(n: usize) -> Self {
        Accumulator { vals: vec![Scalar::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    #[inline]
    pub fn add(&mut self, i: usize, x: &Scalar) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += x;
    }

    #[inline]
    pub fn add_mul(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.vals[i].add_mul(a, b);
    }

    pub fn is_zero(&self) -> bool {
        self.touched.iter().all(|&i| self.vals[i].is_zero())
    }

    /// Drains the accumulated vector, leaving the accumulator zeroed.
    pub fn take(&mut self) -> SVec {
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &i in &self.touched {
            let v = std::mem::take(&mut self.vals[i]);
            self.mark[i] = false;
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }

    pub fn clear(&mut self) {
        for &i in &self.touched {
            self.vals[i] = Scalar::zero();
            self.mark[i] = false;
        }
        self.touched.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_scaled_merges_and_cancels() {
        let a = vec![(0, Scalar::from_int(1)), (2, Scalar::from_int(2))];
        let b = vec![(1, Scalar::from_int(5)), (2, Scalar::from_int(1))];
        let r = add_scaled(&a, &Scalar::from_int(-2), &b);
        assert_eq!(r, vec![(0, Scalar::from_int(1)), (1, Scalar::from_int(-10))]);
    }

    #[test]
    fn accumulator_take_resets() {
        let mut acc = Accumulator::new(4);
        acc.add(3, &Scalar::from_int(2));
        acc.add(1, &Scalar::from_int(1));
        acc.add(3, &Scalar::from_int(-2));
        assert_eq!(acc.take(), vec![(1, Scalar::one())]);
        assert!(acc.is_zero());
        assert!(acc.take().is_empty());
    }
}
