//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are sorted `(index, value)` lists with no stored zeros. The
//! echelon form keeps one row per pivot, normalized so the pivot entry is 1;
//! every row is supported on indices at or after its pivot.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn from_map(m: BTreeMap<usize, Q>) -> Self {
        SparseVec {
            entries: m.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: alloc::vec![(i, Q::one())] }
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|e| e.0)
    }

    pub fn scale(&self, c: &Q) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Q, other: &SparseVec) -> SparseVec {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + c * &b[j].1;
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Q::one(), other)
    }
}

/// Incremental row echelon form with lowest-index pivots.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    /// Reduces `v` against every pivot, processing pivots in increasing order.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut from = 0;
        loop {
            let next = v
                .entries
                .iter()
                .map(|e| e.0)
                .filter(|&i| i >= from)
                .find(|i| self.rows.contains_key(i));
            let Some(p) = next else {
                return v;
            };
            let c = -v.get(p);
            v = v.axpy(&c, &self.rows[&p]);
            from = p + 1;
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.leading() else {
            return false;
        };
        let inv = Q::one() / r.get(p);
        self.rows.insert(p, r.scale(&inv));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A matrix stored by columns: column `j` is the image of domain basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, cols: alloc::vec![SparseVec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn rank(&self) -> usize {
        rank(&self.cols)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.entries() {
            out = out.axpy(c, &self.cols[*j]);
        }
        out
    }

    /// `self * other`: first `other`, then `self`.
    pub fn compose(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch in composition");
        Matrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { nrows: self.nrows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    /// `Some(q)` with `self == q * other` when the matrices are proportional and nonzero.
    pub fn ratio_to(&self, other: &Matrix) -> Option<Q> {
        if self.nrows != other.nrows || self.ncols() != other.ncols() {
            return None;
        }
        let mut ratio: Option<Q> = None;
        for (a, b) in self.cols.iter().zip(&other.cols) {
            if a.entries.len() != b.entries.len() {
                return None;
            }
            for ((i, x), (j, y)) in a.entries.iter().zip(&b.entries) {
                if i != j {
                    return None;
                }
                let r = x / y;
                match &ratio {
                    None => ratio = Some(r),
                    Some(q) if *q != r => return None,
                    _ => {}
                }
            }
        }
        ratio
    }

    /// Triples `(row, column, value)` in column-major order.
    pub fn triples(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.entries() {
                out.push((*i, j, v.clone()));
            }
        }
        out
    }
}
