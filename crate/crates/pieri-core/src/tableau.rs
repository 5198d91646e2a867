//! Fillings and semistandard tableaux.
//!
//! A filling stores, for each part of the shape, the multiset of labels in
//! that part as a sorted vector. The parts play the role of the symmetric
//! factors `Sym^{lambda_1} V ⊗ Sym^{lambda_2} V ⊗ ...`, so the order of labels
//! inside a part carries no information. A filling is semistandard when the
//! `p`-th smallest label of part `r` is smaller than the `p`-th smallest label
//! of part `r + 1` for every position the two share.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::Partition;
use crate::symfunc::dimension_u64;

pub type Filling = Vec<Vec<u32>>;

pub fn shape_of(f: &Filling) -> Vec<u32> {
    f.iter().map(|r| r.len() as u32).collect()
}

/// Sorts every part, making the representation canonical.
pub fn normalize(f: &mut Filling) {
    for r in f.iter_mut() {
        r.sort_unstable();
    }
    while f.last().is_some_and(|r| r.is_empty()) {
        f.pop();
    }
}

pub fn weight(f: &Filling, n: usize) -> Vec<u32> {
    let mut w = alloc::vec![0u32; n];
    for r in f {
        for &v in r {
            w[v as usize - 1] += 1;
        }
    }
    w
}

pub fn is_semistandard(f: &Filling) -> bool {
    f.windows(2).all(|w| {
        w[1].len() <= w[0].len() && w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi)
    })
}

/// The tableau whose part `i` is filled with the label `i` (1-based).
pub fn canonical(shape: &Partition) -> Filling {
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| alloc::vec![i as u32 + 1; len as usize])
        .collect()
}

/// All semistandard tableaux of `shape` with labels in `1..=n`, sorted.
pub fn semistandard(shape: &Partition, n: usize) -> Vec<Filling> {
    let mut out = Vec::new();
    if shape.len() > n {
        return out;
    }
    let mut cur: Filling = Vec::new();
    ssyt_rows(shape.parts(), n as u32, &mut cur, &mut out);
    out.sort();
    out
}

fn ssyt_rows(shape: &[u32], n: u32, cur: &mut Filling, out: &mut Vec<Filling>) {
    let r = cur.len();
    if r == shape.len() {
        out.push(cur.clone());
        return;
    }
    let len = shape[r] as usize;
    let mut row = Vec::with_capacity(len);
    fill_row(len, n, r, cur, &mut row, shape, out);
}

fn fill_row(len: usize, n: u32, r: usize, cur: &mut Filling, row: &mut Vec<u32>, shape: &[u32], out: &mut Vec<Filling>) {
    let p = row.len();
    if p == len {
        cur.push(row.clone());
        ssyt_rows(shape, n, cur, out);
        cur.pop();
        return;
    }
    let mut lo = row.last().copied().unwrap_or(1);
    if r > 0 {
        lo = lo.max(cur[r - 1][p] + 1);
    }
    // leave room for the strictly larger labels below this position
    let below = shape[r + 1..].iter().filter(|&&l| l as usize > p).count() as u32;
    let hi = n.saturating_sub(below);
    for v in lo..=hi {
        row.push(v);
        fill_row(len, n, r, cur, row, shape, out);
        row.pop();
    }
}

/// The semistandard basis of `S_shape V`, `dim V = n`, with an index.
#[derive(Clone, Debug)]
pub struct SchurBasis {
    pub shape: Partition,
    pub n: usize,
    pub tableaux: Vec<Filling>,
    index: BTreeMap<Filling, usize>,
}

impl SchurBasis {
    pub fn new(shape: &Partition, n: usize, cap: u64) -> Result<Self, Error> {
        let dim = dimension_u64(shape, n);
        if dim > cap {
            return Err(Error::SizeCap { dim, cap });
        }
        let tableaux = semistandard(shape, n);
        let index = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(SchurBasis { shape: shape.clone(), n, tableaux, index })
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn index_of(&self, t: &Filling) -> Option<usize> {
        self.index.get(t).copied()
    }
}

/// Multinomial-style enumeration of all fillings of `shape` with content `w`.
pub fn fillings_with_weight(shape: &[u32], w: &[u32]) -> Vec<Filling> {
    let mut out = Vec::new();
    let mut rem = w.to_vec();
    let mut cur: Filling = Vec::new();
    fill_rec(shape, &mut rem, &mut cur, &mut out);
    out
}

fn fill_rec(shape: &[u32], rem: &mut Vec<u32>, cur: &mut Filling, out: &mut Vec<Filling>) {
    if cur.len() == shape.len() {
        if rem.iter().all(|&x| x == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let len = shape[cur.len()];
    let mut row = Vec::with_capacity(len as usize);
    choose_multiset(0, len, shape, rem, &mut row, cur, out);
}

fn choose_multiset(v: usize, left: u32, shape: &[u32], rem: &mut Vec<u32>, row: &mut Vec<u32>, cur: &mut Filling, out: &mut Vec<Filling>) {
    if left == 0 {
        cur.push(row.clone());
        fill_rec(shape, rem, cur, out);
        cur.pop();
        return;
    }
    if v == rem.len() {
        return;
    }
    let avail = rem[v];
    for take in (0..=avail.min(left)).rev() {
        rem[v] -= take;
        for _ in 0..take {
            row.push(v as u32 + 1);
        }
        choose_multiset(v + 1, left - take, shape, rem, row, cur, out);
        for _ in 0..take {
            row.pop();
        }
        rem[v] += take;
    }
}
