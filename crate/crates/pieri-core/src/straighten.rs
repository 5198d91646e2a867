//! Straightening fillings into the semistandard basis.
//!
//! `S_lambda V` is the quotient of `Sym^{lambda_1} V ⊗ Sym^{lambda_2} V ⊗ ...`
//! by the images of the exchange maps that move `k` labels from part `r` of a
//! filling of shape `(.., lambda_r + k, lambda_{r+1} - k, ..)` into part
//! `r + 1`. Each weight space is handled separately: fillings are indexed with
//! the non-semistandard ones first, the relations are echelonized with
//! lowest-index pivots, and the construction is accepted only when the rank
//! equals the number of non-semistandard fillings. Reducing a filling then
//! leaves a combination of semistandard fillings only.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{pre, Error};
use crate::linalg::{Echelon, SparseVec, Q};
use crate::partition::Partition;
use crate::symfunc::{dimension_u64, kostka};
use crate::tableau::{fillings_with_weight, is_semistandard, normalize, shape_of, weight, Filling};
use crate::DEFAULT_SIZE_CAP;

struct WeightSpace {
    index: BTreeMap<Filling, usize>,
    fillings: Vec<Filling>,
    ech: Echelon,
}

/// Caller-owned cache of straightening data keyed by `(shape, weight)`.
pub struct Straightener {
    pub cap: u64,
    spaces: BTreeMap<(Vec<u32>, Vec<u32>), WeightSpace>,
}

impl Default for Straightener {
    fn default() -> Self {
        Self::new(DEFAULT_SIZE_CAP)
    }
}

fn binom(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k {
        r = r * u64::from(n - i) / u64::from(i + 1);
    }
    r
}

/// Sub-multisets of a sorted multiset with their multiplicity weights.
fn sub_multisets(row: &[u32], k: usize) -> Vec<(Vec<u32>, u64)> {
    let mut distinct: Vec<(u32, u32)> = Vec::new();
    for &v in row {
        match distinct.last_mut() {
            Some((x, m)) if *x == v => *m += 1,
            _ => distinct.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    fn rec(i: usize, left: usize, d: &[(u32, u32)], cur: &mut Vec<u32>, c: u64, out: &mut Vec<(Vec<u32>, u64)>) {
        if left == 0 {
            out.push((cur.clone(), c));
            return;
        }
        if i == d.len() {
            return;
        }
        let (v, m) = d[i];
        for take in (0..=m.min(left as u32)).rev() {
            for _ in 0..take {
                cur.push(v);
            }
            rec(i + 1, left - take as usize, d, cur, c * binom(m, take), out);
            for _ in 0..take {
                cur.pop();
            }
        }
    }
    rec(0, k, &distinct, &mut Vec::new(), 1, &mut out);
    out
}

impl Straightener {
    pub fn new(cap: u64) -> Self {
        Straightener { cap, spaces: BTreeMap::new() }
    }

    fn space(&mut self, shape: &[u32], w: &[u32]) -> Result<&WeightSpace, Error> {
        let key = (shape.to_vec(), w.to_vec());
        if !self.spaces.contains_key(&key) {
            let ws = build_space(shape, w)?;
            self.spaces.insert(key.clone(), ws);
        }
        Ok(&self.spaces[&key])
    }

    /// Class of `f` in `S_shape V` as a combination of semistandard fillings.
    pub fn straighten(&mut self, f: &Filling, n: usize) -> Result<Vec<(Filling, Q)>, Error> {
        let mut f = f.clone();
        normalize(&mut f);
        let shape = shape_of(&f);
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(pre("filling shape is not a partition"));
        }
        if f.iter().flatten().any(|&v| v == 0 || v as usize > n) {
            return Err(pre("label out of range"));
        }
        if is_semistandard(&f) {
            return Ok(alloc::vec![(f, Q::one())]);
        }
        let dim = dimension_u64(&Partition::from_slice(&shape), n);
        if dim > self.cap {
            return Err(Error::SizeCap { dim, cap: self.cap });
        }
        let w = weight(&f, n);
        let ws = self.space(&shape, &w)?;
        let v = SparseVec::unit(ws.index[&f]);
        let r = ws.ech.reduce(&v);
        Ok(r.entries().iter().map(|(i, c)| (ws.fillings[*i].clone(), c.clone())).collect())
    }

    /// Straightens a linear combination, merging equal tableaux.
    pub fn straighten_sum(&mut self, terms: &[(Filling, Q)], n: usize) -> Result<BTreeMap<Filling, Q>, Error> {
        let mut out: BTreeMap<Filling, Q> = BTreeMap::new();
        for (f, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (t, d) in self.straighten(f, n)? {
                let e = out.entry(t).or_insert_with(Q::zero);
                *e += c * d;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

fn build_space(shape: &[u32], w: &[u32]) -> Result<WeightSpace, Error> {
    let mut all = fillings_with_weight(shape, w);
    // non-semistandard fillings first so that they become the pivots
    all.sort_by(|a, b| is_semistandard(a).cmp(&is_semistandard(b)).then_with(|| a.cmp(b)));
    let bad = all.iter().filter(|f| !is_semistandard(f)).count();
    let index: BTreeMap<Filling, usize> = all.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let target = kostka(&Partition::from_slice(shape), w) as usize;
    if all.len() - bad != target {
        return Err(pre("semistandard count disagrees with the Kostka number"));
    }
    let mut ech = Echelon::new();
    let max_k = shape.iter().copied().max().unwrap_or(0);
    for k in 1..=max_k {
        if ech.rank() == bad {
            break;
        }
        for r in 0..shape.len().saturating_sub(1) {
            if shape[r + 1] < k {
                continue;
            }
            let mut src_shape = shape.to_vec();
            src_shape[r] += k;
            src_shape[r + 1] -= k;
            for src in fillings_with_weight(&src_shape, w) {
                let mut img: BTreeMap<usize, Q> = BTreeMap::new();
                for (u, c) in sub_multisets(&src[r], k as usize) {
                    let mut g = src.clone();
                    for x in &u {
                        let pos = g[r].iter().position(|y| y == x).expect("member");
                        g[r].remove(pos);
                    }
                    g[r + 1].extend_from_slice(&u);
                    g[r + 1].sort_unstable();
                    let e = img.entry(index[&g]).or_insert_with(Q::zero);
                    *e += Q::from_integer(c.into());
                }
                ech.insert(&SparseVec::from_map(img));
            }
        }
    }
    if ech.rank() != bad || ech.pivots().any(|&p| p >= bad) {
        return Err(pre("straightening relations do not certify the semistandard basis"));
    }
    Ok(WeightSpace { index, fillings: all, ech })
}
