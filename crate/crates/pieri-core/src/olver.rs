//! Olver's polarization maps and the Pieri inclusions built from them.
//!
//! For a single box removed from column `k` (1-based), the map
//! `S_beta V -> V ⊗ S_alpha V` sends a tableau `T` to
//! `sum_J (-1)^{#J} tau_J(T) / c_J` over chains `J = (0 < j_2 < ... < k)`,
//! where `tau_{i j}` moves one label from column `j` to the end of column `i`
//! (column 0 being the `V` factor) and `c_J` multiplies
//! `beta_j - beta_k + k - j` over the intermediate `j`. Longer strips compose
//! single-box maps along a removal order and then project the tensor factors
//! onto `Sym^b V` or `∧^b V`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{pre, Error};
use crate::linalg::{Matrix, SparseVec, Q};
use crate::partition::{is_horizontal_strip, is_vertical_strip, Partition};
use crate::straighten::Straightener;
use crate::symfunc::PieriKind;
use crate::tableau::{semistandard, Filling};

/// Labels carried by the `V` factors, in the order they were produced.
pub type Word = Vec<u32>;

/// `(word, tableau) -> coefficient`.
pub type Image = BTreeMap<(Word, Filling), Q>;

#[derive(Clone, Debug)]
pub struct LinearMap {
    pub domain: Vec<Filling>,
    pub codomain: Vec<(Word, Filling)>,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Caller-owned cache for straightening and single-box images.
#[derive(Default)]
pub struct OlverContext {
    pub st: Straightener,
    single: BTreeMap<(Vec<u32>, usize, usize, Filling), SingleImage>,
}

/// `((V label, tableau), coefficient)` terms of a single-box image.
pub type SingleImage = Vec<((u32, Filling), Q)>;

/// The 1-based column from which `alpha` is obtained by removing one box of `beta`.
pub fn single_box_column(beta: &Partition, alpha: &Partition) -> Option<usize> {
    if !beta.contains(alpha) || beta.size() != alpha.size() + 1 {
        return None;
    }
    beta.skew_columns(alpha).first().map(|j| j + 1)
}

/// Boxes removed column by column in increasing column order.
pub fn increasing_order(beta: &Partition, alpha: &Partition) -> Vec<usize> {
    let mut out = Vec::new();
    for j in 0..beta.len() {
        for _ in alpha.get(j)..beta.get(j) {
            out.push(j + 1);
        }
    }
    out
}

/// Removes one label from part `from` (weighted by multiplicity) and hands it to `put`.
fn take_each(f: &Filling, from: usize) -> Vec<(u32, Filling, u32)> {
    let mut out = Vec::new();
    let row = &f[from];
    let mut i = 0;
    while i < row.len() {
        let x = row[i];
        let m = row[i..].iter().take_while(|&&y| y == x).count();
        let mut g = f.clone();
        g[from].remove(i);
        out.push((x, g, m as u32));
        i += m;
    }
    out
}

impl OlverContext {
    pub fn new(cap: u64) -> Self {
        OlverContext { st: Straightener::new(cap), single: BTreeMap::new() }
    }

    /// Image of one tableau under the single-box map, straightened in `S_alpha V`.
    pub fn single_box_image(&mut self, beta: &Partition, k: usize, n: usize, t: &Filling) -> Result<SingleImage, Error> {
        let key = (beta.parts().to_vec(), k, n, t.clone());
        if let Some(v) = self.single.get(&key) {
            return Ok(v.clone());
        }
        let bk = i64::from(beta.get(k - 1));
        // (V label, filling) pairs before straightening
        let mut raw: BTreeMap<(u32, Filling), Q> = BTreeMap::new();
        for mask in 0u32..(1 << (k - 1)) {
            let mids: Vec<usize> = (1..k).filter(|j| mask & (1 << (j - 1)) != 0).collect();
            let mut c = Q::one();
            for &j in &mids {
                let v = i64::from(beta.get(j - 1)) - bk + (k - j) as i64;
                c *= Q::from_integer(BigInt::from(v));
            }
            let len = mids.len() + 2;
            let sign = if len.is_multiple_of(2) { Q::one() } else { -Q::one() };
            let coef = sign / c;
            let mut chain: Vec<usize> = mids.clone();
            chain.push(k);
            // tau_{0, j_2}: the first move takes a label into V
            let mut states: Vec<(u32, Filling, Q)> = take_each(t, chain[0] - 1)
                .into_iter()
                .map(|(x, g, m)| (x, g, Q::from_integer(m.into())))
                .collect();
            for w in chain.windows(2) {
                let (to, from) = (w[0] - 1, w[1] - 1);
                let mut next = Vec::new();
                for (x, g, c0) in states {
                    for (y, mut h, m) in take_each(&g, from) {
                        h[to].push(y);
                        h[to].sort_unstable();
                        next.push((x, h, &c0 * Q::from_integer(m.into())));
                    }
                }
                states = next;
            }
            for (x, g, c0) in states {
                let e = raw.entry((x, g)).or_insert_with(Q::zero);
                *e += &coef * c0;
            }
        }
        let mut out: BTreeMap<(u32, Filling), Q> = BTreeMap::new();
        for ((x, g), c) in raw {
            if c.is_zero() {
                continue;
            }
            for (s, d) in self.st.straighten(&g, n)? {
                let e = out.entry((x, s)).or_insert_with(Q::zero);
                *e += &c * d;
            }
        }
        let v: Vec<_> = out.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.single.insert(key, v.clone());
        Ok(v)
    }

    /// The single-box map `S_beta V -> V ⊗ S_alpha V` on the semistandard bases.
    pub fn olver_single_box(&mut self, beta: &Partition, alpha: &Partition, n: usize) -> Result<LinearMap, Error> {
        let k = single_box_column(beta, alpha)
            .ok_or_else(|| pre(alloc::format!("{beta}/{alpha} is not a single box")))?;
        let domain = semistandard(beta, n);
        let mut images = Vec::new();
        for t in &domain {
            let img: Image = self
                .single_box_image(beta, k, n, t)?
                .into_iter()
                .map(|((x, g), c)| ((alloc::vec![x], g), c))
                .collect();
            images.push(img);
        }
        Ok(assemble(domain, images, alpha, n, 1, None))
    }

    /// Image of `t` under the composite of single-box maps along `order`,
    /// with the `V` factors kept as an ordered word.
    pub fn tensor_image(&mut self, beta: &Partition, order: &[usize], n: usize, t: &Filling) -> Result<Image, Error> {
        let mut cur: Image = BTreeMap::new();
        cur.insert((Vec::new(), t.clone()), Q::one());
        let mut shape = beta.clone();
        for &c in order {
            let next_shape = shape
                .remove_box(c - 1)
                .ok_or_else(|| pre(alloc::format!("cannot remove a box from column {c} of {shape}")))?;
            let mut next: Image = BTreeMap::new();
            for ((w, g), coef) in cur {
                for ((x, h), d) in self.single_box_image(&shape, c, n, &g)? {
                    let mut w2 = w.clone();
                    w2.push(x);
                    let e = next.entry((w2, h)).or_insert_with(Q::zero);
                    *e += &coef * d;
                }
            }
            next.retain(|_, v| !v.is_zero());
            cur = next;
            shape = next_shape;
        }
        Ok(cur)
    }

    /// Image of `t` in `Sym^b V ⊗ S_alpha V` (sorted words) or `∧^b V ⊗ S_alpha V`
    /// (strictly increasing words).
    pub fn pieri_image(&mut self, beta: &Partition, order: &[usize], n: usize, kind: PieriKind, t: &Filling) -> Result<Image, Error> {
        let raw = self.tensor_image(beta, order, n, t)?;
        Ok(project(raw, kind))
    }

    /// The Pieri inclusion along a removal order (1-based columns).
    pub fn pieri_inclusion(
        &mut self,
        beta: &Partition,
        alpha: &Partition,
        n: usize,
        order: &[usize],
        kind: PieriKind,
    ) -> Result<LinearMap, Error> {
        check_order(beta, alpha, order, kind)?;
        let domain = semistandard(beta, n);
        let mut images = Vec::new();
        for t in &domain {
            images.push(self.pieri_image(beta, order, n, kind, t)?);
        }
        Ok(assemble(domain, images, alpha, n, order.len(), Some(kind)))
    }

    /// `Sym^{d-b} V ⊗ S_beta V -> Sym^d V ⊗ S_alpha V`, multiplying by the
    /// domain monomial after the Pieri inclusion.
    pub fn induced_degree_map(
        &mut self,
        beta: &Partition,
        alpha: &Partition,
        n: usize,
        d: usize,
        order: &[usize],
    ) -> Result<(Vec<(Word, Filling)>, LinearMap), Error> {
        check_order(beta, alpha, order, PieriKind::Symmetric)?;
        let b = order.len();
        if d < b {
            return Err(pre("degree below the strip size"));
        }
        let src_t = semistandard(beta, n);
        let mut domain_labels = Vec::new();
        for m in monomials(n, d - b) {
            for t in &src_t {
                domain_labels.push((m.clone(), t.clone()));
            }
        }
        let mut images = Vec::new();
        let mut cache: BTreeMap<Filling, Image> = BTreeMap::new();
        for (m, t) in &domain_labels {
            if !cache.contains_key(t) {
                let img = self.pieri_image(beta, order, n, PieriKind::Symmetric, t)?;
                cache.insert(t.clone(), img);
            }
            let mut img: Image = BTreeMap::new();
            for ((w, g), c) in &cache[t] {
                let mut w2 = w.clone();
                w2.extend_from_slice(m);
                w2.sort_unstable();
                img.insert((w2, g.clone()), c.clone());
            }
            images.push(img);
        }
        let domain: Vec<Filling> = Vec::new();
        let mut map = assemble(domain, images, alpha, n, d, Some(PieriKind::Symmetric));
        map.domain = domain_labels.iter().map(|(_, t)| t.clone()).collect();
        Ok((domain_labels, map))
    }
}

fn check_order(beta: &Partition, alpha: &Partition, order: &[usize], kind: PieriKind) -> Result<(), Error> {
    let strip_ok = match kind {
        PieriKind::Symmetric => is_vertical_strip(beta, alpha),
        PieriKind::Exterior => is_horizontal_strip(beta, alpha),
    };
    if !strip_ok {
        return Err(pre(alloc::format!("{beta}/{alpha} is not a strip of the requested kind")));
    }
    let mut shape = beta.clone();
    for &c in order {
        if c == 0 {
            return Err(pre("columns are 1-based"));
        }
        shape = shape
            .remove_box(c - 1)
            .ok_or_else(|| pre(alloc::format!("invalid removal order at column {c}")))?;
    }
    if &shape != alpha {
        return Err(pre("removal order does not end at alpha"));
    }
    Ok(())
}

/// Projects tensor words onto symmetric or exterior powers.
pub fn project(raw: Image, kind: PieriKind) -> Image {
    let mut out: Image = BTreeMap::new();
    for ((w, g), c) in raw {
        let mut s = w.clone();
        let mut coef = c;
        match kind {
            PieriKind::Symmetric => s.sort_unstable(),
            PieriKind::Exterior => {
                // bubble sort while tracking the sign; repeated labels vanish
                let mut swaps = 0;
                for i in 0..s.len() {
                    for j in 0..s.len() - 1 - i {
                        if s[j] > s[j + 1] {
                            s.swap(j, j + 1);
                            swaps += 1;
                        }
                    }
                }
                if s.windows(2).any(|p| p[0] == p[1]) {
                    continue;
                }
                if swaps % 2 == 1 {
                    coef = -coef;
                }
            }
        }
        let e = out.entry((s, g)).or_insert_with(Q::zero);
        *e += coef;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Weakly increasing words of length `d` in `1..=n`, i.e. monomials of degree `d`.
pub fn monomials(n: usize, d: usize) -> Vec<Word> {
    let mut out = Vec::new();
    fn rec(start: u32, n: u32, left: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(1, n as u32, d, &mut Vec::new(), &mut out);
    out
}

fn all_words(n: usize, d: usize, kind: Option<PieriKind>) -> Vec<Word> {
    match kind {
        Some(PieriKind::Symmetric) => monomials(n, d),
        Some(PieriKind::Exterior) => monomials(n, d)
            .into_iter()
            .filter(|w| w.windows(2).all(|p| p[0] < p[1]))
            .collect(),
        None => {
            let mut out: Vec<Word> = alloc::vec![Vec::new()];
            for _ in 0..d {
                out = out
                    .into_iter()
                    .flat_map(|w| {
                        (1..=n as u32).map(move |v| {
                            let mut w2 = w.clone();
                            w2.push(v);
                            w2
                        })
                    })
                    .collect();
            }
            out
        }
    }
}

fn assemble(domain: Vec<Filling>, images: Vec<Image>, alpha: &Partition, n: usize, d: usize, kind: Option<PieriKind>) -> LinearMap {
    let tabs = semistandard(alpha, n);
    let mut codomain = Vec::new();
    for w in all_words(n, d, kind) {
        for t in &tabs {
            codomain.push((w.clone(), t.clone()));
        }
    }
    let index: BTreeMap<(Word, Filling), usize> = codomain.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let cols = images
        .into_iter()
        .map(|img| SparseVec::from_map(img.into_iter().map(|(k, c)| (index[&k], c)).collect()))
        .collect();
    LinearMap { domain, codomain: codomain.clone(), matrix: Matrix { nrows: codomain.len(), cols } }
}

/// Whether `S_lambda -> A ⊗ S_mu -> A ⊗ S_nu` is nonzero, tested on the
/// canonical tableau of `lambda`.
pub fn acyclic_composite_nonzero(ctx: &mut OlverContext, lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<bool, Error> {
    if !(is_vertical_strip(lambda, mu) && is_vertical_strip(mu, nu) && is_vertical_strip(lambda, nu)) {
        return Err(pre("the chain must consist of vertical strips"));
    }
    let first = increasing_order(lambda, mu);
    let second = increasing_order(mu, nu);
    let t = crate::tableau::canonical(lambda);
    let img = ctx.pieri_image(lambda, &first, n, PieriKind::Symmetric, &t)?;
    let mut total: Image = BTreeMap::new();
    for ((w, g), c) in img {
        for ((w2, h), d) in ctx.pieri_image(mu, &second, n, PieriKind::Symmetric, &g)? {
            let mut word = w.clone();
            word.extend_from_slice(&w2);
            word.sort_unstable();
            let e = total.entry((word, h)).or_insert_with(Q::zero);
            *e += &c * d;
        }
    }
    Ok(total.values().any(|c| !c.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;
    use crate::symfunc::dimension;
    use crate::tableau::{canonical, weight};
    use alloc::vec;
    use num_bigint::BigUint;

    fn p(v: &[u32]) -> Partition {
        Partition::from_slice(v)
    }

    #[test]
    fn one_box_into_empty_is_identity() {
        let mut ctx = OlverContext::default();
        let m = ctx.olver_single_box(&p(&[1]), &p(&[]), 3).unwrap();
        assert_eq!(m.domain.len(), 3);
        for (j, col) in m.matrix.cols.iter().enumerate() {
            assert_eq!(col.entries().len(), 1);
            let (i, c) = &col.entries()[0];
            assert_eq!(*c, Q::one());
            assert_eq!(m.codomain[*i].0, vec![j as u32 + 1]);
        }
    }

    #[test]
    fn canonical_leading_term() {
        let mut ctx = OlverContext::default();
        let beta = p(&[3, 2, 1]);
        for (k, alpha) in [(1, p(&[2, 2, 1])), (2, p(&[3, 1, 1])), (3, p(&[3, 2]))] {
            let img = ctx.single_box_image(&beta, k, 3, &canonical(&beta)).unwrap();
            let lead: Vec<_> = img.iter().filter(|((_, g), _)| *g == canonical(&alpha)).collect();
            assert_eq!(lead.len(), 1);
            assert_eq!(lead[0].0 .0, k as u32);
            assert_eq!(lead[0].1, Q::from_integer(beta.get(k - 1).into()));
        }
    }

    #[test]
    fn injective_and_weight_preserving() {
        let mut ctx = OlverContext::default();
        for (beta, alpha) in [(p(&[2, 1]), p(&[1, 1])), (p(&[2, 1]), p(&[2])), (p(&[3, 2, 1]), p(&[3, 1, 1]))] {
            let m = ctx.olver_single_box(&beta, &alpha, 3).unwrap();
            assert_eq!(BigUint::from(m.rank()), dimension(&beta, 3));
            for (j, col) in m.matrix.cols.iter().enumerate() {
                let wt = weight(&m.domain[j], 3);
                for (i, _) in col.entries() {
                    let (w, g) = &m.codomain[*i];
                    let mut w2 = weight(g, 3);
                    for &x in w {
                        w2[x as usize - 1] += 1;
                    }
                    assert_eq!(w2, wt);
                }
            }
        }
    }

    #[test]
    fn two_box_coefficients() {
        // removal from column j then column i, i < j: the coefficient of
        // x_i ⊗ L in the first map is -beta_i beta_j / (beta_i - beta_j + j - i)
        let mut ctx = OlverContext::default();
        let beta = p(&[3, 1]);
        let (i, j) = (1usize, 2usize);
        let img = ctx.single_box_image(&beta, j, 2, &canonical(&beta)).unwrap();
        let l: Filling = vec![vec![1, 1, 2]];
        let c2 = img.iter().find(|((x, g), _)| *x == i as u32 && *g == l).map(|(_, c)| c.clone());
        assert_eq!(c2, Some(q_frac(-3, 3)));
        let c1 = img.iter().find(|((x, g), _)| *x == 2 && *g == vec![vec![1, 1, 1]]).map(|(_, c)| c.clone());
        assert_eq!(c1, Some(Q::one()));
    }

    #[test]
    fn rejects_non_single_box() {
        let mut ctx = OlverContext::default();
        assert!(ctx.olver_single_box(&p(&[3]), &p(&[1]), 2).is_err());
        assert!(ctx.pieri_inclusion(&p(&[2, 1]), &p(&[1]), 2, &[1, 1], PieriKind::Symmetric).is_err());
    }

    #[test]
    fn acyclic_small_chain() {
        let mut ctx = OlverContext::default();
        assert!(acyclic_composite_nonzero(&mut ctx, &p(&[2, 1]), &p(&[2]), &p(&[1]), 2).unwrap());
    }

    #[test]
    fn induced_degree_map_equals_inclusion_at_degree_b() {
        let mut ctx = OlverContext::default();
        let (beta, alpha) = (p(&[2, 1]), p(&[1]));
        let order = increasing_order(&beta, &alpha);
        let inc = ctx.pieri_inclusion(&beta, &alpha, 2, &order, PieriKind::Symmetric).unwrap();
        let (_, ind) = ctx.induced_degree_map(&beta, &alpha, 2, 2, &order).unwrap();
        assert_eq!(inc.matrix, ind.matrix);
    }
}
