//! Exact minimization of possibly nonminimal complexes.
//!
//! Only generators with equal partition and internal degree in adjacent
//! homological degrees can cancel. For each such candidate we compute the
//! true multiplicity of `S_lambda V` in `Tor_i(M, k)_j` from the Koszul
//! complex `M ⊗ ∧^• V`, restricted to the weight spaces that determine that
//! multiplicity. `M` is presented explicitly: weight vectors of `A ⊗ S_alpha V`
//! are pairs (monomial, semistandard tableau of `alpha`), and the relations are
//! the images `m · psi(T')` of the Pieri inclusions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{pre, Error};
use crate::linalg::{Echelon, SparseVec, Q};
use crate::olver::{increasing_order, Image, OlverContext, Word};
use crate::partition::Partition;
use crate::resolution::{CokernelSpec, EquivariantComplex, Provenance};
use crate::symfunc::{dimension_u64, permutations_with_sign, PieriKind};
use crate::tableau::{semistandard, weight, Filling};

/// A finitely presented module `coker(⊕ A ⊗ S_{beta^i} -> A ⊗ S_alpha)` in weight coordinates.
pub struct PresentedModule {
    spec: CokernelSpec,
    ctx: OlverContext,
    gens: Vec<(Filling, Vec<u32>)>,
    rel_gens: Vec<Vec<(Filling, Vec<u32>)>>,
    images: BTreeMap<(usize, Filling), Image>,
}

type Basis = (Vec<(Word, Filling)>, BTreeMap<(Word, Filling), usize>);

fn fits(w: &[u32], nu: &[i64]) -> Option<Vec<u32>> {
    w.iter().zip(nu).map(|(&a, &b)| u32::try_from(b - i64::from(a)).ok()).collect()
}

fn word_of(exps: &[u32]) -> Word {
    let mut out = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            out.push(i as u32 + 1);
        }
    }
    out
}

impl PresentedModule {
    pub fn new(spec: &CokernelSpec, cap: u64) -> Result<Self, Error> {
        spec.validate()?;
        let n = spec.n;
        let mut shapes = alloc::vec![spec.alpha.clone()];
        shapes.extend(spec.relations.iter().cloned());
        for s in &shapes {
            let dim = dimension_u64(s, n);
            if dim > cap {
                return Err(Error::SizeCap { dim, cap });
            }
        }
        let tag = |l: &Partition| semistandard(l, n).into_iter().map(|t| { let w = weight(&t, n); (t, w) }).collect::<Vec<_>>();
        Ok(PresentedModule {
            gens: tag(&spec.alpha),
            rel_gens: spec.relations.iter().map(tag).collect(),
            spec: spec.clone(),
            ctx: OlverContext::new(cap),
            images: BTreeMap::new(),
        })
    }

    /// Basis of `(A ⊗ S_alpha V)` in weight `nu`.
    fn basis(&self, nu: &[i64]) -> Basis {
        let mut list = Vec::new();
        for (t, w) in &self.gens {
            if let Some(rest) = fits(w, nu) {
                list.push((word_of(&rest), t.clone()));
            }
        }
        let index = list.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        (list, index)
    }

    fn relations(&mut self, nu: &[i64], basis: &Basis) -> Result<Vec<SparseVec>, Error> {
        let n = self.spec.n;
        let mut out = Vec::new();
        for (j, beta) in self.spec.relations.clone().iter().enumerate() {
            let order = increasing_order(beta, &self.spec.alpha);
            for (t, w) in self.rel_gens[j].clone() {
                let Some(rest) = fits(&w, nu) else { continue };
                let key = (j, t.clone());
                if !self.images.contains_key(&key) {
                    let img = self.ctx.pieri_image(beta, &order, n, PieriKind::Symmetric, &t)?;
                    self.images.insert(key.clone(), img);
                }
                let m = word_of(&rest);
                let mut v: BTreeMap<usize, Q> = BTreeMap::new();
                for ((word, g), c) in &self.images[&key] {
                    let mut w2 = word.clone();
                    w2.extend_from_slice(&m);
                    w2.sort_unstable();
                    let idx = basis.1[&(w2, g.clone())];
                    *v.entry(idx).or_insert_with(Q::zero) += c;
                }
                out.push(SparseVec::from_map(v));
            }
        }
        Ok(out)
    }

    /// `dim H_i` of `M ⊗ ∧^• V` in total weight `nu`.
    pub fn koszul_homology_dim(&mut self, i: usize, nu: &[i64]) -> Result<usize, Error> {
        let n = self.spec.n;
        if i > n || nu.iter().any(|&x| x < 0) {
            return Ok(0);
        }
        let blocks_i = self.blocks(i, nu)?;
        let dim_k: usize = blocks_i.iter().map(|b| b.basis.0.len() - b.rel_rank).sum();
        let d_i = if i == 0 { 0 } else {
            let lower = self.blocks(i - 1, nu)?;
            boundary_rank(&blocks_i, &lower)
        };
        let d_next = if i == n { 0 } else {
            let upper = self.blocks(i + 1, nu)?;
            boundary_rank(&upper, &blocks_i)
        };
        Ok(dim_k - d_i - d_next)
    }

    fn blocks(&mut self, i: usize, nu: &[i64]) -> Result<Vec<Block>, Error> {
        let n = self.spec.n;
        let mut out = Vec::new();
        for s in subsets(n, i) {
            let mut mu = nu.to_vec();
            for &x in &s {
                mu[x] -= 1;
            }
            let basis = if mu.iter().any(|&x| x < 0) { (Vec::new(), BTreeMap::new()) } else { self.basis(&mu) };
            let rels = if basis.0.is_empty() { Vec::new() } else { self.relations(&mu, &basis)? };
            let rel_rank = crate::linalg::rank(&rels);
            out.push(Block { set: s, basis, rels, rel_rank });
        }
        Ok(out)
    }

    /// Multiplicity of `S_lambda V` in `Tor_i(M, k)`.
    pub fn tor_multiplicity(&mut self, i: usize, lambda: &Partition) -> Result<i64, Error> {
        let n = self.spec.n;
        if lambda.len() > n {
            return Ok(0);
        }
        let lam = lambda.padded(n);
        let mut total = 0i64;
        for (w, sgn) in permutations_with_sign(n) {
            // lambda + rho - w(rho), rho = (n-1, ..., 0)
            let nu: Vec<i64> = (0..n)
                .map(|k| i64::from(lam[k]) + (n - 1 - k) as i64 - (n - 1 - w[k]) as i64)
                .collect();
            if nu.iter().any(|&x| x < 0) {
                continue;
            }
            total += sgn * self.koszul_homology_dim(i, &nu)? as i64;
        }
        Ok(total)
    }
}

struct Block {
    set: Vec<usize>,
    basis: Basis,
    rels: Vec<SparseVec>,
    rel_rank: usize,
}

/// Rank of `∂: K(src) -> K(dst)` on the quotient by the relations.
fn boundary_rank(src: &[Block], dst: &[Block]) -> usize {
    let mut offsets = BTreeMap::new();
    let mut off = 0;
    for b in dst {
        offsets.insert(b.set.clone(), off);
        off += b.basis.0.len();
    }
    let mut ech = Echelon::new();
    for b in dst {
        let o = offsets[&b.set];
        for r in &b.rels {
            ech.insert(&SparseVec::from_map(r.entries().iter().map(|(i, c)| (i + o, c.clone())).collect()));
        }
    }
    let base = ech.rank();
    for b in src {
        for (m, t) in &b.basis.0 {
            let mut v: BTreeMap<usize, Q> = BTreeMap::new();
            for (p, &s) in b.set.iter().enumerate() {
                let mut rest = b.set.clone();
                rest.remove(p);
                let Some(target) = dst.iter().find(|d| d.set == rest) else { continue };
                let mut w = m.clone();
                w.push(s as u32 + 1);
                w.sort_unstable();
                let idx = offsets[&rest] + target.basis.1[&(w, t.clone())];
                let sign = if p % 2 == 0 { Q::from_integer(1.into()) } else { Q::from_integer((-1).into()) };
                *v.entry(idx).or_insert_with(Q::zero) += sign;
            }
            ech.insert(&SparseVec::from_map(v));
        }
    }
    ech.rank() - base
}

/// Increasing `k`-subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cancellation {
    pub hom: usize,
    pub degree: u32,
    pub partition: Partition,
    /// Copies removed from both `hom` and `hom + 1`.
    pub count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimizeReport {
    pub complex: EquivariantComplex,
    pub candidates: Vec<(usize, u32, Partition)>,
    pub cancellations: Vec<Cancellation>,
    /// Every candidate was decided.
    pub complete: bool,
}

/// Replaces multiplicities of cancellation candidates by exact Tor multiplicities.
///
/// `effort` bounds the number of `(partition, degree)` groups examined;
/// zero only lists the candidates.
pub fn minimize(c: &EquivariantComplex, spec: &CokernelSpec, effort: u32, cap: u64) -> Result<MinimizeReport, Error> {
    if c.n != spec.n {
        return Err(pre("complex and presentation disagree on the number of variables"));
    }
    let candidates = c.cancellation_candidates();
    if c.provenance == Provenance::Minimal {
        return Ok(MinimizeReport { complex: c.clone(), candidates, cancellations: Vec::new(), complete: true });
    }
    let mut groups: Vec<(u32, Partition)> = candidates.iter().map(|(_, d, l)| (*d, l.clone())).collect();
    groups.sort();
    groups.dedup();
    let mut out = c.clone();
    let mut cancellations = Vec::new();
    if effort == 0 {
        return Ok(MinimizeReport { complex: out, candidates, cancellations, complete: groups.is_empty() });
    }
    let mut module = PresentedModule::new(spec, cap)?;
    let complete = groups.len() <= effort as usize;
    for (d, l) in groups.into_iter().take(effort as usize) {
        let homs: Vec<usize> = c.terms.iter().filter(|t| t.degree == d && t.partition == l).map(|t| t.hom).collect();
        let mut excess = BTreeMap::new();
        for &h in &homs {
            let tor = module.tor_multiplicity(h, &l)?;
            let have = c.multiplicity(h, d, &l) as i64;
            if tor < 0 || tor > have {
                return Err(pre(alloc::format!("Tor multiplicity {tor} of {l} exceeds the complex")));
            }
            excess.insert(h, (have - tor) as u32);
        }
        // alternating sums pin down the cancellations between neighbours
        let mut carry = 0u32;
        for &h in &homs {
            let e = excess[&h];
            if e < carry {
                return Err(pre("inconsistent cancellation pattern"));
            }
            let up = e - carry;
            if up > 0 {
                cancellations.push(Cancellation { hom: h, degree: d, partition: l.clone(), count: up });
            }
            carry = up;
        }
        if carry != 0 {
            return Err(pre("inconsistent cancellation pattern"));
        }
        for &h in &homs {
            let t = out.terms.iter_mut().find(|t| t.hom == h && t.degree == d && t.partition == l).expect("term");
            t.multiplicity -= excess[&h];
        }
    }
    out.terms.retain(|t| t.multiplicity > 0);
    if complete {
        out.provenance = Provenance::Minimal;
    }
    Ok(MinimizeReport { complex: out, candidates, cancellations, complete })
}
