//! Classical groups of types B, C and D: Bott's theorem on the Lagrangian
//! Grassmannian, cohomology of `S_lambda Q ⊗ ∧^i R^∨`, resolution terms of
//! geometric modules and the Newell–Littlewood product.
//!
//! Weights are integer vectors of length `n`. Type B has a half-integral
//! `rho`, so the Weyl normalization works with doubled coordinates.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{pre, Error};
use crate::partition::{partitions_of, strips_over, strips_under, Partition};
use crate::resolution::{resolve_terms, CokernelSpec, Provenance};
use crate::symfunc::lr_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    B,
    C,
    D,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(alloc::format!("unknown group type {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupType {
    pub family: Family,
    pub rank: usize,
}

pub type Weight = Vec<i64>;

impl GroupType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        if rank == 0 || (family == Family::D && rank < 2) {
            return Err(pre("rank too small"));
        }
        Ok(GroupType { family, rank })
    }

    pub fn tau(&self) -> usize {
        usize::from(self.family == Family::B)
    }

    /// `2 rho`, kept integral for every type.
    pub fn rho2(&self) -> Vec<i64> {
        let n = self.rank as i64;
        (0..n)
            .map(|i| match self.family {
                Family::B => 2 * n - 1 - 2 * i,
                Family::C => 2 * (n - i),
                Family::D => 2 * (n - 1 - i),
            })
            .collect()
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        let n = self.rank;
        if w.len() != n || w.windows(2).take(n.saturating_sub(2)).any(|p| p[0] < p[1]) {
            return false;
        }
        match self.family {
            Family::B | Family::C => w.windows(2).all(|p| p[0] >= p[1]) && w[n - 1] >= 0,
            Family::D => w[n - 2] >= w[n - 1].abs(),
        }
    }

    /// Rank of the bundle `R^∨`.
    pub fn dual_rank(&self) -> usize {
        self.rank + self.tau()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BottResult {
    Zero,
    /// Cohomology `V^*_beta` in degree `degree`; `weight` already includes
    /// the dual, and `dualized` records that the dual changed the weight.
    Nonzero { degree: usize, weight: Weight, dualized: bool },
}

/// Bott's theorem for the weight `w`.
pub fn dotted_bott(g: GroupType, w: &[i64]) -> Result<BottResult, Error> {
    let n = g.rank;
    if w.len() != n {
        return Err(pre(alloc::format!("weight must have {n} entries")));
    }
    let rho2 = g.rho2();
    let v: Vec<i64> = w.iter().zip(&rho2).map(|(a, r)| 2 * a + r).collect();
    let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    if abs.windows(2).any(|p| p[0] == p[1]) {
        return Ok(BottResult::Zero);
    }
    let has_zero = abs[n - 1] == 0;
    if has_zero && g.family != Family::D {
        return Ok(BottResult::Zero);
    }
    // length = number of positive roots pairing negatively with v
    let mut len = 0;
    for i in 0..n {
        for j in i + 1..n {
            len += usize::from(v[i] < v[j]) + usize::from(v[i] + v[j] < 0);
        }
        if g.family != Family::D {
            len += usize::from(v[i] < 0);
        }
    }
    let mut dom = abs;
    if g.family == Family::D && v.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        dom[n - 1] = -dom[n - 1];
    }
    let mut weight: Weight = dom.iter().zip(&rho2).map(|(a, r)| (a - r) / 2).collect();
    let dualized = g.family == Family::D && n % 2 == 1 && weight[n - 1] != 0;
    if dualized {
        weight[n - 1] = -weight[n - 1];
    }
    Ok(BottResult::Nonzero { degree: len, weight, dualized })
}

/// Cohomology degree -> sorted multiset of weights.
pub type Cohomology = BTreeMap<usize, Vec<Weight>>;

fn weight_of(p: &Partition, n: usize) -> Weight {
    p.padded(n).into_iter().map(i64::from).collect()
}

fn push(h: &mut Cohomology, deg: usize, w: Weight) {
    h.entry(deg).or_default().push(w);
}

fn finish(mut h: Cohomology) -> Cohomology {
    for v in h.values_mut() {
        v.sort_unstable();
    }
    h.retain(|_, v| !v.is_empty());
    h
}

/// `mu ⊆ lambda` with `lambda / mu` a strip of one box per part and size `k`.
fn hs_below(lambda: &Partition, k: i64) -> Vec<Partition> {
    if k < 0 {
        return Vec::new();
    }
    strips_under(lambda, k as u32, false)
}

/// `H^*(S_lambda Q ⊗ ∧^i R^∨)` from the closed formulas.
pub fn wedge_cohomology(g: GroupType, lambda: &Partition, i: usize) -> Result<Cohomology, Error> {
    let n = g.rank;
    if lambda.len() > n {
        return Err(pre(alloc::format!("{lambda} has more than {n} parts")));
    }
    let mut h = Cohomology::new();
    if i > g.dual_rank() {
        return Ok(h);
    }
    let ii = i as i64;
    let last_zero = lambda.get(n - 1) == 0;
    match g.family {
        Family::B => {
            if !last_zero {
                for k in [ii, ii - 1] {
                    for mu in hs_below(lambda, k) {
                        push(&mut h, 0, weight_of(&mu, n));
                    }
                }
            } else {
                for mu in hs_below(lambda, ii) {
                    push(&mut h, 0, weight_of(&mu, n));
                }
                if i >= 2 {
                    for mu in hs_below(lambda, ii - 2) {
                        push(&mut h, 1, weight_of(&mu, n));
                    }
                }
            }
        }
        Family::C => {
            for mu in hs_below(lambda, ii) {
                push(&mut h, 0, weight_of(&mu, n));
            }
        }
        Family::D => {
            for mu in strips_over(lambda, (n - i) as u32, n, false) {
                let m = weight_of(&mu, n);
                if m[n - 2] > (m[n - 1] - 1).abs() {
                    let mut w: Weight = m.iter().map(|x| x - 1).collect();
                    if n % 2 == 1 {
                        w[n - 1] = -w[n - 1];
                    }
                    push(&mut h, 0, w);
                }
            }
            if n >= 2 && lambda.get(n - 2) == 0 && last_zero && i >= 2 {
                for mu in hs_below(lambda, ii - 2) {
                    push(&mut h, 1, weight_of(&mu, n));
                }
            }
        }
    }
    Ok(finish(h))
}

/// `H^*(S_lambda Q ⊗ ∧^i R)` by expanding `∧^{n-i} Q ⊗ det Q^{-1}` and applying Bott.
fn bott_wedge_r(g: GroupType, lambda: &Partition, i: usize) -> Result<Cohomology, Error> {
    let n = g.rank;
    let mut h = Cohomology::new();
    if i > n {
        return Ok(h);
    }
    for mu in strips_over(lambda, (n - i) as u32, n, false) {
        let w: Weight = weight_of(&mu, n).into_iter().map(|x| x - 1).collect();
        if let BottResult::Nonzero { degree, weight, .. } = dotted_bott(g, &w)? {
            push(&mut h, degree, weight);
        }
    }
    Ok(finish(h))
}

fn remove_all(from: &mut Vec<Weight>, what: &[Weight]) -> bool {
    for w in what {
        match from.iter().position(|x| x == w) {
            Some(p) => {
                from.remove(p);
            }
            None => return false,
        }
    }
    true
}

/// The same cohomology computed from Bott's theorem. In type B the bundle
/// `R^∨` is an extension of `O` by `R`; the connecting map between
/// `H^0(∧^{i-1} R)` and `H^1(∧^i R)` is an isomorphism when `lambda_n = 0`.
pub fn wedge_cohomology_bott(g: GroupType, lambda: &Partition, i: usize) -> Result<Cohomology, Error> {
    let n = g.rank;
    if lambda.len() > n {
        return Err(pre(alloc::format!("{lambda} has more than {n} parts")));
    }
    if i > g.dual_rank() {
        return Ok(Cohomology::new());
    }
    if g.family != Family::B {
        return bott_wedge_r(g, lambda, i);
    }
    let sub = bott_wedge_r(g, lambda, i)?;
    let quo = if i >= 1 { bott_wedge_r(g, lambda, i - 1)? } else { Cohomology::new() };
    let h0_sub = sub.get(&0).cloned().unwrap_or_default();
    let mut h1_sub = sub.get(&1).cloned().unwrap_or_default();
    let mut h0_quo = quo.get(&0).cloned().unwrap_or_default();
    let h1_quo = quo.get(&1).cloned().unwrap_or_default();
    if sub.keys().chain(quo.keys()).any(|&d| d > 1) {
        return Err(pre("unexpected cohomology above degree 1"));
    }
    if lambda.get(n - 1) == 0 && i >= 1 {
        let cancel = h1_sub.clone();
        if !remove_all(&mut h0_quo, &cancel) {
            return Err(pre("connecting map cannot be an isomorphism"));
        }
        h1_sub.clear();
    }
    let mut h = Cohomology::new();
    for w in h0_sub.into_iter().chain(h0_quo) {
        push(&mut h, 0, w);
    }
    for w in h1_sub.into_iter().chain(h1_quo) {
        push(&mut h, 1, w);
    }
    Ok(finish(h))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeometricTerm {
    pub hom: usize,
    pub degree: u32,
    pub weight: Weight,
    /// Cohomological degree the term comes from: the filtration grade.
    pub grade: usize,
}

/// Terms of the minimal resolution of `H^0(B ⊗ S_lambda Q)`:
/// `H^j(∧^{i+j} R^∨ ⊗ S_lambda Q)` in homological degree `i`, internal degree `i + j`.
pub fn geometric_module_terms(g: GroupType, lambda: &Partition) -> Result<Vec<GeometricTerm>, Error> {
    let mut out = Vec::new();
    for k in 0..=g.dual_rank() {
        for (j, ws) in wedge_cohomology(g, lambda, k)? {
            if j > k {
                continue;
            }
            for w in ws {
                out.push(GeometricTerm { hom: k - j, degree: k as u32, weight: w, grade: j });
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassicalTerm {
    pub hom: usize,
    pub degree: u32,
    pub weight: Weight,
    pub grade: usize,
    /// The partition of the GL-level Pieri resolution this term resolves.
    pub source: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafPieriTerms {
    pub group: GroupType,
    pub terms: Vec<ClassicalTerm>,
    /// Pairs `(lambda, lambda')` in adjacent degrees with `lambda'/lambda` a single box.
    pub linear_differentials: Vec<(Partition, Partition)>,
    /// The GL-level complex was built by a possibly nonminimal cone.
    pub gl_nonminimal: bool,
    /// Minimality is guaranteed: type C, or B/D without linear differentials.
    pub minimal: bool,
}

/// Terms of the iterated cone of geometric-module resolutions over the
/// GL-level Pieri resolution with `Q` in place of `V`.
pub fn sheaf_pieri_terms(g: GroupType, alpha: &Partition, betas: &[Partition]) -> Result<SheafPieriTerms, Error> {
    let n = g.rank;
    let spec = CokernelSpec::new(alpha.clone(), betas.to_vec(), n)?;
    let gl = resolve_terms(&spec)?;
    let mut terms = Vec::new();
    for t in &gl.terms {
        for gt in geometric_module_terms(g, &t.partition)? {
            for _ in 0..t.multiplicity {
                terms.push(ClassicalTerm {
                    hom: t.hom + gt.hom,
                    degree: t.degree + gt.degree,
                    weight: gt.weight.clone(),
                    grade: gt.grade,
                    source: t.partition.clone(),
                });
            }
        }
    }
    terms.sort();
    let mut linear = Vec::new();
    for a in &gl.terms {
        for b in gl.terms.iter().filter(|b| b.hom == a.hom + 1) {
            if b.partition.contains(&a.partition) && b.partition.size() == a.partition.size() + 1 {
                linear.push((a.partition.clone(), b.partition.clone()));
            }
        }
    }
    let gl_nonminimal = gl.provenance == Provenance::PossiblyNonminimal;
    let minimal = !gl_nonminimal && (g.family == Family::C || linear.is_empty());
    Ok(SheafPieriTerms { group: g, terms, linear_differentials: linear, gl_nonminimal, minimal })
}

/// Stable-range tensor product `V_lambda ⊗ V_mu` for orthogonal and symplectic groups.
pub fn newell_littlewood(lambda: &Partition, mu: &Partition, n: usize) -> Result<BTreeMap<Partition, u64>, Error> {
    if n < lambda.len() + mu.len() {
        return Err(pre("outside the stable range n >= l(lambda) + l(mu)"));
    }
    let big = lambda.len() + mu.len();
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    // c^lambda_{alpha, beta} for all alpha, beta
    let skew = |outer: &Partition| -> Vec<(Partition, Partition, u64)> {
        let mut v = Vec::new();
        for a_size in 0..=outer.size() {
            for a in partitions_of(a_size, outer.len(), outer.get(0)) {
                if !outer.contains(&a) {
                    continue;
                }
                for b in partitions_of(outer.size() - a_size, outer.len(), outer.get(0)) {
                    let c = lr_product(&a, &b, outer.len())
                        .into_iter()
                        .find(|(p, _)| p == outer)
                        .map_or(0, |x| x.1);
                    if c > 0 {
                        v.push((a.clone(), b, c));
                    }
                }
            }
        }
        v
    };
    let sl = skew(lambda);
    let sm = skew(mu);
    for (a, b, c1) in &sl {
        for (a2, g, c2) in &sm {
            if a != a2 {
                continue;
            }
            for (nu, c3) in lr_product(b, g, big.max(1)) {
                *out.entry(nu).or_insert(0) += c1 * c2 * c3;
            }
        }
    }
    Ok(out)
}
