//! Terms of equivariant resolutions of cokernels of Pieri maps.
//!
//! A complex is stored as its list of generators: homological degree,
//! internal degree measured from the degree-0 generator, partition and
//! multiplicity. No differentials are kept here; see `minimize` for the
//! explicit linear algebra that decides cancellations.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::admissible::{admissible_subsets, all_admissible, multi_admissible, single_columns, strip_columns};
use crate::error::{pre, Error};
use crate::partition::{is_vertical_strip, strips_over, Partition};
use crate::symfunc::{pieri_multiply, PieriKind, SymPoly};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub hom: usize,
    pub degree: u32,
    pub partition: Partition,
    pub multiplicity: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Minimal,
    PossiblyNonminimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantComplex {
    pub n: usize,
    pub terms: Vec<Term>,
    pub provenance: Provenance,
}

impl EquivariantComplex {
    pub fn new(n: usize, provenance: Provenance) -> Self {
        EquivariantComplex { n, terms: Vec::new(), provenance }
    }

    /// Adds generators, merging with an existing `(hom, degree, partition)` entry.
    pub fn push(&mut self, hom: usize, degree: u32, partition: Partition, multiplicity: u32) {
        if multiplicity == 0 {
            return;
        }
        if let Some(t) = self
            .terms
            .iter_mut()
            .find(|t| t.hom == hom && t.degree == degree && t.partition == partition)
        {
            t.multiplicity += multiplicity;
        } else {
            self.terms.push(Term { hom, degree, partition, multiplicity });
        }
        self.sort();
    }

    /// Homological degree ascending, then partitions in decreasing lex order.
    pub fn sort(&mut self) {
        self.terms.sort_by(|a, b| {
            a.hom
                .cmp(&b.hom)
                .then_with(|| b.partition.cmp(&a.partition))
                .then_with(|| a.degree.cmp(&b.degree))
        });
    }

    pub fn length(&self) -> usize {
        self.terms.iter().map(|t| t.hom).max().unwrap_or(0)
    }

    pub fn terms_in(&self, hom: usize) -> Vec<&Term> {
        self.terms.iter().filter(|t| t.hom == hom).collect()
    }

    /// Partitions in degree `hom`, repeated by multiplicity.
    pub fn partitions_in(&self, hom: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for t in self.terms_in(hom) {
            for _ in 0..t.multiplicity {
                out.push(t.partition.clone());
            }
        }
        out
    }

    pub fn multiplicity(&self, hom: usize, degree: u32, partition: &Partition) -> u32 {
        self.terms
            .iter()
            .find(|t| t.hom == hom && t.degree == degree && &t.partition == partition)
            .map_or(0, |t| t.multiplicity)
    }

    /// `(partition, degree)` pairs occurring in adjacent homological degrees.
    pub fn cancellation_candidates(&self) -> Vec<(usize, u32, Partition)> {
        let mut out = Vec::new();
        for t in &self.terms {
            if self.multiplicity(t.hom + 1, t.degree, &t.partition) > 0 {
                out.push((t.hom, t.degree, t.partition.clone()));
            }
        }
        out
    }

    /// `sum_j (-1)^i ch(B_{i,j}) t^j`, indexed by `j`.
    pub fn euler_numerator(&self) -> BTreeMap<u32, SymPoly> {
        let mut out: BTreeMap<u32, SymPoly> = BTreeMap::new();
        for t in &self.terms {
            let sign = if t.hom % 2 == 0 { 1 } else { -1 };
            let e = out.entry(t.degree).or_insert_with(|| SymPoly::zero(self.n));
            *e = e.add(&SymPoly::schur(t.partition.clone(), self.n).scale(&BigInt::from(sign * t.multiplicity as i64)));
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// `coker(⊕ A(-|beta^i/alpha|) ⊗ S_{beta^i} V -> A ⊗ S_alpha V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelSpec {
    pub alpha: Partition,
    pub relations: Vec<Partition>,
    pub n: usize,
}

impl CokernelSpec {
    pub fn new(alpha: Partition, relations: Vec<Partition>, n: usize) -> Result<Self, Error> {
        let s = CokernelSpec { alpha, relations, n };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.relations.is_empty() {
            return Err(pre("at least one relation is required"));
        }
        if self.alpha.len() > self.n {
            return Err(pre(alloc::format!("{} has more than {} parts", self.alpha, self.n)));
        }
        for b in &self.relations {
            if !is_vertical_strip(b, &self.alpha) || b == &self.alpha {
                return Err(pre(alloc::format!("{b}/{} is not a nonempty vertical strip", self.alpha)));
            }
            if b.len() > self.n {
                return Err(pre(alloc::format!("{b} has more than {} parts", self.n)));
            }
        }
        for w in self.relations.windows(2) {
            if w[0] <= w[1] {
                return Err(pre("relations must be strictly decreasing in lex order"));
            }
        }
        for (i, x) in self.relations.iter().enumerate() {
            for (j, y) in self.relations.iter().enumerate() {
                if i != j && y.contains(x) {
                    return Err(pre(alloc::format!("relation {x} is contained in {y}")));
                }
            }
        }
        Ok(())
    }

    /// Whether every relation adds boxes to a single column.
    pub fn is_single_column(&self) -> bool {
        self.relations.iter().all(|b| strip_columns(b, &self.alpha).len() == 1)
    }

    /// First column of `beta^1 / alpha`.
    pub fn first_column(&self) -> usize {
        strip_columns(&self.relations[0], &self.alpha)[0]
    }
}

/// The pure resolution when `beta / alpha` lies in column 1.
pub fn pure_resolution(alpha: &Partition, beta: &Partition, n: usize) -> Result<EquivariantComplex, Error> {
    let cols = strip_columns(beta, alpha);
    if !beta.contains(alpha) || cols != [1] || (1..beta.len()).any(|i| beta.get(i) != alpha.get(i)) {
        return Err(pre(alloc::format!("{beta}/{alpha} must be a nonempty strip in column 1")));
    }
    if beta.len() > n {
        return Err(pre(alloc::format!("{beta} has more than {n} parts")));
    }
    let mut c = EquivariantComplex::new(n, Provenance::Minimal);
    c.push(0, 0, alpha.clone(), 1);
    let a = alpha.padded(n);
    let mut parts = a.clone();
    let mut d = 0u32;
    for i in 0..n {
        let e = if i == 0 { beta.get(0) - a[0] } else { a[i - 1] - a[i] + 1 };
        parts[i] += e;
        d += e;
        c.push(i + 1, d, Partition::from_slice(&parts), 1);
    }
    Ok(c)
}

/// The jumps `e_1, ..., e_n` of a degree sequence; `e` may start with `e_0 = 0`.
fn strip_leading_zero(e: &[u32], n: usize) -> Result<Vec<u32>, Error> {
    let e: Vec<u32> = if e.len() == n + 1 && e[0] == 0 { e[1..].to_vec() } else { e.to_vec() };
    if e.len() != n {
        return Err(pre(alloc::format!("expected {n} jumps")));
    }
    if e.contains(&0) {
        return Err(pre("jumps must be positive"));
    }
    Ok(e)
}

/// The `(alpha, beta)` pairs whose Pieri resolutions are pure with jumps `e`:
/// `i` boxes in column 1 and `e_1 - i` in column `n`, for `i = e_1, ..., 1`.
pub fn pure_family_specs(e: &[u32], n: usize) -> Result<Vec<(Partition, Partition)>, Error> {
    let e = strip_leading_zero(e, n)?;
    if n < 2 {
        return Err(pre("need at least two variables"));
    }
    let mut out = Vec::new();
    for i in (1..=e[0]).rev() {
        let mut a = alloc::vec![0u32; n];
        a[n - 2] = e[n - 1] - 1 + (e[0] - i);
        for j in (1..n - 1).rev() {
            a[j - 1] = a[j] + e[j] - 1;
        }
        let mut b = a.clone();
        b[0] += i;
        b[n - 1] += e[0] - i;
        out.push((Partition::from_slice(&a), Partition::new(&b)?));
    }
    Ok(out)
}

pub fn pure_family(e: &[u32], n: usize) -> Result<Vec<EquivariantComplex>, Error> {
    pure_family_specs(e, n)?
        .into_iter()
        .map(|(a, b)| pieri_resolution_single(&a, &b, n))
        .collect()
}

/// Minimal resolution for one relation, indexed by admissible subsets.
pub fn pieri_resolution_single(alpha: &Partition, beta: &Partition, n: usize) -> Result<EquivariantComplex, Error> {
    let mut c = EquivariantComplex::new(n, Provenance::Minimal);
    c.push(0, 0, alpha.clone(), 1);
    for a in all_admissible(alpha, beta, n)? {
        let d = a.beta.size() - alpha.size();
        c.push(a.degree(), d, a.beta, 1);
    }
    Ok(c)
}

/// Minimal resolution when every relation occupies a single column.
pub fn pieri_resolution_columns(alpha: &Partition, betas: &[Partition], n: usize) -> Result<EquivariantComplex, Error> {
    let cols = single_columns(alpha, betas, n)?;
    let mut c = EquivariantComplex::new(n, Provenance::Minimal);
    c.push(0, 0, alpha.clone(), 1);
    for i in 1..=n + 1 - cols[0] {
        for f in multi_admissible(alpha, betas, i, n)? {
            let d = f.beta.size() - alpha.size();
            c.push(i, d, f.beta, 1);
        }
    }
    Ok(c)
}

/// Relations of the kernel module generated by `beta^1` in the cone recursion.
pub fn kernel_relations(alpha: &Partition, betas: &[Partition], n: usize) -> Result<Vec<Partition>, Error> {
    let b1 = &betas[0];
    let mut cands: Vec<Partition> = betas[1..].iter().map(|b| b1.union(b)).collect();
    for a in admissible_subsets(alpha, b1, 2, n)? {
        cands.push(a.beta);
    }
    cands.sort();
    cands.dedup();
    let mut keep: Vec<Partition> = cands
        .iter()
        .filter(|x| !cands.iter().any(|y| y != *x && x.contains(y)))
        .cloned()
        .collect();
    keep.sort_by(|a, b| b.cmp(a));
    Ok(keep)
}

/// Iterated mapping cone: `F_i = N'_{i-1} ⊕ N_i`.
pub fn mapping_cone_resolution(alpha: &Partition, betas: &[Partition], n: usize) -> Result<EquivariantComplex, Error> {
    CokernelSpec::new(alpha.clone(), betas.to_vec(), n)?;
    if betas.len() == 1 {
        return pieri_resolution_single(alpha, &betas[0], n);
    }
    let big_n = mapping_cone_resolution(alpha, &betas[1..], n)?;
    let rels = kernel_relations(alpha, betas, n)?;
    let b1 = &betas[0];
    let shift = b1.size() - alpha.size();
    let n_prime = if rels.is_empty() {
        let mut f = EquivariantComplex::new(n, Provenance::Minimal);
        f.push(0, 0, b1.clone(), 1);
        f
    } else {
        mapping_cone_resolution(b1, &rels, n)?
    };
    let mut c = EquivariantComplex::new(n, Provenance::PossiblyNonminimal);
    for t in big_n.terms {
        c.push(t.hom, t.degree, t.partition, t.multiplicity);
    }
    for t in n_prime.terms {
        c.push(t.hom + 1, t.degree + shift, t.partition, t.multiplicity);
    }
    Ok(c)
}

/// Dispatches to the sharpest available constructor for `spec`.
pub fn resolve_terms(spec: &CokernelSpec) -> Result<EquivariantComplex, Error> {
    spec.validate()?;
    if spec.relations.len() == 1 {
        pieri_resolution_single(&spec.alpha, &spec.relations[0], spec.n)
    } else if spec.is_single_column() {
        pieri_resolution_columns(&spec.alpha, &spec.relations, spec.n)
    } else {
        mapping_cone_resolution(&spec.alpha, &spec.relations, spec.n)
    }
}

/// Relations `alpha + e_i` at every addable position: a presentation of `S_alpha V`
/// as a module killed by all variables.
pub fn trivial_module_relations(alpha: &Partition, n: usize) -> Vec<Partition> {
    (0..n).filter_map(|i| alpha.add_box(i)).filter(|b| b.len() <= n).collect::<Vec<_>>()
}

/// `S_alpha V ⊗ ∧^i V` placed in homological and internal degree `i`.
pub fn koszul_tensor(alpha: &Partition, n: usize) -> EquivariantComplex {
    let mut c = EquivariantComplex::new(n, Provenance::Minimal);
    for i in 0..=n {
        for (l, m) in pieri_multiply(alpha, i as u32, PieriKind::Exterior, n).terms() {
            c.push(i, i as u32, l.clone(), u32::try_from(m.clone()).expect("small multiplicity"));
        }
    }
    c
}

/// Irreducibles of the cokernel in degrees `0..=bound`, as `(partition, degree)`.
pub fn cokernel_character(spec: &CokernelSpec, bound: u32) -> Vec<(Partition, u32)> {
    let mut out = Vec::new();
    for d in 0..=bound {
        for l in strips_over(&spec.alpha, d, spec.n, true) {
            if spec.relations.iter().all(|b| !is_vertical_strip(&l, b)) {
                out.push((l, d));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    /// `ch(M_d)` for `d = 0..=bound`, from the numerator times `sum_d h_d t^d`.
    pub quotient: Vec<SymPoly>,
    /// Every coefficient of the quotient is Schur-positive.
    pub positive: bool,
    /// The numerator is an exact multiple of `prod_k (1 - x_k t)`.
    pub finite_length: bool,
}

/// Divides the equivariant Euler numerator by `prod_k (1 - x_k t)`.
pub fn verify_euler(c: &EquivariantComplex, bound: u32) -> EulerReport {
    let n = c.n;
    let num = c.euler_numerator();
    let top = num.keys().copied().max().unwrap_or(0);
    // power series quotient through max(bound, top)
    let reach = bound.max(top);
    let mut quotient = Vec::new();
    for d in 0..=reach {
        let mut q = SymPoly::zero(n);
        for (&j, p) in num.range(..=d) {
            for (l, a) in p.terms() {
                q = q.add(&pieri_multiply(l, d - j, PieriKind::Symmetric, n).scale(a));
            }
        }
        quotient.push(q);
    }
    let positive = quotient.iter().all(SymPoly::is_schur_positive);
    // exact division: the quotient has degree at most top - n, so coefficients
    // beyond that must vanish, and n consecutive zeros there are sufficient
    let finite_length = top >= n as u32 && {
        let mut ok = true;
        let limit = top as usize + n;
        let mut ext = quotient.clone();
        for d in ext.len()..=limit {
            let mut q = SymPoly::zero(n);
            for (&j, p) in num.range(..=d as u32) {
                for (l, a) in p.terms() {
                    q = q.add(&pieri_multiply(l, d as u32 - j, PieriKind::Symmetric, n).scale(a));
                }
            }
            ext.push(q);
        }
        for q in ext.iter().skip(top as usize - n + 1).take(limit) {
            ok &= q.is_zero();
        }
        ok
    };
    quotient.truncate(bound as usize + 1);
    EulerReport { quotient, positive, finite_length }
}

/// Compares the Euler quotient with the cokernel character up to `bound`.
pub fn euler_matches_cokernel(c: &EquivariantComplex, spec: &CokernelSpec, bound: u32) -> bool {
    let rep = verify_euler(c, bound);
    let mut want = alloc::vec![SymPoly::zero(spec.n); bound as usize + 1];
    for (l, d) in cokernel_character(spec, bound) {
        want[d as usize].add_term(l, BigInt::from(1));
    }
    rep.positive && rep.quotient == want
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::from_slice(v)
    }

    fn chain(c: &EquivariantComplex) -> Vec<Vec<(Partition, u32)>> {
        (0..=c.length())
            .map(|i| {
                let mut v = Vec::new();
                for t in c.terms_in(i) {
                    for _ in 0..t.multiplicity {
                        v.push((t.partition.clone(), t.degree));
                    }
                }
                v
            })
            .collect()
    }

    #[test]
    fn pure_example() {
        let c = pure_resolution(&p(&[3, 1]), &p(&[5, 1]), 4).unwrap();
        let want = alloc::vec![
            alloc::vec![(p(&[3, 1]), 0)],
            alloc::vec![(p(&[5, 1]), 2)],
            alloc::vec![(p(&[5, 4]), 5)],
            alloc::vec![(p(&[5, 4, 2]), 7)],
            alloc::vec![(p(&[5, 4, 2, 1]), 8)],
        ];
        assert_eq!(chain(&c), want);
        assert!(pure_resolution(&p(&[3, 1]), &p(&[3, 2]), 4).is_err());
    }

    #[test]
    fn pure_agrees_with_admissible_route() {
        let c1 = pure_resolution(&p(&[3, 1]), &p(&[5, 1]), 4).unwrap();
        let c2 = pieri_resolution_single(&p(&[3, 1]), &p(&[5, 1]), 4).unwrap();
        assert_eq!(c1.terms, c2.terms);
    }

    #[test]
    fn koszul_degrees_for_one_box() {
        let c = pure_resolution(&p(&[]), &p(&[1]), 3).unwrap();
        let degs: Vec<u32> = c.terms.iter().map(|t| t.degree).collect();
        assert_eq!(degs, alloc::vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_examples() {
        let c = pieri_resolution_single(&p(&[5, 3, 1]), &p(&[6, 4, 1]), 4).unwrap();
        assert_eq!(c.partitions_in(1), alloc::vec![p(&[6, 4, 1])]);
        assert_eq!(c.partitions_in(2), alloc::vec![p(&[6, 6, 1]), p(&[6, 4, 4])]);
        assert_eq!(c.partitions_in(3), alloc::vec![p(&[6, 6, 4]), p(&[6, 4, 4, 2])]);
        assert_eq!(c.partitions_in(4), alloc::vec![p(&[6, 6, 4, 2])]);
        assert_eq!(c.length(), 4);

        let c = pieri_resolution_single(&p(&[5, 3, 1]), &p(&[6, 3, 1, 1]), 4).unwrap();
        let parts: Vec<Partition> = (0..=4).flat_map(|i| c.partitions_in(i)).collect();
        assert_eq!(parts, alloc::vec![p(&[5, 3, 1]), p(&[6, 3, 1, 1]), p(&[6, 6, 1, 1]), p(&[6, 6, 4, 1]), p(&[6, 6, 4, 2])]);

        let c = pieri_resolution_single(&p(&[2, 1, 1]), &p(&[2, 1, 1, 1]), 4).unwrap();
        assert_eq!(c.length(), 1);
    }

    #[test]
    fn columns_example() {
        let c = pieri_resolution_columns(&p(&[4, 3, 1]), &[p(&[6, 3, 1]), p(&[4, 3, 3])], 4).unwrap();
        assert_eq!(c.partitions_in(4), alloc::vec![p(&[6, 5, 3, 2])]);
        assert_eq!(c.partitions_in(3), alloc::vec![p(&[6, 5, 3]), p(&[6, 3, 3, 2])]);
        assert_eq!(c.partitions_in(2), alloc::vec![p(&[6, 5, 1]), p(&[6, 3, 3]), p(&[4, 3, 3, 2])]);
        let cone = mapping_cone_resolution(&p(&[4, 3, 1]), &[p(&[6, 3, 1]), p(&[4, 3, 3])], 4).unwrap();
        assert_eq!(cone.terms, c.terms);
    }

    #[test]
    fn intro_cone() {
        let c = mapping_cone_resolution(&p(&[3, 1]), &[p(&[5, 1]), p(&[3, 2])], 3).unwrap();
        assert_eq!(c.partitions_in(1), alloc::vec![p(&[5, 1]), p(&[3, 2])]);
        assert_eq!(c.partitions_in(2), alloc::vec![p(&[5, 2]), p(&[3, 2, 2])]);
        assert_eq!(c.partitions_in(3), alloc::vec![p(&[5, 2, 2])]);
    }

    #[test]
    fn nonminimal_cone() {
        let c = mapping_cone_resolution(&p(&[4, 2, 1]), &[p(&[5, 3, 1]), p(&[5, 2, 2])], 4).unwrap();
        assert_eq!(c.partitions_in(2), alloc::vec![p(&[5, 5, 2]), p(&[5, 5, 1]), p(&[5, 3, 2]), p(&[5, 2, 2, 2])]);
        assert_eq!(c.partitions_in(3), alloc::vec![p(&[5, 5, 3]), p(&[5, 5, 2, 2]), p(&[5, 5, 2]), p(&[5, 3, 2, 2])]);
        assert_eq!(c.partitions_in(4), alloc::vec![p(&[5, 5, 3, 2]), p(&[5, 5, 2, 2])]);
        assert_eq!(c.provenance, Provenance::PossiblyNonminimal);
        let cands = c.cancellation_candidates();
        assert_eq!(cands, alloc::vec![(2, 5, p(&[5, 5, 2])), (3, 7, p(&[5, 5, 2, 2]))]);
    }

    #[test]
    fn pure_family_example() {
        let specs = pure_family_specs(&[0, 3, 4, 2, 1], 4).unwrap();
        let alphas: Vec<Partition> = specs.iter().map(|s| s.0.clone()).collect();
        assert_eq!(alphas, alloc::vec![p(&[4, 1]), p(&[5, 2, 1]), p(&[6, 3, 2])]);
        for c in pure_family(&[0, 3, 4, 2, 1], 4).unwrap() {
            let degs: Vec<u32> = c.terms.iter().map(|t| t.degree).collect();
            assert_eq!(degs, alloc::vec![0, 3, 7, 9, 10]);
        }
        assert_eq!(pure_family(&[1, 2, 2], 3).unwrap().len(), 1);
    }

    #[test]
    fn cokernel_examples() {
        let spec = CokernelSpec::new(p(&[3, 1]), alloc::vec![p(&[5, 1]), p(&[3, 2])], 3).unwrap();
        let got = cokernel_character(&spec, 1);
        assert_eq!(got, alloc::vec![(p(&[3, 1]), 0), (p(&[4, 1]), 1), (p(&[3, 1, 1]), 1)]);
        let spec = CokernelSpec::new(p(&[5, 3, 1]), alloc::vec![p(&[6, 3, 1, 1])], 4).unwrap();
        let got = cokernel_character(&spec, 6);
        for d in 0..=6 {
            assert!(got.contains(&(p(&[5 + d, 3, 1]), d)));
        }
        let alpha = p(&[2, 1]);
        let spec = CokernelSpec::new(alpha.clone(), trivial_module_relations(&alpha, 3), 3).unwrap();
        assert_eq!(cokernel_character(&spec, 4), alloc::vec![(alpha, 0)]);
    }

    #[test]
    fn euler_checks() {
        let c = pure_resolution(&p(&[3, 1]), &p(&[5, 1]), 4).unwrap();
        let spec = CokernelSpec::new(p(&[3, 1]), alloc::vec![p(&[5, 1])], 4).unwrap();
        assert!(euler_matches_cokernel(&c, &spec, 6));
        assert!(verify_euler(&c, 6).finite_length);

        let k = koszul_tensor(&p(&[]), 3);
        let r = verify_euler(&k, 4);
        assert!(r.finite_length);
        assert_eq!(r.quotient[0], SymPoly::one(3));
        assert!(r.quotient[1..].iter().all(SymPoly::is_zero));

        let c = pieri_resolution_single(&p(&[5, 3, 1]), &p(&[6, 3, 1, 1]), 4).unwrap();
        let r = verify_euler(&c, 6);
        assert!(r.positive);
        assert!(!r.finite_length);
    }

    #[test]
    fn trivial_module_is_koszul() {
        let alpha = p(&[3, 1]);
        let rels = trivial_module_relations(&alpha, 3);
        assert_eq!(rels, alloc::vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1])]);
        let c = pieri_resolution_columns(&alpha, &rels, 3).unwrap();
        assert_eq!(c.terms, koszul_tensor(&alpha, 3).terms);
    }

    #[test]
    fn spec_validation() {
        assert!(CokernelSpec::new(p(&[3, 1]), alloc::vec![p(&[3, 2]), p(&[5, 1])], 3).is_err());
        assert!(CokernelSpec::new(p(&[3, 1]), alloc::vec![p(&[5, 2]), p(&[5, 1])], 3).is_err());
        assert!(CokernelSpec::new(p(&[3, 1]), alloc::vec![], 3).is_err());
    }
}
