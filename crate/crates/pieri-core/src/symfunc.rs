//! Symmetric polynomials in `n` variables, stored in the Schur basis.
//!
//! Multiplication uses the Littlewood-Richardson rule. A Jacobi-Trudi route
//! built on iterated Pieri products is kept alongside as an independent check.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{pre, Error};
use crate::partition::{dominance_compare, partitions_of, strips_over, strips_under, Partition};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymPoly {
    n: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::schur(Partition::empty(), n)
    }

    /// `s_lambda`, or zero when `lambda` has more than `n` parts.
    pub fn schur(lambda: Partition, n: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(lambda, BigInt::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (l, c) in it {
            p.add_term(l, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if lambda.len() > self.n || c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn check_n(&self, other: &SymPoly) {
        assert_eq!(self.n, other.n, "symmetric polynomials in different numbers of variables");
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        self.check_n(other);
        let mut r = self.clone();
        for (l, c) in &other.terms {
            r.add_term(l.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymPoly {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SymPoly {
            n: self.n,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Product via the Littlewood-Richardson rule, truncated to `n` rows.
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        self.check_n(other);
        let mut r = Self::zero(self.n);
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                let ab = a * b;
                for (nu, c) in lr_product(l, m, self.n) {
                    r.add_term(nu, &ab * BigInt::from(c));
                }
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> SymPoly {
        let mut r = Self::one(self.n);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// All Schur coefficients nonnegative.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluation at `x_1 = ... = x_n = 1`.
    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(l, c)| c * BigInt::from(dimension(l, self.n)))
            .sum()
    }

    /// Coefficients in the monomial symmetric basis, keyed by dominant weight.
    pub fn monomial_coefficients(&self) -> BTreeMap<Partition, BigInt> {
        let mut memo = KostkaMemo::default();
        let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
        let mut sizes: Vec<u32> = self.terms.keys().map(|l| l.size()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        for s in sizes {
            for mu in partitions_of(s, self.n, s) {
                let mut c = BigInt::zero();
                for (l, a) in self.terms.iter().filter(|(l, _)| l.size() == s) {
                    let k = memo.kostka(l, mu.parts());
                    if !k.is_zero() {
                        c += a * BigInt::from(k);
                    }
                }
                if !c.is_zero() {
                    out.insert(mu, c);
                }
            }
        }
        out
    }

    /// Full monomial expansion keyed by exponent vectors of length `n`.
    pub fn to_monomials(&self) -> BTreeMap<Vec<u32>, BigInt> {
        let dom = self.monomial_coefficients();
        let mut out = BTreeMap::new();
        for (mu, c) in dom {
            for w in distinct_permutations(&mu.padded(self.n)) {
                out.insert(w, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // largest partitions first, the way expansions are usually written
        for (k, (l, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [n={}]", self.n)
    }
}

/// Parses `"s(5,3) - 2*s(4,4)"` in `n` variables.
pub fn parse_sympoly(s: &str, n: usize) -> Result<SymPoly, Error> {
    let mut p = SymPoly::zero(n);
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "0" {
        return Ok(p);
    }
    let bytes = t.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return Err(Error::Parse(alloc::format!("expected sign at `{}`", &t[i..])));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff = BigInt::one();
        if i > start {
            coeff = t[start..i]
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad coefficient `{}`", &t[start..i])))?;
            if bytes.get(i) != Some(&b'*') {
                return Err(Error::Parse(alloc::format!("expected `*` after `{}`", &t[start..i])));
            }
            i += 1;
        }
        if bytes.get(i) != Some(&b's') {
            return Err(Error::Parse(alloc::format!("expected `s(` at `{}`", &t[i.min(t.len())..])));
        }
        i += 1;
        let close = t[i..]
            .find(')')
            .ok_or_else(|| Error::Parse(alloc::format!("unclosed partition in `{s}`")))?;
        let lam: Partition = t[i..=i + close].parse()?;
        i += close + 1;
        p.add_term(lam, sign * coeff);
    }
    Ok(p)
}

impl FromStr for SymPoly {
    type Err = Error;
    /// Infers `n` as the longest partition mentioned (at least 1).
    fn from_str(s: &str) -> Result<Self, Error> {
        let wide = parse_sympoly(s, usize::MAX)?;
        let n = wide.terms.keys().map(|l| l.len()).max().unwrap_or(1).max(1);
        Ok(SymPoly { n, terms: wide.terms })
    }
}

fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation over the sorted multiset
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Littlewood-Richardson expansion of `s_lambda * s_mu` in `n` variables.
///
/// The rows of `mu` are added one label at a time as horizontal strips; the
/// reverse reading word stays a lattice word when, for every row `r`, the
/// number of `k`s in rows up to `r` is at most the number of `k-1`s in rows
/// strictly above `r`.
pub fn lr_product(lambda: &Partition, mu: &Partition, n: usize) -> Vec<(Partition, u64)> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    if lambda.len() > n || mu.len() > n {
        return Vec::new();
    }
    let mut shape = lambda.padded(n);
    // counts[k][r] = number of label k+1 in row r
    let mut counts = vec![vec![0u32; n]; mu.len()];
    lr_rec(0, mu.parts(), &mut shape, &mut counts, &mut acc);
    acc.into_iter().collect()
}

fn lr_rec(k: usize, mu: &[u32], shape: &mut Vec<u32>, counts: &mut Vec<Vec<u32>>, acc: &mut BTreeMap<Partition, u64>) {
    if k == mu.len() {
        *acc.entry(Partition::from_slice(shape)).or_insert(0) += 1;
        return;
    }
    let before = shape.clone();
    place(k, 0, mu[k], 0, mu, &before, shape, counts, acc);
}

#[allow(clippy::too_many_arguments)]
fn place(
    k: usize,
    r: usize,
    left: u32,
    cum: u32,
    mu: &[u32],
    before: &[u32],
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    acc: &mut BTreeMap<Partition, u64>,
) {
    let n = before.len();
    if left == 0 {
        lr_rec(k + 1, mu, shape, counts, acc);
        return;
    }
    if r == n {
        return;
    }
    let room = if r == 0 { left } else { before[r - 1] - before[r] };
    let lattice = if k == 0 {
        u32::MAX
    } else {
        let above: u32 = counts[k - 1][..r].iter().sum();
        above.saturating_sub(cum)
    };
    let cap = room.min(left).min(lattice);
    for x in (0..=cap).rev() {
        shape[r] = before[r] + x;
        counts[k][r] = x;
        place(k, r + 1, left - x, cum + x, mu, before, shape, counts, acc);
    }
    shape[r] = before[r];
    counts[k][r] = 0;
}

/// Kinds of Pieri product: `Symmetric` multiplies by `h_b` and adds a
/// vertical strip in the column drawing; `Exterior` multiplies by `e_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    Symmetric,
    Exterior,
}

pub fn pieri_multiply(lambda: &Partition, b: u32, kind: PieriKind, n: usize) -> SymPoly {
    let mut p = SymPoly::zero(n);
    if lambda.len() > n {
        return p;
    }
    for beta in strips_over(lambda, b, n, kind == PieriKind::Symmetric) {
        p.add_term(beta, BigInt::one());
    }
    p
}

/// `dim S_lambda V` for `dim V = n`, by the Weyl product formula.
pub fn dimension(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let l = lambda.padded(n);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigUint::from(l[i] - l[j] + (j - i) as u32);
            den *= BigUint::from((j - i) as u32);
        }
    }
    num / den
}

/// Saturating `u64` form of [`dimension`], for size guards.
pub fn dimension_u64(lambda: &Partition, n: usize) -> u64 {
    u64::try_from(dimension(lambda, n)).unwrap_or(u64::MAX)
}

/// Memoized Kostka numbers `K_{lambda, w}` for compositions `w`.
#[derive(Default)]
pub struct KostkaMemo {
    memo: BTreeMap<(Partition, Vec<u32>), u64>,
}

impl KostkaMemo {
    /// Number of semistandard tableaux of shape `lambda` and content `w`.
    pub fn kostka(&mut self, lambda: &Partition, w: &[u32]) -> u64 {
        let total: u32 = w.iter().sum();
        if total != lambda.size() {
            return 0;
        }
        if w.is_empty() {
            return u64::from(lambda.is_empty());
        }
        let key = (lambda.clone(), w.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (last, rest) = w.split_last().expect("nonempty");
        let mut v = 0;
        // the largest label occupies a strip, at most one per column of the row drawing
        for nu in strips_under(lambda, *last, true) {
            if nu.len() <= rest.len() {
                v += self.kostka(&nu, rest);
            }
        }
        self.memo.insert(key, v);
        v
    }
}

pub fn kostka(lambda: &Partition, w: &[u32]) -> u64 {
    KostkaMemo::default().kostka(lambda, w)
}

/// Monomial expansion of `s_lambda(x_1, ..., x_n)` by tableau content.
pub fn schur_in_monomials(lambda: &Partition, n: usize) -> BTreeMap<Vec<u32>, BigInt> {
    SymPoly::schur(lambda.clone(), n).to_monomials()
}

/// `s_lambda` expanded through the Jacobi-Trudi determinant
/// `det(h_{lambda_i - i + j})`, with each `h`-product converted by Pieri's rule.
pub fn jacobi_trudi(lambda: &Partition, n: usize) -> SymPoly {
    let l = lambda.len();
    let mut out = SymPoly::zero(n);
    for (perm, sign) in permutations_with_sign(l) {
        let mut hs = Vec::new();
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            let e = lambda.get(i) as i64 - i as i64 + j as i64;
            if e < 0 {
                ok = false;
                break;
            }
            hs.push(e as u32);
        }
        if ok {
            out = out.add(&h_product(&hs, n).scale(&BigInt::from(sign)));
        }
    }
    out
}

/// `h_{a_1} h_{a_2} ... ` in the Schur basis via repeated Pieri products.
pub fn h_product(hs: &[u32], n: usize) -> SymPoly {
    let mut cur = SymPoly::one(n);
    for &h in hs {
        let mut next = SymPoly::zero(n);
        for (l, c) in cur.terms() {
            for beta in strips_over(l, h, n, true) {
                next.add_term(beta, c.clone());
            }
        }
        cur = next;
    }
    cur
}

/// `s_lambda * s_mu` computed from two Jacobi-Trudi expansions and Pieri's rule only.
pub fn multiply_via_jacobi_trudi(lambda: &Partition, mu: &Partition, n: usize) -> SymPoly {
    let jt = |p: &Partition| -> Vec<(Vec<u32>, i64)> {
        let l = p.len();
        let mut out = Vec::new();
        for (perm, sign) in permutations_with_sign(l) {
            let hs: Option<Vec<u32>> = perm
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let e = p.get(i) as i64 - i as i64 + j as i64;
                    (e >= 0).then_some(e as u32)
                })
                .collect();
            if let Some(hs) = hs {
                out.push((hs, sign));
            }
        }
        out
    };
    let mut out = SymPoly::zero(n);
    for (a, sa) in jt(lambda) {
        for (b, sb) in jt(mu) {
            let mut hs = a.clone();
            hs.extend_from_slice(&b);
            out = out.add(&h_product(&hs, n).scale(&BigInt::from(sa * sb)));
        }
    }
    out
}

pub(crate) fn permutations_with_sign(l: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let l = used.len();
        if cur.len() == l {
            let mut inv = 0;
            for i in 0..l {
                for j in i + 1..l {
                    if cur[i] > cur[j] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..l {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; l], &mut out);
    out
}

/// A ratio of symmetric polynomials. Not reduced; equality cross-multiplies.
#[derive(Clone, Debug)]
pub struct SchurFraction {
    pub num: SymPoly,
    pub den: SymPoly,
}

impl SchurFraction {
    pub fn new(num: SymPoly, den: SymPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(pre("zero denominator"));
        }
        if num.n() != den.n() {
            return Err(pre("numerator and denominator use different numbers of variables"));
        }
        Ok(SchurFraction { num, den })
    }

    pub fn from_poly(p: SymPoly) -> Self {
        let n = p.n();
        SchurFraction { num: p, den: SymPoly::one(n) }
    }

    pub fn add(&self, o: &SchurFraction) -> SchurFraction {
        SchurFraction {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
    }

    pub fn mul(&self, o: &SchurFraction) -> SchurFraction {
        SchurFraction {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
    }

    pub fn neg(&self) -> SchurFraction {
        SchurFraction { num: self.num.neg(), den: self.den.clone() }
    }

    /// Value at `x_i = 1`.
    pub fn numeric(&self) -> num_rational::BigRational {
        num_rational::BigRational::new(self.num.dimension(), self.den.dimension())
    }
}

impl PartialEq for SchurFraction {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for SchurFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == SymPoly::one(self.den.n()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PositivityVerdict {
    /// `witness` is Schur-positive and `witness * f` is Schur-positive.
    Positive(SymPoly),
    /// A dominant weight whose monomial coefficient is negative and which is
    /// the unique maximizer of `x -> w.x` over the support.
    NotPositive(Partition),
    Unknown,
}

/// Default effort: maximal witness degree tried.
pub const DEFAULT_EFFORT: u32 = 16;

/// Semi-decides whether `f` is a ratio of two Schur-positive polynomials.
pub fn check_schur_positive(f: &SchurFraction, effort: u32) -> PositivityVerdict {
    let n = f.num.n();
    if f.num.is_zero() {
        return PositivityVerdict::Positive(SymPoly::one(n));
    }
    // make the denominator Schur-positive, multiplying through if needed
    let (mut num, den) = (f.num.clone(), f.den.clone());
    if !den.is_schur_positive() {
        if den.neg().is_schur_positive() {
            num = num.neg();
        } else {
            let target = if den.dimension().is_negative() { den.neg() } else { den.clone() };
            match find_witness(&target, effort) {
                Some(g) => {
                    num = num.mul(&g);
                    if target != den {
                        num = num.neg();
                    }
                }
                None => return PositivityVerdict::Unknown,
            }
        }
    }
    if num.is_schur_positive() {
        return PositivityVerdict::Positive(SymPoly::one(n));
    }
    if let Some(w) = negative_vertex(&num) {
        return PositivityVerdict::NotPositive(w);
    }
    match find_witness(&num, effort) {
        Some(g) => PositivityVerdict::Positive(g),
        None => PositivityVerdict::Unknown,
    }
}

/// A dominant weight `w` with negative monomial coefficient such that
/// `|w|^2 > w.v` for every other dominant weight `v` in the support. Such a
/// `w` survives multiplication by any nonzero monomial-positive polynomial.
pub fn negative_vertex(p: &SymPoly) -> Option<Partition> {
    let m = p.monomial_coefficients();
    let n = p.n();
    let dot = |a: &Partition, b: &Partition| -> u64 {
        (0..n).map(|i| u64::from(a.get(i)) * u64::from(b.get(i))).sum()
    };
    let mut cands: Vec<&Partition> = m.iter().filter(|(_, c)| c.is_negative()).map(|(w, _)| w).collect();
    cands.sort_by(|a, b| b.cmp(a));
    cands
        .into_iter()
        .find(|w| {
            let ww = dot(w, w);
            m.keys().all(|v| v == *w || ww > dot(w, v))
        })
        .cloned()
}

/// Candidate multipliers in order of degree: powers of one-row shapes and of staircases.
fn witness_candidates(n: usize, effort: u32) -> Vec<(u32, Partition, u32)> {
    let mut out = Vec::new();
    for d in 1..=effort {
        for m in 1..=d {
            if d % m == 0 {
                out.push((d, Partition::from_slice(&[m]), d / m));
            }
        }
        for m in 2..=n as u32 {
            let s = m * (m + 1) / 2;
            if d % s == 0 {
                let parts: Vec<u32> = (1..=m).rev().collect();
                out.push((d, Partition::from_slice(&parts), d / s));
            }
        }
    }
    out
}

fn find_witness(p: &SymPoly, effort: u32) -> Option<SymPoly> {
    let n = p.n();
    let mut cache: BTreeMap<Partition, Vec<SymPoly>> = BTreeMap::new();
    for (_, base, k) in witness_candidates(n, effort) {
        let pows = cache.entry(base.clone()).or_insert_with(|| vec![SymPoly::one(n)]);
        while pows.len() <= k as usize {
            let next = pows.last().expect("nonempty").mul(&SymPoly::schur(base.clone(), n));
            pows.push(next);
        }
        let g = pows[k as usize].clone();
        if p.mul(&g).is_schur_positive() {
            return Some(g);
        }
    }
    None
}

/// Dominance comparison on weights given as partitions.
pub fn dominance(a: &Partition, b: &Partition) -> Option<core::cmp::Ordering> {
    let wa: Vec<i64> = a.parts().iter().map(|&x| i64::from(x)).collect();
    let wb: Vec<i64> = b.parts().iter().map(|&x| i64::from(x)).collect();
    dominance_compare(&wa, &wb)
}
