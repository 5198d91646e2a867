//! Numeric and equivariant Betti tables and Boij–Söderberg decompositions.
//!
//! Entries are keyed by `(i, j)`: homological degree and internal degree.
//! Text rendering puts `B_{i,j}` in column `i` and row `j - i`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{pre, Error};
use crate::linalg::Q;
use crate::partition::Partition;
use crate::resolution::{pure_family, EquivariantComplex};
use crate::symfunc::{check_schur_positive, PositivityVerdict, SchurFraction, SymPoly};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), Q>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, u32), Q)>>(it: I) -> Self {
        let mut t = BettiTable::new();
        for (k, v) in it {
            t.add_to(k.0, k.1, &v);
        }
        t
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(entries: &[(usize, u32, i64)]) -> Self {
        Self::from_entries(entries.iter().map(|&(i, j, v)| ((i, j), Q::from_integer(v.into()))))
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), Q> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: u32) -> Q {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_to(&mut self, i: usize, j: u32, v: &Q) {
        let e = self.entries.entry((i, j)).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    /// Largest homological degree with a nonzero entry.
    pub fn codim(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> BettiTable {
        BettiTable::from_entries(self.entries.iter().map(|(k, v)| (*k, v * c)))
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Q, other: &BettiTable) -> BettiTable {
        let mut out = self.clone();
        for ((i, j), v) in &other.entries {
            out.add_to(*i, *j, &(v * c));
        }
        out
    }

    /// Totals per homological degree.
    pub fn totals(&self) -> Vec<Q> {
        let mut out = alloc::vec![Q::zero(); self.codim() + 1];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    fn columns(&self) -> BTreeMap<usize, Vec<u32>> {
        let mut cols: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (i, j) in self.entries.keys() {
            cols.entry(*i).or_default().push(*j);
        }
        cols
    }

    /// Nonzero entries minus nonzero columns.
    pub fn impurity(&self) -> usize {
        self.entries.len() - self.columns().len()
    }

    pub fn top_degree_sequence(&self) -> Result<Vec<u32>, Error> {
        self.degree_sequence(Pivot::Top)
    }

    pub fn bottom_degree_sequence(&self) -> Result<Vec<u32>, Error> {
        self.degree_sequence(Pivot::Bottom)
    }

    pub fn degree_sequence(&self, pivot: Pivot) -> Result<Vec<u32>, Error> {
        degree_sequence(self.entries.keys().copied(), pivot)
    }

    /// `sum_j sum_i (-1)^i B_{i,j} q^j` is divisible by `(1 - q)^c`.
    pub fn satisfies_hk(&self, c: usize) -> bool {
        (0..c).all(|k| {
            let mut s = Q::zero();
            for ((i, j), v) in &self.entries {
                let term = v * Q::from_integer(BigInt::from(*j).pow(k as u32));
                if i % 2 == 0 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            s.is_zero()
        })
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = render_grid(self.entries.iter().map(|(k, v)| (*k, alloc::format!("{v}"))));
        f.write_str(&cells)
    }
}

/// Column `i`, row `j - i`; missing entries shown as `-`.
fn render_grid<I: Iterator<Item = ((usize, u32), String)>>(it: I) -> String {
    let cells: BTreeMap<(usize, u32), String> = it.collect();
    if cells.is_empty() {
        return String::from("0\n");
    }
    let ncols = cells.keys().map(|k| k.0).max().unwrap_or(0) + 1;
    let rows: Vec<u32> = cells.keys().map(|&(i, j)| j - i as u32).collect();
    let (lo, hi) = (*rows.iter().min().unwrap_or(&0), *rows.iter().max().unwrap_or(&0));
    let width = cells.values().map(String::len).max().unwrap_or(1).max(1);
    let mut out = String::new();
    for r in lo..=hi {
        let line: Vec<String> = (0..ncols)
            .map(|i| {
                let s = cells.get(&(i, r + i as u32)).map_or("-", String::as_str);
                alloc::format!("{s:>width$}")
            })
            .collect();
        out.push_str(&alloc::format!("{r}: {}\n", line.join(" ")));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    Top,
    Bottom,
}

fn degree_sequence<I: Iterator<Item = (usize, u32)>>(keys: I, pivot: Pivot) -> Result<Vec<u32>, Error> {
    let mut cols: BTreeMap<usize, (u32, u32)> = BTreeMap::new();
    for (i, j) in keys {
        let e = cols.entry(i).or_insert((j, j));
        e.0 = e.0.min(j);
        e.1 = e.1.max(j);
    }
    if cols.is_empty() {
        return Err(pre("empty table"));
    }
    let c = *cols.keys().max().expect("nonempty");
    (0..=c)
        .map(|i| {
            cols.get(&i)
                .map(|&(lo, hi)| if pivot == Pivot::Top { lo } else { hi })
                .ok_or_else(|| pre(alloc::format!("column {i} is empty")))
        })
        .collect()
}

/// The pure table on `d` with minimal positive integer entries.
pub fn hk_pure_table(d: &[u32]) -> Result<BettiTable, Error> {
    if d.is_empty() || d.windows(2).any(|w| w[0] >= w[1]) {
        return Err(pre("degree sequence must be strictly increasing"));
    }
    let raw: Vec<Q> = (0..d.len())
        .map(|i| {
            let mut den = BigInt::one();
            for (j, &dj) in d.iter().enumerate() {
                if j != i {
                    den *= BigInt::from((i64::from(dj) - i64::from(d[i])).abs());
                }
            }
            Q::new(BigInt::one(), den)
        })
        .collect();
    let l = raw.iter().fold(BigInt::one(), |a, q| a.lcm(q.denom()));
    let ints: Vec<BigInt> = raw.iter().map(|q| (q * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    Ok(BettiTable::from_entries(
        ints.into_iter().enumerate().map(|(i, x)| ((i, d[i]), Q::from_integer(x / &g))),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericStep {
    pub coefficient: Q,
    pub degrees: Vec<u32>,
    pub pure: BettiTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericDecomposition {
    pub steps: Vec<NumericStep>,
    pub residual: BettiTable,
}

impl NumericDecomposition {
    pub fn is_success(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn reassemble(&self) -> BettiTable {
        self.steps.iter().fold(self.residual.clone(), |acc, s| acc.axpy(&s.coefficient, &s.pure))
    }

    /// Successive degree sequences increase termwise.
    pub fn is_chain(&self) -> bool {
        self.steps
            .windows(2)
            .all(|w| w[0].degrees.iter().zip(&w[1].degrees).all(|(a, b)| a <= b))
    }
}

/// Greedy decomposition; stops with a nonzero residual when the pivot
/// sequence is not strictly increasing or a column empties early.
pub fn bs_decompose_numeric(b: &BettiTable) -> NumericDecomposition {
    bs_decompose_numeric_with(b, Pivot::Top)
}

pub fn bs_decompose_numeric_with(b: &BettiTable, pivot: Pivot) -> NumericDecomposition {
    let c = b.codim();
    let mut residual = b.clone();
    let mut steps = Vec::new();
    while !residual.is_zero() {
        let Ok(d) = residual.degree_sequence(pivot) else { break };
        if d.len() != c + 1 || !residual.is_nonnegative() {
            break;
        }
        let Ok(pure) = hk_pure_table(&d) else { break };
        let r = (0..=c)
            .map(|i| residual.get(i, d[i]) / pure.get(i, d[i]))
            .min()
            .expect("nonempty");
        residual = residual.axpy(&-r.clone(), &pure);
        steps.push(NumericStep { coefficient: r, degrees: d, pure });
    }
    NumericDecomposition { steps, residual }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantBettiTable {
    pub n: usize,
    entries: BTreeMap<(usize, u32), SymPoly>,
}

impl EquivariantBettiTable {
    pub fn new(n: usize) -> Self {
        EquivariantBettiTable { n, entries: BTreeMap::new() }
    }

    pub fn from_complex(c: &EquivariantComplex) -> Self {
        let mut t = EquivariantBettiTable::new(c.n);
        for term in &c.terms {
            let p = SymPoly::schur(term.partition.clone(), c.n).scale(&BigInt::from(term.multiplicity));
            t.add_to(term.hom, term.degree, &p);
        }
        t
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), SymPoly> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: u32) -> SymPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| SymPoly::zero(self.n))
    }

    pub fn add_to(&mut self, i: usize, j: u32, p: &SymPoly) {
        let cur = self.get(i, j).add(p);
        if cur.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), cur);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn codim(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn mul_poly(&self, p: &SymPoly) -> Self {
        let mut out = EquivariantBettiTable::new(self.n);
        for ((i, j), v) in &self.entries {
            out.add_to(*i, *j, &v.mul(p));
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((i, j), v) in &o.entries {
            out.add_to(*i, *j, v);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.mul_poly(&SymPoly::one(self.n).neg()))
    }

    /// Moves every entry `k` steps up in internal degree.
    pub fn shift(&self, k: u32) -> Self {
        EquivariantBettiTable {
            n: self.n,
            entries: self.entries.iter().map(|((i, j), v)| ((*i, j + k), v.clone())).collect(),
        }
    }

    pub fn to_numeric(&self) -> BettiTable {
        BettiTable::from_entries(self.entries.iter().map(|(k, v)| (*k, Q::from_integer(v.dimension()))))
    }

    pub fn degree_sequence(&self, pivot: Pivot) -> Result<Vec<u32>, Error> {
        degree_sequence(self.entries.keys().copied(), pivot)
    }

    pub fn is_schur_positive(&self) -> bool {
        self.entries.values().all(SymPoly::is_schur_positive)
    }
}

impl fmt::Display for EquivariantBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), v) in &self.entries {
            writeln!(f, "[{i},{j}] {v}")?;
        }
        Ok(())
    }
}

/// Jumps `e_i = d_i - d_{i-1}` of a degree sequence.
fn jumps(d: &[u32]) -> Vec<u32> {
    d.windows(2).map(|w| w[1] - w[0]).collect()
}

/// The equivariant pure table of a Pieri resolution with degree sequence `d`
/// (length `n + 1`): the first member of the pure family with those jumps.
pub fn pure_generator(d: &[u32], n: usize) -> Result<EquivariantBettiTable, Error> {
    if d.len() != n + 1 || d.windows(2).any(|w| w[0] >= w[1]) {
        return Err(pre("need a strictly increasing sequence of length n + 1"));
    }
    let fam = pure_family(&jumps(d), n)?;
    Ok(EquivariantBettiTable::from_complex(&fam[0]).shift(d[0]))
}

#[derive(Clone, Debug)]
pub struct EquivariantStep {
    pub coefficient: SchurFraction,
    pub degrees: Vec<u32>,
    pub pure: EquivariantBettiTable,
}

/// Where and why an equivariant decomposition stopped.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Success,
    /// The residual entry `(hom, degree)` is not a Schur-positive fraction.
    NotPositive { hom: usize, degree: u32, weight: Partition },
    /// Positivity of the entry could not be decided within the effort bound.
    Unknown { hom: usize, degree: u32 },
    /// The pivot sequence is not a valid degree sequence.
    Stuck,
}

/// `input = sum_s coefficient_s * pure_s + residual / residual_den`.
#[derive(Clone, Debug)]
pub struct EquivariantDecomposition {
    pub steps: Vec<EquivariantStep>,
    pub residual: EquivariantBettiTable,
    pub residual_den: SymPoly,
    pub outcome: Outcome,
}

impl EquivariantDecomposition {
    /// Checks `den * input == den * sum_s c_s pure_s + residual` exactly.
    pub fn verify(&self, input: &EquivariantBettiTable) -> bool {
        let den = &self.residual_den;
        let mut acc = self.residual.clone();
        for s in &self.steps {
            // den / c.den must be a polynomial: it is the product of the step denominators
            let Some(q) = exact_quotient(den, &s.coefficient.den) else { return false };
            acc = acc.add(&s.pure.mul_poly(&s.coefficient.num.mul(&q)));
        }
        acc == input.mul_poly(den)
    }
}

/// Quotient `a / b` when `b` divides `a` as one of the factors used to build it.
fn exact_quotient(a: &SymPoly, b: &SymPoly) -> Option<SymPoly> {
    if a == b {
        return Some(SymPoly::one(a.n()));
    }
    // denominators are built as products; try peeling b off by trial multiplication
    let mut q = SymPoly::zero(a.n());
    let mut r = a.clone();
    let lead_b = b.terms().iter().next_back()?;
    while !r.is_zero() {
        let (lr, cr) = r.terms().iter().next_back()?;
        let (lb, cb) = lead_b;
        if !lr.contains(lb) || !(cr % cb).is_zero() {
            return None;
        }
        // the lex-largest term of a product is the product of the largest terms
        let shape: Vec<u32> = (0..lr.len()).map(|i| lr.get(i) - lb.get(i)).collect();
        let t = Partition::new(&shape).ok()?;
        let c = cr / cb;
        let mono = SymPoly::schur(t, a.n()).scale(&c);
        q = q.add(&mono);
        r = r.sub(&mono.mul(b));
    }
    Some(q)
}

/// Equivariant decomposition. Tables pure except in one column are solved
/// exactly; otherwise greedy steps along `pivot` are certified one by one.
/// `generators` supplies pure tables; missing degree sequences are built
/// with [`pure_generator`].
pub fn bs_decompose_equivariant(
    t: &EquivariantBettiTable,
    generators: &[EquivariantBettiTable],
    pivot: Pivot,
    effort: u32,
) -> Result<EquivariantDecomposition, Error> {
    let n = t.n;
    let generator = |d: &[u32]| -> Result<EquivariantBettiTable, Error> {
        for g in generators {
            if g.degree_sequence(Pivot::Top).ok().as_deref() == Some(d) && g.degree_sequence(Pivot::Bottom).ok().as_deref() == Some(d) {
                return Ok(g.clone());
            }
        }
        pure_generator(d, n)
    };
    let top = t.degree_sequence(Pivot::Top)?;
    let bottom = t.degree_sequence(Pivot::Bottom)?;
    let impure: Vec<usize> = (0..top.len()).filter(|&i| top[i] != bottom[i]).collect();
    if impure.len() <= 1 && top.len() == n + 1 {
        return one_column_solve(t, &top, &bottom, impure.first().copied(), &generator, effort);
    }
    let mut residual = t.clone();
    let mut den = SymPoly::one(n);
    let mut steps = Vec::new();
    while !residual.is_zero() {
        let Ok(d) = residual.degree_sequence(pivot) else { break };
        if d.len() != n + 1 || d.windows(2).any(|w| w[0] >= w[1]) {
            return Ok(EquivariantDecomposition { steps, residual, residual_den: den, outcome: Outcome::Stuck });
        }
        let pure = generator(&d)?;
        // the numeric shadow picks the entry that the step clears
        let k = (0..=n)
            .min_by_key(|&i| Q::new(residual.get(i, d[i]).dimension(), pure.get(i, d[i]).dimension()))
            .expect("nonempty");
        let a = residual.get(k, d[k]);
        let b = pure.get(k, d[k]);
        let coefficient = SchurFraction::new(a.clone(), den.mul(&b))?;
        residual = residual.mul_poly(&b).sub(&pure.mul_poly(&a));
        den = den.mul(&b);
        steps.push(EquivariantStep { coefficient, degrees: d, pure });
        for ((i, j), v) in residual.entries() {
            let f = SchurFraction::new(v.clone(), den.clone())?;
            match check_schur_positive(&f, effort) {
                PositivityVerdict::Positive(_) => {}
                PositivityVerdict::NotPositive(w) => {
                    let outcome = Outcome::NotPositive { hom: *i, degree: *j, weight: w };
                    return Ok(EquivariantDecomposition { steps, residual, residual_den: den, outcome });
                }
                PositivityVerdict::Unknown => {
                    let outcome = Outcome::Unknown { hom: *i, degree: *j };
                    return Ok(EquivariantDecomposition { steps, residual, residual_den: den, outcome });
                }
            }
        }
    }
    let outcome = if residual.is_zero() { Outcome::Success } else { Outcome::Stuck };
    Ok(EquivariantDecomposition { steps, residual, residual_den: den, outcome })
}

fn one_column_solve(
    t: &EquivariantBettiTable,
    top: &[u32],
    bottom: &[u32],
    k: Option<usize>,
    generator: &dyn Fn(&[u32]) -> Result<EquivariantBettiTable, Error>,
    effort: u32,
) -> Result<EquivariantDecomposition, Error> {
    let n = t.n;
    let k = k.unwrap_or(0);
    let mut pieces = Vec::new();
    for j in top[k]..=bottom[k] {
        if t.get(k, j).is_zero() {
            continue;
        }
        let mut d = top.to_vec();
        d[k] = j;
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Ok(EquivariantDecomposition {
                steps: Vec::new(),
                residual: t.clone(),
                residual_den: SymPoly::one(n),
                outcome: Outcome::Stuck,
            });
        }
        let pure = generator(&d)?;
        pieces.push((SchurFraction::new(t.get(k, j), pure.get(k, j))?, d, pure));
    }
    // common denominator: the product of all pure pivots
    let den = pieces.iter().fold(SymPoly::one(n), |acc, p| acc.mul(&p.0.den));
    let mut residual = t.mul_poly(&den);
    for (idx, (c, _, pure)) in pieces.iter().enumerate() {
        let others = pieces
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .fold(SymPoly::one(n), |acc, (_, p)| acc.mul(&p.0.den));
        residual = residual.sub(&pure.mul_poly(&c.num.mul(&others)));
    }
    let mut outcome = if residual.is_zero() { Outcome::Success } else { Outcome::Stuck };
    for (c, d, _) in &pieces {
        match check_schur_positive(c, effort) {
            PositivityVerdict::Positive(_) => {}
            PositivityVerdict::NotPositive(w) => outcome = Outcome::NotPositive { hom: k, degree: d[k], weight: w },
            PositivityVerdict::Unknown => outcome = Outcome::Unknown { hom: k, degree: d[k] },
        }
    }
    let steps = pieces
        .into_iter()
        .map(|(coefficient, degrees, pure)| EquivariantStep { coefficient, degrees, pure })
        .collect();
    Ok(EquivariantDecomposition { steps, residual, residual_den: den, outcome })
}
