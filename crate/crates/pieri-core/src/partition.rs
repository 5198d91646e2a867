//! Integer partitions, strip predicates and the orders used throughout the crate.
//!
//! Parts are stored in the usual weakly decreasing form with trailing zeros
//! removed. Column `j` of a drawing in the transposed convention is part `j`
//! here, so every predicate below is phrased directly in terms of parts.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new(parts: &[u32]) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format_parts(parts)));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition { parts: v })
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn from_slice(parts: &[u32]) -> Self {
        Self::new(parts).expect("parts must be weakly decreasing")
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut v = parts.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_slice(&v)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the stored length.
    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros (or truncated) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.get(i)).collect()
    }

    pub fn dual(&self) -> Partition {
        let w = self.get(0) as usize;
        let parts: Vec<u32> = (1..=w)
            .map(|i| self.parts.iter().filter(|&&p| p as usize >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `self ⊇ other` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.get(i) >= other.get(i))
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let m = self.len().max(other.len());
        Partition {
            parts: (0..m).map(|i| self.get(i).max(other.get(i))).collect(),
        }
    }

    pub fn intersection(&self, other: &Partition) -> Partition {
        let m = self.len().min(other.len());
        Partition {
            parts: (0..m).map(|i| self.get(i).min(other.get(i))).collect(),
        }
    }

    /// Adds one box to part `i` (0-based) if the result is still a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i > self.len() || (i > 0 && self.get(i - 1) == self.get(i)) {
            return None;
        }
        let mut p = self.padded(self.len().max(i + 1));
        p[i] += 1;
        Some(Partition { parts: p })
    }

    /// Removes one box from part `i` (0-based) if the result is still a partition.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if self.get(i) == 0 || self.get(i + 1) == self.get(i) {
            return None;
        }
        let mut p = self.parts.clone();
        p[i] -= 1;
        Some(Partition::from_slice(&p))
    }

    /// Indices `j` (0-based) with `self_j > other_j`: the columns of `self/other`.
    pub fn skew_columns(&self, other: &Partition) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.get(j) > other.get(j)).collect()
    }

    pub fn text(&self) -> String {
        format_parts(&self.parts)
    }

    /// Text form padded with zeros to `n` entries, e.g. `(5,3,1,0)`.
    pub fn text_padded(&self, n: usize) -> String {
        format_parts(&self.padded(n.max(self.len())))
    }
}

fn format_parts(parts: &[u32]) -> String {
    let mut s = String::from("(");
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{p}"));
    }
    s.push(')');
    s
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(5,3,1,0)`, `5,3,1,0`, `()` or the empty string.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad part `{tok}` in `{s}`")))?;
            parts.push(v);
        }
        Partition::new(&parts).map_err(|_| Error::Parse(alloc::format!("not weakly decreasing: `{s}`")))
    }
}

/// `(beta, alpha) ∈ VS`: `alpha ⊆ beta` and `beta_i <= alpha_{i-1}` for `i >= 2`.
pub fn is_vertical_strip(beta: &Partition, alpha: &Partition) -> bool {
    beta.contains(alpha) && (1..beta.len()).all(|i| beta.get(i) <= alpha.get(i - 1))
}

/// `(beta, alpha) ∈ HS`: the duals form a vertical strip, i.e. every part grows by at most one.
pub fn is_horizontal_strip(beta: &Partition, alpha: &Partition) -> bool {
    beta.contains(alpha) && (0..beta.len()).all(|i| beta.get(i) <= alpha.get(i) + 1)
}

/// `a < b` in lexicographic order on parts.
pub fn lex_less(a: &Partition, b: &Partition) -> bool {
    a < b
}

/// Prefix-sum comparison of two weights of equal total.
pub fn dominance_compare(a: &[i64], b: &[i64]) -> Option<Ordering> {
    let sa: i64 = a.iter().sum();
    let sb: i64 = b.iter().sum();
    if sa != sb {
        return None;
    }
    let m = a.len().max(b.len());
    let (mut pa, mut pb) = (0i64, 0i64);
    let (mut ge, mut le) = (true, true);
    for i in 0..m {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        if pa < pb {
            ge = false;
        }
        if pa > pb {
            le = false;
        }
    }
    match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}

/// `a` dominates `b` (weakly).
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    let wa: Vec<i64> = a.parts().iter().map(|&x| x as i64).collect();
    let wb: Vec<i64> = b.parts().iter().map(|&x| x as i64).collect();
    matches!(dominance_compare(&wa, &wb), Some(Ordering::Greater | Ordering::Equal))
}

/// All partitions of `k` with at most `rows` parts, each part at most `max_part`.
pub fn partitions_of(k: u32, rows: usize, max_part: u32) -> Vec<Partition> {
    fn rec(k: u32, rows: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if k == 0 {
            out.push(Partition::from_slice(cur));
            return;
        }
        if rows == 0 {
            return;
        }
        let top = max_part.min(k);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(k - p, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions `beta ⊇ alpha` with at most `n` parts such that `beta/alpha` is a
/// vertical strip (if `vertical`) or a horizontal strip, of size `b`.
pub fn strips_over(alpha: &Partition, b: u32, n: usize, vertical: bool) -> Vec<Partition> {
    let a = alpha.padded(n);
    let mut out = Vec::new();
    let mut cur = a.clone();
    fn rec(i: usize, left: u32, a: &[u32], cur: &mut Vec<u32>, vertical: bool, out: &mut Vec<Partition>) {
        let n = a.len();
        if i == n {
            if left == 0 {
                out.push(Partition::from_slice(cur));
            }
            return;
        }
        let cap = if vertical {
            if i == 0 {
                left
            } else {
                (a[i - 1] - a[i]).min(left)
            }
        } else {
            let room = if i == 0 { 1 } else { u32::from(cur[i - 1] > a[i]) };
            room.min(left)
        };
        for add in (0..=cap).rev() {
            cur[i] = a[i] + add;
            rec(i + 1, left - add, a, cur, vertical, out);
        }
        cur[i] = a[i];
    }
    if alpha.len() > n {
        return out;
    }
    rec(0, b, &a, &mut cur, vertical, &mut out);
    out
}

/// Partitions `mu ⊆ lambda` such that `lambda/mu` is a strip of size `b`.
pub fn strips_under(lambda: &Partition, b: u32, vertical: bool) -> Vec<Partition> {
    let l = lambda.len();
    let lam = lambda.padded(l);
    let mut out = Vec::new();
    fn rec(i: usize, left: u32, lam: &[u32], cur: &mut Vec<u32>, vertical: bool, out: &mut Vec<Partition>) {
        if i == lam.len() {
            if left == 0 {
                out.push(Partition::from_slice(cur));
            }
            return;
        }
        // mu_i ranges so that lambda/mu is the requested strip and mu stays a partition
        let hi = if i == 0 { lam[0] } else { lam[i].min(cur[i - 1]) };
        let lo = if vertical {
            lam.get(i + 1).copied().unwrap_or(0)
        } else {
            lam[i].saturating_sub(1)
        };
        if lo > hi {
            return;
        }
        for m in (lo..=hi).rev() {
            let used = lam[i] - m;
            if used > left {
                continue;
            }
            cur.push(m);
            rec(i + 1, left - used, lam, cur, vertical, out);
            cur.pop();
        }
    }
    rec(0, b, &lam, &mut Vec::new(), vertical, &mut out);
    out.retain(|m| {
        if vertical {
            is_vertical_strip(lambda, m)
        } else {
            is_horizontal_strip(lambda, m)
        }
    });
    out
}
