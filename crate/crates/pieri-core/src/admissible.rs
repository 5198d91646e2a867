//! Critical boxes and admissible subsets.
//!
//! Column indices are 1-based, as in the drawings: column `j` holds `parts[j-1]`
//! boxes. A box `(r, j)` sits in row `r` of column `j`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{pre, Error};
use crate::partition::{is_vertical_strip, Partition};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CriticalBoxSet {
    pub width: usize,
    /// `(row, column)` pairs, increasing in column.
    pub boxes: Vec<(u32, usize)>,
}

impl CriticalBoxSet {
    pub fn row_of(&self, column: usize) -> Option<u32> {
        self.boxes.iter().find(|b| b.1 == column).map(|b| b.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdmissibleSet {
    /// Column indices of the chosen critical boxes, increasing.
    pub columns: Vec<usize>,
    /// The smallest partition containing `beta` and the chosen boxes.
    pub beta: Partition,
}

impl AdmissibleSet {
    /// Homological degree `#J + 1`.
    pub fn degree(&self) -> usize {
        self.columns.len() + 1
    }
}

/// 1-based columns of `beta/alpha`.
pub fn strip_columns(beta: &Partition, alpha: &Partition) -> Vec<usize> {
    beta.skew_columns(alpha).into_iter().map(|j| j + 1).collect()
}

fn check_strip(alpha: &Partition, beta: &Partition, n: usize) -> Result<Vec<usize>, Error> {
    if !is_vertical_strip(beta, alpha) {
        return Err(pre(alloc::format!("{beta}/{alpha} is not a vertical strip")));
    }
    if beta == alpha {
        return Err(pre("empty strip"));
    }
    if beta.len() > n {
        return Err(pre(alloc::format!("{beta} has more than {n} parts")));
    }
    Ok(strip_columns(beta, alpha))
}

pub fn critical_boxes(alpha: &Partition, beta: &Partition, n: usize) -> Result<CriticalBoxSet, Error> {
    let cols = check_strip(alpha, beta, n)?;
    let c1 = cols[0];
    let boxes = (c1 + 1..=n).map(|j| (alpha.get(j - 2) + 1, j)).collect();
    Ok(CriticalBoxSet { width: n, boxes })
}

/// `beta(J)`: enlarge `beta` so that column `j` reaches row `r` for every chosen box.
pub fn beta_of(beta: &Partition, boxes: &CriticalBoxSet, columns: &[usize]) -> Partition {
    let n = boxes.width;
    let mut p = beta.padded(n.max(beta.len()));
    for &j in columns {
        let r = boxes.row_of(j).expect("column must carry a critical box");
        for part in p.iter_mut().take(j) {
            *part = (*part).max(r);
        }
    }
    Partition::from_slice(&p)
}

/// All admissible subsets, every degree, sorted by column list.
///
/// Enumerated by choosing a run length for each column of `beta/alpha` and
/// merging the runs.
pub fn all_admissible(alpha: &Partition, beta: &Partition, n: usize) -> Result<Vec<AdmissibleSet>, Error> {
    let cols = check_strip(alpha, beta, n)?;
    let boxes = critical_boxes(alpha, beta, n)?;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut lens = alloc::vec![0usize; cols.len()];
    loop {
        let mut set = BTreeSet::new();
        for (k, &c) in cols.iter().enumerate() {
            set.extend(c + 1..=c + lens[k]);
        }
        found.insert(set.into_iter().collect());
        // odometer over run lengths, run k may reach column n
        let mut k = 0;
        loop {
            if k == cols.len() {
                let out = found
                    .into_iter()
                    .map(|columns| AdmissibleSet {
                        beta: beta_of(beta, &boxes, &columns),
                        columns,
                    })
                    .collect();
                return Ok(out);
            }
            if cols[k] + lens[k] < n {
                lens[k] += 1;
                break;
            }
            lens[k] = 0;
            k += 1;
        }
    }
}

/// `Ad(alpha; beta)_i`: admissible subsets with `#J + 1 = i`.
pub fn admissible_subsets(alpha: &Partition, beta: &Partition, i: usize, n: usize) -> Result<Vec<AdmissibleSet>, Error> {
    if i < 1 {
        return Err(pre("homological index must be at least 1"));
    }
    Ok(all_admissible(alpha, beta, n)?
        .into_iter()
        .filter(|a| a.degree() == i)
        .collect())
}

/// One element of the multi-relation family: relation index `k` (0-based)
/// paired with an admissible set for `(alpha, betas[k])`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiAdmissible {
    pub parts: Vec<(usize, Vec<usize>)>,
    pub beta: Partition,
}

impl MultiAdmissible {
    /// `s(J) = sum over the chosen relations of (#J_k + 1)`.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|(_, j)| j.len() + 1).sum()
    }
}

/// Checks the single-column hypotheses and returns the column of each relation.
pub fn single_columns(alpha: &Partition, betas: &[Partition], n: usize) -> Result<Vec<usize>, Error> {
    if betas.is_empty() {
        return Err(pre("at least one relation is required"));
    }
    let mut cols = Vec::new();
    for b in betas {
        let c = check_strip(alpha, b, n)?;
        if c.len() != 1 {
            return Err(pre(alloc::format!("{b}/{alpha} occupies more than one column")));
        }
        cols.push(c[0]);
    }
    for w in betas.windows(2) {
        if w[0] <= w[1] {
            return Err(pre("relations must be strictly decreasing in lex order"));
        }
    }
    for (a, x) in betas.iter().enumerate() {
        for (b, y) in betas.iter().enumerate() {
            if a != b && y.contains(x) {
                return Err(pre(alloc::format!("{x} is contained in {y}")));
            }
        }
    }
    Ok(cols)
}

/// Every irredundant family, grouped by nothing: callers filter by degree.
fn irredundant_families(alpha: &Partition, betas: &[Partition], n: usize) -> Result<Vec<MultiAdmissible>, Error> {
    single_columns(alpha, betas, n)?;
    let per: Vec<Vec<AdmissibleSet>> = betas
        .iter()
        .map(|b| all_admissible(alpha, b, n))
        .collect::<Result<_, _>>()?;
    let r = betas.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << r) {
        let chosen: Vec<usize> = (0..r).filter(|k| mask & (1 << k) != 0).collect();
        let mut idx = alloc::vec![0usize; chosen.len()];
        'odo: loop {
            let mut beta = alpha.clone();
            let mut parts = Vec::new();
            for (t, &k) in chosen.iter().enumerate() {
                let a = &per[k][idx[t]];
                beta = beta.union(&a.beta);
                parts.push((k, a.columns.clone()));
            }
            let fam = MultiAdmissible { parts, beta };
            if fam.beta.skew_columns(alpha).len() == fam.degree() {
                out.push(fam);
            }
            let mut t = 0;
            loop {
                if t == chosen.len() {
                    break 'odo;
                }
                idx[t] += 1;
                if idx[t] < per[chosen[t]].len() {
                    break;
                }
                idx[t] = 0;
                t += 1;
            }
        }
    }
    Ok(out)
}

/// `Ad(alpha; beta^1, ..., beta^r)_i` for single-column relations.
pub fn multi_admissible(alpha: &Partition, betas: &[Partition], i: usize, n: usize) -> Result<Vec<MultiAdmissible>, Error> {
    if i < 1 {
        return Err(pre("homological index must be at least 1"));
    }
    let bar: Vec<MultiAdmissible> = irredundant_families(alpha, betas, n)?
        .into_iter()
        .filter(|f| f.degree() == i)
        .collect();
    let mut keep: Vec<MultiAdmissible> = bar
        .iter()
        .filter(|f| !bar.iter().any(|g| g.beta != f.beta && f.beta.contains(&g.beta)))
        .cloned()
        .collect();
    keep.sort_by(|a, b| b.beta.cmp(&a.beta).then_with(|| a.parts.cmp(&b.parts)));
    Ok(keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::from_slice(v)
    }

    #[test]
    fn critical_boxes_example() {
        let b = critical_boxes(&p(&[4, 4, 3, 2, 1]), &p(&[5, 4, 3, 2, 2, 1]), 8).unwrap();
        let cols: Vec<usize> = b.boxes.iter().map(|x| x.1).collect();
        let rows: Vec<u32> = b.boxes.iter().map(|x| x.0).collect();
        assert_eq!(cols, (2..=8).collect::<Vec<_>>());
        assert_eq!(rows, alloc::vec![5, 5, 4, 3, 2, 1, 1]);

        let b = critical_boxes(&p(&[3, 1]), &p(&[5, 1]), 4).unwrap();
        assert_eq!(b.boxes, alloc::vec![(4, 2), (2, 3), (1, 4)]);

        let b = critical_boxes(&p(&[2, 1, 1]), &p(&[2, 1, 1, 1]), 4).unwrap();
        assert!(b.boxes.is_empty());
        assert!(critical_boxes(&p(&[1, 1]), &p(&[3, 3]), 4).is_err());
    }

    #[test]
    fn admissible_runs_example() {
        let all = all_admissible(&p(&[4, 4, 3, 2, 1]), &p(&[5, 4, 3, 2, 2, 1]), 8).unwrap();
        let sets: BTreeSet<Vec<usize>> = all.into_iter().map(|a| a.columns).collect();
        let gens: [&[usize]; 7] = [&[2], &[2, 3], &[2, 3, 4], &[2, 3, 4, 5], &[6], &[7], &[7, 8]];
        let mut unions = BTreeSet::new();
        for mask in 0u32..(1 << gens.len()) {
            let mut s = BTreeSet::new();
            for (k, g) in gens.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    s.extend(g.iter().copied());
                }
            }
            unions.insert(s.into_iter().collect::<Vec<_>>());
        }
        assert_eq!(sets, unions);
    }

    #[test]
    fn degree_one_is_empty_set() {
        let a = admissible_subsets(&p(&[5, 3, 1]), &p(&[6, 4, 1]), 1, 4).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].columns.is_empty());
        assert_eq!(a[0].beta, p(&[6, 4, 1]));
        assert!(admissible_subsets(&p(&[5, 3, 1]), &p(&[6, 4, 1]), 0, 4).is_err());
    }

    #[test]
    fn admissible_degree_two() {
        let a = admissible_subsets(&p(&[5, 3, 1]), &p(&[6, 4, 1]), 2, 4).unwrap();
        let got: Vec<(Vec<usize>, Partition)> = a.into_iter().map(|x| (x.columns, x.beta)).collect();
        assert_eq!(
            got,
            alloc::vec![(alloc::vec![2], p(&[6, 6, 1])), (alloc::vec![3], p(&[6, 4, 4]))]
        );
    }

    #[test]
    fn multi_admissible_example() {
        let alpha = p(&[4, 3, 1]);
        let betas = [p(&[6, 3, 1]), p(&[4, 3, 3])];
        let betas_of = |i| -> Vec<Partition> {
            multi_admissible(&alpha, &betas, i, 4).unwrap().into_iter().map(|f| f.beta).collect()
        };
        assert_eq!(betas_of(1), alloc::vec![p(&[6, 3, 1]), p(&[4, 3, 3])]);
        assert_eq!(betas_of(2), alloc::vec![p(&[6, 5, 1]), p(&[6, 3, 3]), p(&[4, 3, 3, 2])]);
        assert_eq!(betas_of(3), alloc::vec![p(&[6, 5, 3]), p(&[6, 3, 3, 2])]);
        assert_eq!(betas_of(4), alloc::vec![p(&[6, 5, 3, 2])]);
        assert!(betas_of(5).is_empty());
    }

    #[test]
    fn multi_admissible_candidates_before_minimality() {
        let alpha = p(&[4, 3, 1]);
        let betas = [p(&[6, 3, 1]), p(&[4, 3, 3])];
        let fams = irredundant_families(&alpha, &betas, 4).unwrap();
        let mut deg2: Vec<Partition> = fams.iter().filter(|f| f.degree() == 2).map(|f| f.beta.clone()).collect();
        deg2.sort();
        assert_eq!(deg2, alloc::vec![p(&[4, 3, 3, 2]), p(&[6, 3, 3]), p(&[6, 5, 1])]);
        // beta^1(2,3) union beta^2 collapses onto beta^1(2,3) and is dropped
        let deg4: BTreeSet<Partition> = fams.iter().filter(|f| f.degree() == 4).map(|f| f.beta.clone()).collect();
        assert!(!deg4.contains(&p(&[6, 5, 4])));
        assert!(deg4.contains(&p(&[6, 5, 3, 2])));
    }

    #[test]
    fn single_relation_reduces() {
        let alpha = p(&[4, 3, 1]);
        let beta = p(&[6, 3, 1]);
        for i in 1..5 {
            let m: Vec<Partition> = multi_admissible(&alpha, core::slice::from_ref(&beta), i, 4)
                .unwrap()
                .into_iter()
                .map(|f| f.beta)
                .collect();
            let mut s: Vec<Partition> = admissible_subsets(&alpha, &beta, i, 4)
                .unwrap()
                .into_iter()
                .map(|a| a.beta)
                .collect();
            s.sort_by(|a, b| b.cmp(a));
            assert_eq!(m, s);
        }
    }

    #[test]
    fn rejects_bad_relations() {
        let alpha = p(&[4, 3, 1]);
        assert!(multi_admissible(&alpha, &[p(&[4, 3, 3]), p(&[6, 3, 1])], 1, 4).is_err());
        assert!(multi_admissible(&alpha, &[p(&[6, 4, 1])], 1, 4).is_err());
    }
}
