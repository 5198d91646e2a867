use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use pieri_core::admissible::{all_admissible, critical_boxes};
use pieri_core::betti::{bs_decompose_numeric, hk_pure_table};
use pieri_core::classical::{newell_littlewood, wedge_cohomology, wedge_cohomology_bott, Family, GroupType};
use pieri_core::partition::{is_horizontal_strip, is_vertical_strip, partitions_of, strips_over, strips_under};
use pieri_core::resolution::{
    cokernel_character, koszul_tensor, pieri_resolution_single, resolve_terms, trivial_module_relations,
    verify_euler, CokernelSpec,
};
use pieri_core::symfunc::{
    dimension, lr_product, multiply_via_jacobi_trudi, pieri_multiply, PieriKind, SymPoly,
};
use pieri_core::tableau::semistandard;
use pieri_core::Partition;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|v| Partition::from_unsorted(&v))
}

fn all_upto(size: u32, rows: usize) -> Vec<Partition> {
    (0..=size).flat_map(|k| partitions_of(k, rows, k)).collect()
}

fn lr_poly(l: &Partition, m: &Partition, n: usize) -> SymPoly {
    SymPoly::from_terms(n, lr_product(l, m, n).into_iter().map(|(p, c)| (p, BigInt::from(c))))
}

// Hook-content formula: an oracle independent of the Weyl product.
fn hook_content(l: &Partition, n: usize) -> BigUint {
    if l.len() > n {
        return BigUint::from(0u32);
    }
    let dual = l.dual();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..l.len() {
        for j in 0..l.get(i) as usize {
            num *= BigUint::from((n + j - i) as u64);
            let hook = (l.get(i) as usize - j) + (dual.get(j) as usize - i) - 1;
            den *= BigUint::from(hook as u64);
        }
    }
    num / den
}

// Admissible column sets by brute force: every element j must sit at the
// end of a run {c+1, ..., j} inside the set, for some strip column c.
fn admissible_by_filter(alpha: &Partition, beta: &Partition, n: usize) -> BTreeSet<Vec<usize>> {
    let cols: Vec<usize> = beta.skew_columns(alpha).into_iter().map(|j| j + 1).collect();
    let crit: Vec<usize> = (cols[0] + 1..=n).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << crit.len()) {
        let set: BTreeSet<usize> = crit.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &j)| j).collect();
        let ok = set.iter().all(|&j| cols.iter().any(|&c| c < j && (c + 1..=j).all(|x| set.contains(&x))));
        if ok {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

fn vs_pairs(max_size: u32, n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for beta in all_upto(max_size, n) {
        for b in 1..=beta.size() {
            for alpha in strips_under(&beta, b, true) {
                if alpha.len() <= n {
                    out.push((alpha, beta.clone()));
                }
            }
        }
    }
    out
}

#[test]
fn lr_matches_jacobi_trudi_exhaustive() {
    for n in 1..=4 {
        let ps = all_upto(6, n);
        for l in &ps {
            for m in &ps {
                assert_eq!(lr_poly(l, m, n), multiply_via_jacobi_trudi(l, m, n), "{l} * {m}, n = {n}");
            }
        }
    }
}

#[test]
fn dimension_three_ways() {
    for n in 1..=4 {
        for l in all_upto(7, n) {
            let d = dimension(&l, n);
            assert_eq!(d, BigUint::from(semistandard(&l, n).len()));
            assert_eq!(d, hook_content(&l, n));
        }
    }
}

#[test]
fn admissible_runs_match_power_set_filter() {
    for n in 1..=5 {
        for (alpha, beta) in vs_pairs(7, n) {
            let got: BTreeSet<Vec<usize>> = all_admissible(&alpha, &beta, n).unwrap().into_iter().map(|a| a.columns).collect();
            assert_eq!(got, admissible_by_filter(&alpha, &beta, n), "{alpha} {beta} n={n}");
        }
    }
}

#[test]
fn critical_box_rows_follow_alpha() {
    let alpha = Partition::from_slice(&[4, 4, 3, 2, 1]);
    let beta = Partition::from_slice(&[5, 4, 3, 2, 2, 1]);
    let c = critical_boxes(&alpha, &beta, 8).unwrap();
    let rows: Vec<u32> = c.boxes.iter().map(|b| b.0).collect();
    assert_eq!(rows, vec![5, 5, 4, 3, 2, 1, 1]);
}

#[test]
fn single_relation_resolutions_resolve_their_cokernel() {
    for n in 2..=3 {
        for (alpha, beta) in vs_pairs(5, n) {
            let c = pieri_resolution_single(&alpha, &beta, n).unwrap();
            let spec = CokernelSpec::new(alpha.clone(), vec![beta.clone()], n).unwrap();
            check_euler(&c, &spec);
        }
    }
}

fn check_euler(c: &pieri_core::resolution::EquivariantComplex, spec: &CokernelSpec) {
    let bound = 6;
    let rep = verify_euler(c, bound);
    assert!(rep.positive, "{spec:?}");
    let mut want = vec![SymPoly::zero(spec.n); bound as usize + 1];
    for (l, d) in cokernel_character(spec, bound) {
        want[d as usize].add_term(l, BigInt::from(1));
    }
    assert_eq!(rep.quotient, want, "{spec:?}");
    let top = c.terms.iter().map(|t| t.degree).max().unwrap();
    let late = cokernel_character(spec, top + 2).iter().any(|(_, d)| *d + spec.n as u32 > top);
    assert_eq!(rep.finite_length, !late, "{spec:?}");
}

#[test]
fn trivial_module_is_koszul() {
    for n in 1..=3 {
        for alpha in all_upto(4, n) {
            let spec = CokernelSpec::new(alpha.clone(), trivial_module_relations(&alpha, n), n).unwrap();
            let c = resolve_terms(&spec).unwrap();
            assert_eq!(c.terms, koszul_tensor(&alpha, n).terms, "{alpha} n={n}");
        }
    }
}

#[test]
fn wedge_formulas_match_bott() {
    for family in [Family::B, Family::C, Family::D] {
        for n in 1..=4 {
            let Ok(g) = GroupType::new(family, n) else { continue };
            for l in all_upto(6, n) {
                for i in 0..=g.dual_rank() {
                    assert_eq!(
                        wedge_cohomology(g, &l, i).unwrap(),
                        wedge_cohomology_bott(g, &l, i).unwrap(),
                        "{family} n={n} {l} i={i}"
                    );
                }
            }
        }
    }
}

#[test]
fn type_c_has_no_h1_anywhere() {
    for n in 1..=4 {
        let g = GroupType::new(Family::C, n).unwrap();
        for l in all_upto(6, n) {
            for i in 0..=g.dual_rank() {
                let h = wedge_cohomology(g, &l, i).unwrap();
                assert!(h.keys().all(|&d| d == 0), "{l} i={i}");
            }
        }
    }
}

#[test]
fn hk_tables_decompose_to_themselves() {
    for d in [vec![0, 1, 2], vec![0, 2, 3, 5], vec![0, 1, 3, 4, 6]] {
        let t = hk_pure_table(&d).unwrap();
        let dec = bs_decompose_numeric(&t);
        assert!(dec.is_success());
        assert_eq!(dec.steps.len(), 1);
        assert_eq!(dec.reassemble(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(l in partition(5, 6)) {
        prop_assert_eq!(l.dual().dual(), l.clone());
        prop_assert_eq!(l.dual().size(), l.size());
    }

    #[test]
    fn horizontal_strip_is_dual_vertical(a in partition(4, 4), b in partition(4, 5)) {
        prop_assert_eq!(is_horizontal_strip(&b, &a), is_vertical_strip(&b.dual(), &a.dual()));
    }

    #[test]
    fn strips_over_and_under_agree(a in partition(3, 4), k in 0u32..4, vertical: bool) {
        let n = 4;
        for b in strips_over(&a, k, n, vertical) {
            prop_assert_eq!(b.size(), a.size() + k);
            if vertical {
                prop_assert!(is_vertical_strip(&b, &a));
            } else {
                prop_assert!(is_horizontal_strip(&b, &a));
            }
            prop_assert!(strips_under(&b, k, vertical).contains(&a));
        }
    }

    #[test]
    fn union_contains_both(a in partition(4, 5), b in partition(4, 5)) {
        let u = a.union(&b);
        prop_assert!(u.contains(&a) && u.contains(&b));
        prop_assert_eq!(a.intersection(&b).union(&u), u);
    }

    #[test]
    fn pieri_is_product_with_row_or_column(l in partition(4, 4), b in 0u32..4, n in 1usize..5) {
        let row = Partition::from_slice(&[b]);
        let col = Partition::from_slice(&vec![1; b as usize]);
        prop_assert_eq!(pieri_multiply(&l, b, PieriKind::Symmetric, n), lr_poly(&l, &row, n));
        prop_assert_eq!(pieri_multiply(&l, b, PieriKind::Exterior, n), lr_poly(&l, &col, n));
    }

    #[test]
    fn lr_is_commutative_and_dimension_multiplies(l in partition(3, 3), m in partition(3, 3), n in 1usize..4) {
        let lm = lr_poly(&l, &m, n);
        prop_assert_eq!(&lm, &lr_poly(&m, &l, n));
        let lhs: BigInt = lm.dimension();
        prop_assert_eq!(lhs, BigInt::from(dimension(&l, n) * dimension(&m, n)));
    }

    #[test]
    fn newell_littlewood_is_symmetric(l in partition(2, 3), m in partition(2, 3)) {
        let n = l.len() + m.len();
        prop_assert_eq!(newell_littlewood(&l, &m, n).unwrap(), newell_littlewood(&m, &l, n).unwrap());
    }

    #[test]
    fn newell_littlewood_row_is_two_interlacing_steps(l in partition(3, 3), k in 0u32..4) {
        let n = l.len() + 1;
        let row = Partition::from_slice(&[k]);
        let got = newell_littlewood(&l, &row, n).unwrap();
        let mut want = std::collections::BTreeMap::new();
        for j in 0..=k {
            for mid in strips_under(&l, j, true) {
                for nu in strips_over(&mid, k - j, n, true) {
                    *want.entry(nu).or_insert(0u64) += 1;
                }
            }
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn multi_relation_resolutions_resolve_their_cokernel(
        a in partition(3, 3),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4),
    ) {
        let n = 3;
        let mut over: Vec<Partition> = (1..=2).flat_map(|b| strips_over(&a, b, n, true)).collect();
        over.sort();
        let mut rels: Vec<Partition> = picks.iter().map(|i| over[i.index(over.len())].clone()).collect();
        rels.sort_by(|x, y| y.cmp(x));
        rels.dedup();
        let rels: Vec<Partition> = rels
            .iter()
            .filter(|x| !rels.iter().any(|y| y != *x && x.contains(y)))
            .cloned()
            .collect();
        let spec = CokernelSpec::new(a.clone(), rels, n).unwrap();
        let c = resolve_terms(&spec).unwrap();
        check_euler(&c, &spec);
    }

    #[test]
    fn numeric_decomposition_reassembles(ws in prop::collection::vec(1i64..5, 3)) {
        let a = hk_pure_table(&[0, 1, 3, 4]).unwrap();
        let b = hk_pure_table(&[0, 2, 3, 4]).unwrap();
        let c = hk_pure_table(&[0, 2, 3, 5]).unwrap();
        let t = a.scale(&pieri_core::linalg::q(ws[0]))
            .axpy(&pieri_core::linalg::q(ws[1]), &b)
            .axpy(&pieri_core::linalg::q(ws[2]), &c);
        let dec = bs_decompose_numeric(&t);
        prop_assert!(dec.is_success());
        prop_assert!(dec.is_chain());
        prop_assert_eq!(dec.reassemble(), t);
    }
}
