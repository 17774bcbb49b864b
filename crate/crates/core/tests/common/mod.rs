#![allow(dead_code)]

use ordlevel_core::levelness::{check_level, Budgets, Method, Verdict};
use ordlevel_core::poset::BoundedPoset;
use ordlevel_core::{ConePoint, Poset};
use proptest::prelude::*;

/// Elements 1..=11: chains 1-2-3-4, 5-6-7, 8-9-10-11 with extra covers
/// 5 < 3 and 9 < 7.
pub fn fink() -> Poset {
    let names: Vec<String> = (1..=11).map(|i| i.to_string()).collect();
    let covers = [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (8, 9), (9, 10), (10, 11), (5, 3), (9, 7)];
    let covers: Vec<(String, String)> = covers.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    Poset::from_covers(&names, &covers).unwrap()
}

pub fn idx(p: &Poset, name: &str) -> usize {
    p.index_of(name).unwrap()
}

/// Poset on `1..=n` generated by `i < j` for each set bit, pairs `i < j`
/// taken in lexicographic order.
pub fn poset_from_bits(n: usize, bits: &[bool]) -> Poset {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut rel = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                rel.push((names[i].clone(), names[j].clone()));
            }
            k += 1;
        }
    }
    Poset::from_relations(&names, &rel).unwrap()
}

pub fn arb_poset(min: usize, max: usize) -> impl Strategy<Value = Poset> {
    (min..=max)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(proptest::bool::weighted(0.3), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| poset_from_bits(n, &bits))
}

/// Every map `Π → {lo, …, hi}` in lexicographic order, filtered by `keep`;
/// no use of the poset structure beyond the final test.
pub fn all_maps(n: usize, lo: i64, hi: i64, mut keep: impl FnMut(&[i64]) -> bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if hi < lo && n > 0 {
        return out;
    }
    let mut x = vec![lo; n];
    loop {
        if keep(&x) {
            out.push(x.clone());
        }
        let mut a = n;
        loop {
            if a == 0 {
                return out;
            }
            a -= 1;
            if x[a] < hi {
                x[a] += 1;
                for v in &mut x[a + 1..] {
                    *v = lo;
                }
                break;
            }
        }
    }
}

/// Order-preserving (`strict`: strictly) maps into `{1, …, m}` by raw
/// enumeration of all `m^n` maps.
pub fn count_maps(p: &Poset, m: i64, strict: bool) -> usize {
    all_maps(p.len(), 1, m, |x| {
        p.covers().iter().all(|&(i, j)| if strict { x[i] < x[j] } else { x[i] <= x[j] })
    })
    .len()
}

/// Interior points at height `h` by raw enumeration.
pub fn interior_points_raw(b: &BoundedPoset, h: i64) -> Vec<ConePoint> {
    all_maps(b.base().len(), 1, h - 1, |x| ConePoint::new(x.to_vec(), h).is_interior(b))
        .into_iter()
        .map(|x| ConePoint::new(x, h))
        .collect()
}

/// True iff `x - y` is in the cone for some interior `y` at height `t`,
/// found by listing every candidate `y`.
pub fn splits_raw(b: &BoundedPoset, x: &ConePoint, t: i64) -> bool {
    interior_points_raw(b, t).iter().any(|y| x.minus(y).in_cone(b))
}

pub fn verdicts(p: &Poset) -> [Verdict; 3] {
    Method::ALL.map(|m| check_level(p, m, &Budgets::default()).unwrap().verdict)
}

pub fn is_level(p: &Poset) -> bool {
    let v = verdicts(p);
    assert!(v.iter().all(|&x| x == v[0]), "checkers disagree on {p:?}: {v:?}");
    v[0] == Verdict::Level
}
