mod common;

use common::{arb_poset, count_maps, is_level};
use num_bigint::BigInt;
use ordlevel_core::alcoved::{chain_polytope_lattice_count, order_polytope_as_alcoved, LatticePolytope};
use ordlevel_core::catalog::naturally_labeled_up_to;
use ordlevel_core::ehrhart::{
    ehrhart_polynomial, hstar, hstar_ordinal_sum_check, omega, omega_strict, stanley_level_inequalities, DEFAULT_BUDGET,
};
use ordlevel_core::Poset;
use proptest::prelude::*;

/// Linear extensions by testing every permutation.
fn linear_extensions(p: &Poset) -> u128 {
    fn go(p: &Poset, placed: &mut Vec<usize>, used: &mut Vec<bool>) -> u128 {
        if placed.len() == p.len() {
            let pos: Vec<usize> = {
                let mut pos = vec![0; p.len()];
                for (k, &e) in placed.iter().enumerate() {
                    pos[e] = k;
                }
                pos
            };
            return u128::from(p.covers().iter().all(|&(i, j)| pos[i] < pos[j]));
        }
        let mut total = 0;
        for e in 0..p.len() {
            if !used[e] {
                used[e] = true;
                placed.push(e);
                total += go(p, placed, used);
                placed.pop();
                used[e] = false;
            }
        }
        total
    }
    go(p, &mut Vec::new(), &mut vec![false; p.len()])
}

#[test]
fn map_counts_match_raw_enumeration() {
    for p in naturally_labeled_up_to(4) {
        for m in 0..=4 {
            assert_eq!(omega(&p, m).unwrap(), count_maps(&p, i64::from(m), false) as u128, "{p:?} m={m}");
            assert_eq!(omega_strict(&p, m).unwrap(), count_maps(&p, i64::from(m), true) as u128, "{p:?} m={m}");
        }
    }
}

#[test]
fn codegree_from_hstar_is_the_rank() {
    for p in naturally_labeled_up_to(6) {
        let h = hstar(&p, DEFAULT_BUDGET).unwrap();
        assert_eq!(h.codegree() as u32, p.bounded().total_rank(), "{p:?}");
    }
}

#[test]
fn hstar_sums_to_the_number_of_linear_extensions() {
    for p in naturally_labeled_up_to(5) {
        let h = hstar(&p, DEFAULT_BUDGET).unwrap();
        assert_eq!(h.entries().iter().sum::<u128>(), linear_extensions(&p), "{p:?}");
        assert_eq!(h.entries()[0], 1);
    }
}

#[test]
fn order_and_chain_polytopes_have_equal_ehrhart_counts() {
    for p in naturally_labeled_up_to(4) {
        let poly = ehrhart_polynomial(&p, DEFAULT_BUDGET).unwrap();
        let order = order_polytope_as_alcoved(&p);
        for k in 0..=4i64 {
            let n = order.lattice_points(k, 1 << 20).unwrap().len();
            assert_eq!(BigInt::from(n), poly.value(k), "{p:?} k={k}");
            assert_eq!(chain_polytope_lattice_count(&p, k), n as u64, "{p:?} k={k}");
        }
    }
}

#[test]
fn polynomial_extrapolates_beyond_the_interpolation_points() {
    for p in naturally_labeled_up_to(4) {
        let poly = ehrhart_polynomial(&p, DEFAULT_BUDGET).unwrap();
        for k in 0..=8u32 {
            assert_eq!(poly.value(i64::from(k)), BigInt::from(omega(&p, k + 1).unwrap()));
        }
        // reciprocity: ehr(-k) = (-1)^d · #interior points of kP
        for k in 1..=4u32 {
            let sign = if p.len() % 2 == 0 { 1 } else { -1 };
            let interior = BigInt::from(omega_strict(&p, k - 1).unwrap());
            assert_eq!(poly.value(-i64::from(k)), interior * sign, "{p:?} k={k}");
        }
    }
}

#[test]
fn level_posets_satisfy_stanleys_inequalities() {
    for p in naturally_labeled_up_to(6) {
        if is_level(&p) {
            let h = hstar(&p, DEFAULT_BUDGET).unwrap();
            assert!(stanley_level_inequalities(&h).is_empty(), "{p:?}: {:?}", h.entries());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ordinal_sum_multiplies_hstar(a in arb_poset(0, 4), b in arb_poset(0, 4)) {
        prop_assert!(hstar_ordinal_sum_check(&a, &b, DEFAULT_BUDGET).unwrap());
    }
}
