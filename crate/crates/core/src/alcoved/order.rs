//! Order and chain polytopes of a poset.

use alloc::vec;
use alloc::vec::Vec;

use super::{AlcovedPolytope, Bound};
use crate::poset::Poset;

/// `𝒪(Π)`: `0 ≤ z_i ≤ 1` and `z_i ≤ z_j` for every cover `i ⋖ j`, with
/// coordinate `i + 1` for element `i`.
pub fn order_polytope_as_alcoved(poset: &Poset) -> AlcovedPolytope {
    let mut bounds: Vec<Bound> = (0..poset.len())
        .map(|i| Bound { i: i + 1, j: 0, lo: Some(0), hi: Some(1) })
        .collect();
    bounds.extend(
        poset
            .covers()
            .iter()
            .map(|&(i, j)| Bound { i: i + 1, j: j + 1, lo: None, hi: Some(0) }),
    );
    AlcovedPolytope::new(poset.len(), &bounds).expect("order polytopes are nonempty and bounded")
}

fn indicators(poset: &Poset, sets: Vec<Vec<usize>>) -> Vec<Vec<i64>> {
    sets.iter()
        .map(|s| poset.indicator(s).into_iter().map(i64::from).collect())
        .collect()
}

/// Indicator vectors of the filters.
pub fn order_polytope_vertices(poset: &Poset) -> Vec<Vec<i64>> {
    indicators(poset, poset.filters())
}

/// Indicator vectors of the antichains.
pub fn chain_polytope_vertices(poset: &Poset) -> Vec<Vec<i64>> {
    indicators(poset, poset.antichains())
}

/// Maximal chains as element lists, bottom first.
pub fn maximal_chains(poset: &Poset) -> Vec<Vec<usize>> {
    fn walk(poset: &Poset, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().expect("nonempty chain");
        if poset.upper_covers(last).is_empty() {
            out.push(chain.clone());
            return;
        }
        for &u in poset.upper_covers(last) {
            chain.push(u);
            walk(poset, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    for m in poset.minimal_elements() {
        walk(poset, &mut vec![m], &mut out);
    }
    out
}

/// `#(k𝒞(Π) ∩ Z^d)`: nonnegative integer vectors whose sum along every
/// maximal chain is at most `k`.
pub fn chain_polytope_lattice_count(poset: &Poset, k: i64) -> u64 {
    let chains = maximal_chains(poset);
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); poset.len()];
    for (c, chain) in chains.iter().enumerate() {
        for &e in chain {
            member[e].push(c);
        }
    }
    fn count(e: usize, member: &[Vec<usize>], sums: &mut [i64], k: i64) -> u64 {
        if e == member.len() {
            return 1;
        }
        let room = member[e].iter().map(|&c| k - sums[c]).min().unwrap_or(k);
        let mut total = 0;
        for v in 0..=room {
            for &c in &member[e] {
                sums[c] += v;
            }
            total += count(e + 1, member, sums, k);
            for &c in &member[e] {
                sums[c] -= v;
            }
        }
        total
    }
    if k < 0 {
        return 0;
    }
    count(0, &member, &mut vec![0; chains.len()], k)
}
