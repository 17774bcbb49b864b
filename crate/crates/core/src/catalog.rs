//! Exhaustive generation of small posets.
//!
//! Every finite poset is isomorphic to a naturally labeled one (`i < j`
//! implies `index(i) < index(j)`), so enumerating naturally labeled posets
//! reaches every isomorphism class, with repetitions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::poset::Poset;

/// All naturally labeled posets on the elements `1..=n`.
///
/// Each poset on `n` elements arises from one on `n - 1` elements by adding a
/// new maximal-index element on top of an order ideal.
pub fn naturally_labeled(n: usize) -> Vec<Poset> {
    let mut level: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new()];
    for size in 1..n {
        let mut next = Vec::new();
        for covers in &level {
            let p = build(size, covers);
            for ideal in p.ideals() {
                let mut grown = covers.clone();
                for &m in &ideal {
                    if p.upper_covers(m).iter().all(|u| !ideal.contains(u)) {
                        grown.push((m, size));
                    }
                }
                grown.sort_unstable();
                next.push(grown);
            }
        }
        level = next;
    }
    level.iter().map(|covers| build(n, covers)).collect()
}

/// Naturally labeled posets on `0..=n_max` elements.
pub fn naturally_labeled_up_to(n_max: usize) -> Vec<Poset> {
    (0..=n_max).flat_map(naturally_labeled).collect()
}

fn build(n: usize, covers: &[(usize, usize)]) -> Poset {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(String, String)> =
        covers.iter().map(|&(i, j)| (names[i].clone(), names[j].clone())).collect();
    Poset::from_covers(&names, &pairs).expect("generated covers form a Hasse diagram")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_naturally_labeled_sequence() {
        // OEIS A006455: 1, 1, 2, 7, 40, 357, 4824
        let counts: Vec<usize> = (0..=6).map(|n| naturally_labeled(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 7, 40, 357, 4824]);
    }
}
