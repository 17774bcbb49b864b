//! Subset search over weighted Hasse digraphs.
//!
//! `Π` is level iff for every set `S` of covers of `Π̂` with `Γ(S)` free of
//! negative cycles, adding down-edges along all longest chains keeps it free
//! of negative cycles. Subsets are indexed by a binary counter over the
//! sorted cover list (bit `k` selects cover `k`); the witness reported is the
//! one with the smallest index.
//!
//! Both predicates are monotone in `S` (more down-edges only add cycles), so
//! the search fixes bits from the most significant down, tries `0` before
//! `1`, and prunes a branch when the fixed ones already give a negative
//! cycle or when even selecting every free bit cannot make the augmentation
//! negative. This visits candidates in counter order and finds the same
//! witness as plain enumeration.

use alloc::vec::Vec;

use super::{LevelnessCertificate, LevelnessError, Method, Verdict, Witness};
use crate::digraph::{augment_with_longest_chains, bellman_ford, gamma, potentials_to_point, NegativeCycle, ShortestPaths};
use crate::point::ConePoint;
use crate::poset::{BoundedPoset, Poset};

/// A negative-cycle witness at counter index `index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetHit {
    pub index: u64,
    pub prime_edges: Vec<(usize, usize)>,
    pub cycle: NegativeCycle,
}

/// Shared state for searching one poset's subsets.
pub struct SubsetSearch<'a> {
    bounded: &'a BoundedPoset,
    edges: Vec<(usize, usize)>,
}

impl<'a> SubsetSearch<'a> {
    pub fn new(bounded: &'a BoundedPoset, budget: usize) -> Result<Self, LevelnessError> {
        let edges = bounded.covers().to_vec();
        if edges.len() > budget || edges.len() >= 64 {
            return Err(LevelnessError::BudgetExceeded {
                what: "covers of the bounded poset",
                size: edges.len(),
                budget: budget.min(63),
            });
        }
        Ok(SubsetSearch { bounded, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn subset(&self, mask: u64) -> Vec<(usize, usize)> {
        (0..self.edges.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| self.edges[k])
            .collect()
    }

    fn gamma_is_negative(&self, mask: u64) -> bool {
        let g = gamma(self.bounded, &self.subset(mask)).expect("selected edges are covers");
        bellman_ford(g.graph(), self.bounded.bottom()).has_negative_cycle()
    }

    fn augmented_cycle(&self, mask: u64) -> Option<NegativeCycle> {
        let g = gamma(self.bounded, &self.subset(mask)).expect("selected edges are covers");
        let aug = augment_with_longest_chains(&g, self.bounded);
        match bellman_ford(aug.graph(), self.bounded.bottom()) {
            ShortestPaths::NegativeCycle(c) => Some(c),
            ShortestPaths::Potentials(_) => None,
        }
    }

    /// Tests one counter index.
    pub fn test(&self, mask: u64) -> Option<SubsetHit> {
        if self.gamma_is_negative(mask) {
            return None;
        }
        self.augmented_cycle(mask)
            .map(|cycle| SubsetHit { index: mask, prime_edges: self.subset(mask), cycle })
    }

    /// Smallest witness among indices whose top `prefix_len` bits equal
    /// `prefix`.
    pub fn first_in_prefix(&self, prefix_len: usize, prefix: u64) -> Option<SubsetHit> {
        let m = self.edges.len();
        assert!(prefix_len <= m, "prefix longer than the cover list");
        let free = m - prefix_len;
        let fixed = if prefix_len == 0 { 0 } else { prefix << free };
        self.descend(fixed, free)
    }

    /// `fixed` holds the decided bits above position `free`.
    fn descend(&self, fixed: u64, free: usize) -> Option<SubsetHit> {
        if self.gamma_is_negative(fixed) {
            return None;
        }
        let all_free = (1u64 << free) - 1;
        self.augmented_cycle(fixed | all_free)?;
        if free == 0 {
            return self.test(fixed);
        }
        let bit = 1u64 << (free - 1);
        self.descend(fixed, free - 1).or_else(|| self.descend(fixed | bit, free - 1))
    }

    /// Smallest witness over all subsets.
    pub fn first(&self) -> Option<SubsetHit> {
        self.first_in_prefix(0, 0)
    }

    /// Plain enumeration in counter order, without pruning.
    pub fn first_exhaustive(&self) -> Option<SubsetHit> {
        (0..1u64 << self.edges.len()).find_map(|mask| self.test(mask))
    }

    pub fn certificate(&self, hit: Option<SubsetHit>) -> LevelnessCertificate {
        let r = self.bounded.total_rank();
        match hit {
            None => LevelnessCertificate { verdict: Verdict::Level, method: Method::Subsets, r, r_max: None, witness: None },
            Some(hit) => {
                let point = potentials_to_point(self.bounded, &hit.prime_edges)
                    .expect("witness subsets have no negative cycle");
                LevelnessCertificate {
                    verdict: Verdict::NotLevel,
                    method: Method::Subsets,
                    r,
                    r_max: None,
                    witness: Some(Witness::Subsets { prime_edges: hit.prime_edges, cycle: hit.cycle, point }),
                }
            }
        }
    }
}

/// Decides levelness by subset search over at most `budget` covers of `Π̂`.
pub fn check_level_subsets(poset: &Poset, budget: usize) -> Result<LevelnessCertificate, LevelnessError> {
    let bounded = poset.bounded();
    let search = SubsetSearch::new(&bounded, budget)?;
    Ok(search.certificate(search.first()))
}

/// Re-runs both Bellman–Ford passes for a subset witness and checks the
/// reported cycle and point.
pub fn validate_witness(
    bounded: &BoundedPoset,
    prime_edges: &[(usize, usize)],
    cycle: &NegativeCycle,
    point: &ConePoint,
) -> bool {
    let Ok(g) = gamma(bounded, prime_edges) else { return false };
    if bellman_ford(g.graph(), bounded.bottom()).has_negative_cycle() {
        return false;
    }
    let aug = augment_with_longest_chains(&g, bounded);
    if !bellman_ford(aug.graph(), bounded.bottom()).has_negative_cycle() {
        return false;
    }
    cycle.is_valid_in(aug.graph())
        && point.is_interior(bounded)
        && prime_edges.iter().all(|&(u, v)| point.is_sharp(bounded, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_antichains_are_level() {
        for d in 0..5 {
            for p in [Poset::chain(d), Poset::antichain(d)] {
                let cert = check_level_subsets(&p, 22).unwrap();
                assert_eq!(cert.verdict, Verdict::Level);
                assert!(cert.witness.is_none());
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = check_level_subsets(&Poset::antichain(8), 10).unwrap_err();
        assert!(matches!(err, LevelnessError::BudgetExceeded { size: 16, budget: 10, .. }));
    }

    #[test]
    fn pruned_search_matches_enumeration_on_a_nonlevel_poset() {
        // 1 < 3, 2 < 3, 2 < 4, 4 < 5: the longer branch through 4 makes the
        // poset non-graded.
        let p = Poset::from_covers(
            &["1", "2", "3", "4", "5"],
            &[("1", "3"), ("2", "3"), ("2", "4"), ("4", "5")],
        )
        .unwrap();
        let bounded = p.bounded();
        let search = SubsetSearch::new(&bounded, 22).unwrap();
        assert_eq!(search.first(), search.first_exhaustive());
    }
}
