//! Randomized search for level posets whose condition-N sequences are long.
//!
//! Each trial draws a seeded random poset, decides levelness with both the
//! subset search and `r_max`, and records the longest condition-N sequence.
//! A disagreement between the two deciders is reported, never hidden.

use anyhow::{bail, Result};
use ordlevel_core::levelness::condition_n::enumerate_condition_n;
use ordlevel_core::levelness::{check_level_miyazaki, Budgets, Verdict};
use ordlevel_core::Poset;

use crate::parallel::check_level_subsets_parallel;
use crate::random::{random_poset_in, rng};

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub trials: usize,
    pub level: usize,
    pub not_level: usize,
    /// Level poset with the longest condition-N sequence found, and that
    /// length.
    pub best: Option<(Poset, usize)>,
}

pub fn search(seed: u64, trials: usize, min: usize, max: usize, budgets: &Budgets) -> Result<SearchOutcome> {
    let mut r = rng(seed);
    let mut out = SearchOutcome { trials, level: 0, not_level: 0, best: None };
    for _ in 0..trials {
        let p = random_poset_in(&mut r, min, max);
        let a = check_level_subsets_parallel(&p, budgets.subset_edges)?;
        let b = check_level_miyazaki(&p, budgets.sequences)?;
        if a.verdict != b.verdict {
            bail!("deciders disagree on {p:?}: subsets {} vs condition-N {}", a.verdict, b.verdict);
        }
        if a.verdict == Verdict::NotLevel {
            out.not_level += 1;
            continue;
        }
        out.level += 1;
        let mut longest = 0;
        enumerate_condition_n(&p, budgets.sequences, |s| longest = longest.max(s.len()))?;
        if out.best.as_ref().is_none_or(|(_, l)| longest > *l) {
            out.best = Some((p, longest));
        }
    }
    Ok(out)
}
