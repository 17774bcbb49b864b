//! Subset search split across threads by the top bits of the counter.
//!
//! Each prefix covers a contiguous block of counter indices, so the first
//! prefix (in counter order) that yields a witness holds the global minimum
//! and the result matches the sequential search exactly.

use ordlevel_core::levelness::subsets::SubsetSearch;
use ordlevel_core::levelness::{LevelnessCertificate, LevelnessError};
use ordlevel_core::Poset;
use rayon::prelude::*;

/// Number of counter bits fixed per task.
const PREFIX_BITS: usize = 6;

pub fn check_level_subsets_parallel(poset: &Poset, budget: usize) -> Result<LevelnessCertificate, LevelnessError> {
    let bounded = poset.bounded();
    let search = SubsetSearch::new(&bounded, budget)?;
    let bits = PREFIX_BITS.min(search.edge_count());
    let hit = (0..1u64 << bits)
        .into_par_iter()
        .map(|prefix| search.first_in_prefix(bits, prefix))
        .find_map_first(|hit| hit);
    Ok(search.certificate(hit))
}
