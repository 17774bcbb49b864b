//! Seeded random posets and cone points.

use ordlevel_core::{ConePoint, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Poset on `1..=n` generated by relations `i < j` (for `i < j` as
/// integers), each present with probability `density`.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                relations.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Poset::from_relations(&names, &relations).expect("relations follow the labeling")
}

/// Size uniform in `min..=max`, density uniform in `[0.15, 0.6]`.
pub fn random_poset_in(rng: &mut impl Rng, min: usize, max: usize) -> Poset {
    let n = rng.random_range(min..=max);
    let density = rng.random_range(0.15..=0.6);
    random_poset(rng, n, density)
}

/// An interior point placing every element `1..=3` above its highest lower
/// cover.
pub fn random_interior_point(rng: &mut impl Rng, p: &Poset) -> ConePoint {
    let mut x = vec![0i64; p.len()];
    for &e in p.linear_extension() {
        let base = p.lower_covers(e).iter().map(|&u| x[u]).max().unwrap_or(0);
        x[e] = base + rng.random_range(1..=3);
    }
    let top = p.maximal_elements().iter().map(|&m| x[m]).max().unwrap_or(0);
    ConePoint::new(x, top + rng.random_range(1..=3))
}
