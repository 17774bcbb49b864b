//! Brute-force levelness through the canonical module.
//!
//! Interior lattice points of the cone at height `h` are the strictly
//! order-preserving maps `Π → {1, …, h - 1}`. The poset is level iff each
//! such point above the codegree `r` splits as `y + z` with `y` interior at
//! height `r` and `z` in the cone.
//!
//! Only maps onto all of `{1, …, h - 1}` need checking, for `h <= |Π| + 1`:
//! if value `v` is unused, subtracting the indicator of `{i : x_i > v}` gives
//! an interior point one level lower, and a split of that point lifts.

use alloc::vec;
use alloc::vec::Vec;

use super::{LevelnessCertificate, LevelnessError, Method, Verdict, Witness};
use crate::point::ConePoint;
use crate::poset::{BoundedPoset, Poset};

/// Calls `visit` on every interior point at height `h`, or only on those
/// whose coordinates cover `{1, …, h - 1}` when `onto` is set. Points come
/// in lexicographic coordinate order when the elements are naturally
/// labeled.
pub fn for_each_interior_point(bounded: &BoundedPoset, h: i64, onto: bool, mut visit: impl FnMut(&ConePoint)) {
    let poset = bounded.base();
    let n = poset.len();
    if h < i64::from(bounded.total_rank()) {
        return;
    }
    if n == 0 {
        if !onto || h == 1 {
            visit(&ConePoint::new(Vec::new(), h));
        }
        return;
    }
    let mut x = ConePoint::new(vec![0; n], h);
    let mut used = vec![0u32; h.max(1) as usize];
    fill(bounded, 0, onto, &mut x, &mut used, &mut visit);
}

fn fill(
    bounded: &BoundedPoset,
    pos: usize,
    onto: bool,
    x: &mut ConePoint,
    used: &mut [u32],
    visit: &mut impl FnMut(&ConePoint),
) {
    let poset = bounded.base();
    let order = poset.linear_extension();
    let h = x.height;
    if pos == order.len() {
        if !onto || used[1..].iter().all(|&c| c > 0) {
            visit(x);
        }
        return;
    }
    if onto {
        let missing = used[1..].iter().filter(|&&c| c == 0).count();
        if missing > order.len() - pos {
            return;
        }
    }
    let e = order[pos];
    let lo = poset.lower_covers(e).iter().map(|&u| x.coords[u] + 1).max().unwrap_or(1);
    let hi = h - i64::from(bounded.depth(e));
    for v in lo..=hi {
        x.coords[e] = v;
        used[v as usize] += 1;
        fill(bounded, pos + 1, onto, x, used, visit);
        used[v as usize] -= 1;
    }
}

/// All interior points at height `h`.
pub fn interior_points(bounded: &BoundedPoset, h: i64) -> Vec<ConePoint> {
    let mut out = Vec::new();
    for_each_interior_point(bounded, h, false, |p| out.push(p.clone()));
    out
}

/// An interior point `y` at height `target` with `x - y` in the cone, if any.
pub fn decompose(bounded: &BoundedPoset, x: &ConePoint, target: i64) -> Option<ConePoint> {
    let gap = x.height - target;
    if gap < 0 || !x.is_interior(bounded) {
        return None;
    }
    let n = bounded.base().len();
    let mut y = ConePoint::new(vec![0; n], target);
    if n == 0 {
        return (target >= 1).then_some(y);
    }
    split(bounded, x, gap, 0, &mut y).then_some(y)
}

fn split(bounded: &BoundedPoset, x: &ConePoint, gap: i64, pos: usize, y: &mut ConePoint) -> bool {
    let poset = bounded.base();
    let order = poset.linear_extension();
    if pos == order.len() {
        return true;
    }
    let e = order[pos];
    let below = poset.lower_covers(e);
    // y strictly increasing, z = x - y weakly increasing and within [0, gap]
    let lo = below
        .iter()
        .map(|&u| y.coords[u] + 1)
        .max()
        .unwrap_or(1)
        .max(x.coords[e] - gap);
    let hi = below
        .iter()
        .map(|&u| x.coords[e] - (x.coords[u] - y.coords[u]))
        .min()
        .unwrap_or(x.coords[e])
        .min(x.coords[e])
        .min(y.height - i64::from(bounded.depth(e)));
    for v in lo..=hi {
        y.coords[e] = v;
        if split(bounded, x, gap, pos + 1, y) {
            return true;
        }
    }
    false
}

/// True iff `x` is interior and no interior point of smaller height splits
/// off it.
pub fn is_minimal(bounded: &BoundedPoset, x: &ConePoint) -> bool {
    x.is_interior(bounded)
        && (i64::from(bounded.total_rank())..x.height).all(|t| decompose(bounded, x, t).is_none())
}

/// Decides levelness by exhaustive decomposition for posets of at most
/// `budget` elements. A NOT_LEVEL result reports every failing point at the
/// lowest failing height; the canonical witness has the smallest coordinate
/// sum, ties broken lexicographically.
pub fn check_level_bruteforce(poset: &Poset, budget: usize) -> Result<LevelnessCertificate, LevelnessError> {
    if poset.len() > budget {
        return Err(LevelnessError::BudgetExceeded { what: "poset elements", size: poset.len(), budget });
    }
    let bounded = poset.bounded();
    let r = bounded.total_rank();
    let d = poset.len() as i64;
    for h in i64::from(r) + 1..=d + 1 {
        let mut failing = Vec::new();
        for_each_interior_point(&bounded, h, true, |x| {
            if decompose(&bounded, x, i64::from(r)).is_none() {
                failing.push(x.clone());
            }
        });
        if !failing.is_empty() {
            failing.sort_by(|a, b| a.coordinate_sum().cmp(&b.coordinate_sum()).then_with(|| a.cmp(b)));
            let point = failing[0].clone();
            return Ok(LevelnessCertificate {
                verdict: Verdict::NotLevel,
                method: Method::BruteForce,
                r,
                r_max: None,
                witness: Some(Witness::BruteForce { point, all_at_height: failing }),
            });
        }
    }
    Ok(LevelnessCertificate { verdict: Verdict::Level, method: Method::BruteForce, r, r_max: None, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_of_two_splits_at_height_three() {
        let b = Poset::antichain(2).bounded();
        assert_eq!(interior_points(&b, 2), vec![ConePoint::new(vec![1, 1], 2)]);
        let three = interior_points(&b, 3);
        assert_eq!(three.len(), 4);
        for x in &three {
            assert_eq!(decompose(&b, x, 2), Some(ConePoint::new(vec![1, 1], 2)));
        }
        assert_eq!(check_level_bruteforce(&Poset::antichain(2), 12).unwrap().verdict, Verdict::Level);
    }

    #[test]
    fn chain_has_a_single_generator() {
        let b = Poset::chain(3).bounded();
        assert_eq!(interior_points(&b, 4), vec![ConePoint::new(vec![1, 2, 3], 4)]);
        assert!(is_minimal(&b, &ConePoint::new(vec![1, 2, 3], 4)));
        assert!(!is_minimal(&b, &ConePoint::new(vec![1, 2, 4], 5)));
        assert_eq!(check_level_bruteforce(&Poset::chain(3), 12).unwrap().verdict, Verdict::Level);
    }

    #[test]
    fn onto_filter_keeps_surjective_maps() {
        let b = Poset::antichain(2).bounded();
        let mut onto = Vec::new();
        for_each_interior_point(&b, 3, true, |p| onto.push(p.coords.clone()));
        assert_eq!(onto, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn empty_poset_is_level() {
        let cert = check_level_bruteforce(&Poset::empty(), 12).unwrap();
        assert_eq!((cert.verdict, cert.r), (Verdict::Level, 1));
    }
}
