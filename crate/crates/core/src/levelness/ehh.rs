//! The height/depth condition `height(j) + depth(i) <= rank(Π̂) + 1` on
//! covers `i ⋖ j` of `Π`. Every level poset satisfies it; the converse fails.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::LevelnessError;
use crate::point::ConePoint;
use crate::poset::{BoundedPoset, Poset};

fn holds(bounded: &BoundedPoset, i: usize, j: usize) -> bool {
    bounded.height(j) + bounded.depth(i) <= bounded.total_rank() + 1
}

/// Covers `(i, j)` of `Π` (base indices) violating the condition.
pub fn check_ehh_condition(poset: &Poset) -> Vec<(usize, usize)> {
    let bounded = poset.bounded();
    poset.covers().iter().copied().filter(|&(i, j)| !holds(&bounded, i, j)).collect()
}

/// An interior point at height `rank(Π̂)` with `x_j = x_i + 1` on the cover
/// `i ⋖ j`: `x_j = height(j)`, `x_i = height(j) - 1`, and every other `k`
/// gets `max(height(k), x_i + rank[i, k])` above `i` and `height(k)`
/// elsewhere.
pub fn witness_sharp_point(poset: &Poset, i: usize, j: usize) -> Result<ConePoint, LevelnessError> {
    let names = || (poset.name(i).to_string(), poset.name(j).to_string());
    if !poset.covers().contains(&(i, j)) {
        let (i, j) = names();
        return Err(LevelnessError::NotACover { i, j });
    }
    let bounded = poset.bounded();
    if !holds(&bounded, i, j) {
        let (i, j) = names();
        return Err(LevelnessError::ConditionViolated { i, j });
    }
    let xi = i64::from(bounded.height(j)) - 1;
    let coords = (0..poset.len())
        .map(|k| {
            let hk = i64::from(bounded.height(k));
            if k == i {
                xi
            } else if poset.lt_index(i, k) {
                let above = bounded.rank(bounded.node(i), bounded.node(k)).expect("i < k");
                hk.max(xi + i64::from(above))
            } else {
                hk
            }
        })
        .collect();
    let x = ConePoint::new(coords, i64::from(bounded.total_rank()));
    assert!(
        x.is_interior(&bounded) && x.is_sharp(&bounded, bounded.node(i), bounded.node(j)),
        "relabeling must give a sharp interior point when the condition holds"
    );
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn chain_cover_is_sharp_at_heights() {
        let c2 = Poset::chain(2);
        assert_eq!(witness_sharp_point(&c2, 0, 1).unwrap(), ConePoint::new(vec![1, 2], 3));
        assert!(check_ehh_condition(&c2).is_empty());
    }

    #[test]
    fn violation_is_reported() {
        // Two 3-chains 1 < 2 < 3 and 4 < 5 < 6 joined by the cover 1 < 6:
        // height(6) + depth(1) = 3 + 3 > rank + 1 = 5.
        let p = Poset::from_covers(
            &["1", "2", "3", "4", "5", "6"],
            &[("1", "2"), ("2", "3"), ("4", "5"), ("5", "6"), ("1", "6")],
        )
        .unwrap();
        assert_eq!(check_ehh_condition(&p), vec![(0, 5)]);
        assert!(matches!(witness_sharp_point(&p, 0, 5), Err(LevelnessError::ConditionViolated { .. })));
        assert!(matches!(witness_sharp_point(&p, 0, 2), Err(LevelnessError::NotACover { .. })));
    }
}
