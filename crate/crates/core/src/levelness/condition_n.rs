//! Condition-N sequences and the `r_max` test.
//!
//! A sequence `(i_1, j_1), …, (i_t, j_t)` satisfies condition N when
//! `i_1 < j_1 > i_2 < j_2 > … > i_t < j_t` and `i_m ≰ j_n` whenever `m < n`.
//! With `j_0 = +inf` and `i_{t+1} = -inf`,
//!
//! ```text
//! r = Σ_s (rank[i_s, j_{s-1}] - rank[i_s, j_s]) + rank[i_{t+1}, j_t]
//! ```
//!
//! and the poset is level iff the maximum of `r` equals `rank(Π̂)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{LevelnessCertificate, LevelnessError, Method, Verdict, Witness};
use crate::point::ConePoint;
use crate::poset::{BoundedPoset, Poset};

/// Pairs of base element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ConditionNSequence {
    pub pairs: Vec<(usize, usize)>,
}

impl ConditionNSequence {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        ConditionNSequence { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn satisfies(&self, poset: &Poset) -> bool {
        self.pairs.iter().enumerate().all(|(n, &(i, j))| {
            poset.lt_index(i, j)
                && (n == 0 || poset.lt_index(i, self.pairs[n - 1].1))
                && self.pairs[..n].iter().all(|&(im, _)| !poset.leq_index(im, j))
        })
    }
}

/// Calls `visit` on every condition-N sequence, the empty one first, in
/// depth-first order. Fails once more than `budget` sequences are produced.
pub fn enumerate_condition_n(
    poset: &Poset,
    budget: usize,
    mut visit: impl FnMut(&ConditionNSequence),
) -> Result<usize, LevelnessError> {
    let mut seq = ConditionNSequence::default();
    let mut count = 0;
    extend(poset, &mut seq, &mut count, budget, &mut visit)?;
    Ok(count)
}

fn extend(
    poset: &Poset,
    seq: &mut ConditionNSequence,
    count: &mut usize,
    budget: usize,
    visit: &mut impl FnMut(&ConditionNSequence),
) -> Result<(), LevelnessError> {
    *count += 1;
    if *count > budget {
        return Err(LevelnessError::BudgetExceeded { what: "condition-N sequences", size: *count, budget });
    }
    visit(seq);
    let n = poset.len();
    let last_j = seq.pairs.last().map(|&(_, j)| j);
    for i in 0..n {
        if last_j.is_some_and(|jt| !poset.lt_index(i, jt)) {
            continue;
        }
        for j in 0..n {
            if !poset.lt_index(i, j) || seq.pairs.iter().any(|&(im, _)| poset.leq_index(im, j)) {
                continue;
            }
            seq.pairs.push((i, j));
            extend(poset, seq, count, budget, visit)?;
            seq.pairs.pop();
        }
    }
    Ok(())
}

/// All condition-N sequences, for small posets.
pub fn condition_n_sequences(poset: &Poset, budget: usize) -> Result<Vec<ConditionNSequence>, LevelnessError> {
    let mut all = Vec::new();
    enumerate_condition_n(poset, budget, |s| all.push(s.clone()))?;
    Ok(all)
}

fn rank(bounded: &BoundedPoset, u: usize, v: usize) -> i64 {
    i64::from(bounded.rank(u, v).expect("sequence pairs are comparable"))
}

/// Node indices of `i_1, …, i_t, i_{t+1} = -inf` and `j_0 = +inf, j_1, …, j_t`.
fn nodes(bounded: &BoundedPoset, seq: &ConditionNSequence) -> (Vec<usize>, Vec<usize>) {
    let mut is: Vec<usize> = seq.pairs.iter().map(|&(i, _)| bounded.node(i)).collect();
    is.push(bounded.bottom());
    let mut js = vec![bounded.top()];
    js.extend(seq.pairs.iter().map(|&(_, j)| bounded.node(j)));
    (is, js)
}

pub fn r_of_sequence(bounded: &BoundedPoset, seq: &ConditionNSequence) -> i64 {
    let (is, js) = nodes(bounded, seq);
    let t = seq.len();
    let zigzag: i64 = (0..t).map(|s| rank(bounded, is[s], js[s]) - rank(bounded, is[s], js[s + 1])).sum();
    zigzag + rank(bounded, is[t], js[t])
}

/// `x_{i_m} = Σ_{s >= m} (rank[i_{s+1}, j_s] - rank[i_s, j_s])` for
/// `m = 1, …, t`.
pub fn x_of_sequence(bounded: &BoundedPoset, seq: &ConditionNSequence) -> Vec<i64> {
    let (is, js) = nodes(bounded, seq);
    let t = seq.len();
    let mut x = vec![0; t];
    let mut acc = 0;
    for s in (0..t).rev() {
        acc += rank(bounded, is[s + 1], js[s + 1]) - rank(bounded, is[s], js[s + 1]);
        x[s] = acc;
    }
    x
}

/// `y_k = max { rank[i_s, k] + x_{i_s} : k >= i_s }` over `s = 1, …, t + 1`
/// with `x_{-inf} = 0`; the height is `y_{+inf}`.
pub fn y_of_sequence(bounded: &BoundedPoset, seq: &ConditionNSequence) -> ConePoint {
    let (is, _) = nodes(bounded, seq);
    let mut xs = x_of_sequence(bounded, seq);
    xs.push(0);
    let y = |k: usize| {
        is.iter()
            .zip(&xs)
            .filter_map(|(&i, &x)| bounded.rank(i, k).map(|r| i64::from(r) + x))
            .max()
            .expect("-inf lies below every node")
    };
    let coords = (0..bounded.base().len()).map(|e| y(bounded.node(e))).collect();
    ConePoint::new(coords, y(bounded.top()))
}

/// Preference among sequences with equal `r`: smaller `y` coordinate sum,
/// then fewer pairs, then lexicographically smaller pairs.
fn preference(a: &(i64, ConditionNSequence), b: &(i64, ConditionNSequence)) -> Ordering {
    a.0.cmp(&b.0)
        .then(a.1.len().cmp(&b.1.len()))
        .then_with(|| a.1.pairs.cmp(&b.1.pairs))
}

/// Decides levelness by comparing `r_max` with `rank(Π̂)`. A NOT_LEVEL
/// result carries a maximizing sequence and its point `y`.
pub fn check_level_miyazaki(poset: &Poset, budget: usize) -> Result<LevelnessCertificate, LevelnessError> {
    let bounded = poset.bounded();
    let mut best_r = i64::MIN;
    let mut best: Vec<ConditionNSequence> = Vec::new();
    enumerate_condition_n(poset, budget, |seq| {
        let r = r_of_sequence(&bounded, seq);
        match r.cmp(&best_r) {
            Ordering::Greater => {
                best_r = r;
                best.clear();
                best.push(seq.clone());
            }
            Ordering::Equal => best.push(seq.clone()),
            Ordering::Less => {}
        }
    })?;
    let r = bounded.total_rank();
    if best_r == i64::from(r) {
        return Ok(LevelnessCertificate {
            verdict: Verdict::Level,
            method: Method::ConditionN,
            r,
            r_max: Some(best_r),
            witness: None,
        });
    }
    let (_, sequence) = best
        .into_iter()
        .map(|s| (y_of_sequence(&bounded, &s).coordinate_sum(), s))
        .min_by(preference)
        .expect("the empty sequence is always enumerated");
    let point = y_of_sequence(&bounded, &sequence);
    Ok(LevelnessCertificate {
        verdict: Verdict::NotLevel,
        method: Method::ConditionN,
        r,
        r_max: Some(best_r),
        witness: Some(Witness::ConditionN { sequence, point }),
    })
}

/// Recomputes `r` and `y` for a witness sequence and checks that `y` is an
/// interior point at height `r_max` above the codegree.
pub fn validate_witness(
    bounded: &BoundedPoset,
    sequence: &ConditionNSequence,
    point: &ConePoint,
    r_max: Option<i64>,
) -> bool {
    let Some(r_max) = r_max else { return false };
    sequence.satisfies(bounded.base())
        && r_of_sequence(bounded, sequence) == r_max
        && r_max > i64::from(bounded.total_rank())
        && y_of_sequence(bounded, sequence) == *point
        && point.height == r_max
        && point.is_interior(bounded)
}
