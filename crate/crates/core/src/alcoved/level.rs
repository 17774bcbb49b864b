//! Bounded levelness checks for lattice polytopes.
//!
//! `P` with codegree `r` is level iff every interior lattice point of `kP`
//! (`k > r`) is an interior point of `rP` plus a lattice point of `(k-r)P`.
//! Outside order polytopes no bound on `k` is available, so verdicts here
//! hold up to a stated `k_max`.

use alloc::vec::Vec;

use super::{minkowski_sumset, AlcovedError, AlcovedPolytope, LatticePointSet, LatticePolytope, Polytope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedLevel {
    /// No failure for any dilate up to and including `k_max`.
    LevelUpTo(i64),
    /// Interior points of `kP` that do not split; sorted.
    NotLevel { k: i64, witnesses: Vec<Vec<i64>> },
}

impl BoundedLevel {
    pub fn is_level(&self) -> bool {
        matches!(self, BoundedLevel::LevelUpTo(_))
    }
}

/// Least `c ≥ 1` with an interior lattice point in `cP`.
pub fn codegree<P: LatticePolytope + ?Sized>(poly: &P, budget: usize) -> Result<i64, AlcovedError> {
    let cap = poly.ambient_dim() as i64 + 1;
    for c in 1..=cap {
        if !poly.interior_lattice_points(c, budget)?.is_empty() {
            return Ok(c);
        }
    }
    Err(AlcovedError::NotFullDimensional)
}

fn missing(lhs: &LatticePointSet, base: &LatticePointSet, rest: &LatticePointSet) -> Result<Vec<Vec<i64>>, AlcovedError> {
    Ok(lhs.difference(&minkowski_sumset(base, rest)?))
}

/// Compares `int(kP)` with `int(rP) + (k-r)P` for `k = r+1, …, k_max`.
pub fn check_level_polytope<P: LatticePolytope + ?Sized>(
    poly: &P,
    k_max: i64,
    budget: usize,
) -> Result<BoundedLevel, AlcovedError> {
    let r = codegree(poly, budget)?;
    let base = poly.interior_lattice_points(r, budget)?;
    for k in r + 1..=k_max {
        let lhs = poly.interior_lattice_points(k, budget)?;
        let witnesses = missing(&lhs, &base, &poly.lattice_points(k - r, budget)?)?;
        if !witnesses.is_empty() {
            return Ok(BoundedLevel::NotLevel { k, witnesses });
        }
    }
    Ok(BoundedLevel::LevelUpTo(k_max))
}

/// Lattice points of `(kP)^(1)`, empty when the shrink is.
fn shrunk_points(poly: &AlcovedPolytope, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
    match poly.dilate(k)?.shrink() {
        Ok(s) => s.lattice_points(1, budget),
        Err(AlcovedError::EmptyShrink) => Ok(LatticePointSet::new(poly.ambient_dim())),
        Err(e) => Err(e),
    }
}

/// Points of `(kP)^(1)` outside `(rP)^(1) + (k-r)P`.
fn shrink_gap(poly: &AlcovedPolytope, r: i64, k: i64, budget: usize) -> Result<Vec<Vec<i64>>, AlcovedError> {
    let lhs = shrunk_points(poly, k, budget)?;
    missing(&lhs, &shrunk_points(poly, r, budget)?, &poly.lattice_points(k - r, budget)?)
}

/// Tests `(kP)^(1) = (rP)^(1) + (k-r)P` through shrinks for
/// `k = r+1, …, k_max`.
pub fn check_level_alcoved(poly: &AlcovedPolytope, k_max: i64, budget: usize) -> Result<BoundedLevel, AlcovedError> {
    let r = codegree(poly, budget)?;
    for k in r + 1..=k_max {
        let witnesses = shrink_gap(poly, r, k, budget)?;
        if !witnesses.is_empty() {
            return Ok(BoundedLevel::NotLevel { k, witnesses });
        }
    }
    Ok(BoundedLevel::LevelUpTo(k_max))
}

/// Given `(kP)^(1) = (r'P)^(1) + (k-r')P`, checks the same equality for
/// every `k'` with `r' ≤ k' < k`. Returns `Ok(false)` if the hypothesis at
/// `k` itself fails.
pub fn lem_min_check(poly: &AlcovedPolytope, r_prime: i64, k: i64, budget: usize) -> Result<bool, AlcovedError> {
    if k < r_prime {
        return Ok(true);
    }
    if !shrink_gap(poly, r_prime, k, budget)?.is_empty() {
        return Ok(false);
    }
    for kp in r_prime..k {
        if !shrink_gap(poly, r_prime, kp, budget)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `h ≤ k_max` with `hP ∩ Z^d ≠ ((h-1)P ∩ Z^d) + (P ∩ Z^d)`, if
/// any. `None` means the integer-decomposition property holds up to `k_max`.
pub fn first_idp_failure<P: LatticePolytope + ?Sized>(
    poly: &P,
    k_max: i64,
    budget: usize,
) -> Result<Option<i64>, AlcovedError> {
    let one = poly.lattice_points(1, budget)?;
    let mut prev = one.clone();
    for h in 2..=k_max {
        let here = poly.lattice_points(h, budget)?;
        let sums = minkowski_sumset(&prev, &one)?;
        if here != sums {
            return Ok(Some(h));
        }
        prev = here;
    }
    Ok(None)
}

/// A sufficient condition for levelness of `P × Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductRule {
    /// Both level, `codeg Q < codeg P`, `Q` has IDP.
    SecondHasIdp,
    /// Both level, `codeg P < codeg Q`, `P` has IDP.
    FirstHasIdp,
    /// Both level with equal codegrees.
    EqualCodegrees,
    /// Both alcoved, factor `level_factor` (0 or 1) level with codegree at
    /// least the other factor's dimension plus one.
    AlcovedHighCodegree { level_factor: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductLevelReport {
    pub codegrees: [i64; 2],
    pub product_codegree: i64,
    pub factor_levels: [BoundedLevel; 2],
    pub idp_failures: [Option<i64>; 2],
    pub rule: Option<ProductRule>,
    pub product: BoundedLevel,
}

impl ProductLevelReport {
    /// A rule that applies must not be contradicted by the direct check.
    pub fn consistent(&self) -> bool {
        (self.rule.is_none() || self.product.is_level())
            && self.product_codegree == self.codegrees[0].max(self.codegrees[1])
    }
}

/// Checks the factors and `P × Q` up to `k_max` and reports which
/// sufficient rule, if any, applies.
pub fn check_product_level(
    p: &Polytope,
    q: &Polytope,
    k_max: i64,
    budget: usize,
) -> Result<ProductLevelReport, AlcovedError> {
    let codegrees = [codegree(p, budget)?, codegree(q, budget)?];
    let factor_levels = [check_level_polytope(p, k_max, budget)?, check_level_polytope(q, k_max, budget)?];
    let idp_failures = [first_idp_failure(p, k_max, budget)?, first_idp_failure(q, k_max, budget)?];
    let both_level = factor_levels.iter().all(BoundedLevel::is_level);
    let idp = |i: usize| idp_failures[i].is_none();

    let rule = if both_level && codegrees[0] == codegrees[1] {
        Some(ProductRule::EqualCodegrees)
    } else if both_level && codegrees[1] < codegrees[0] && idp(1) {
        Some(ProductRule::SecondHasIdp)
    } else if both_level && codegrees[0] < codegrees[1] && idp(0) {
        Some(ProductRule::FirstHasIdp)
    } else if p.as_alcoved().is_some() && q.as_alcoved().is_some() {
        let dims = [p.dim() as i64, q.dim() as i64];
        (0..2)
            .find(|&f| factor_levels[f].is_level() && codegrees[f] > dims[1 - f])
            .map(|level_factor| ProductRule::AlcovedHighCodegree { level_factor })
    } else {
        None
    };

    let product = Polytope::Product(super::ProductPolytope::new(alloc::vec![p.clone(), q.clone()])?);
    Ok(ProductLevelReport {
        codegrees,
        product_codegree: codegree(&product, budget)?,
        factor_levels,
        idp_failures,
        rule,
        product: check_level_polytope(&product, k_max, budget)?,
    })
}
