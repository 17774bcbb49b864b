//! Lattice polytopes given by difference constraints (alcoved polytopes),
//! lattice simplices, and their Cartesian products, with lattice-point
//! enumeration and bounded levelness checks.

pub mod difference;
pub mod level;
pub mod order;
pub mod product;
pub mod simplex;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

pub use difference::{AlcovedPolytope, Bound};
pub use level::{
    check_level_alcoved, check_level_polytope, check_product_level, codegree, first_idp_failure, lem_min_check,
    BoundedLevel, ProductLevelReport, ProductRule,
};
pub use order::{chain_polytope_lattice_count, chain_polytope_vertices, order_polytope_as_alcoved, order_polytope_vertices};
pub use product::ProductPolytope;
pub use simplex::SimplexPolytope;

/// Largest number of lattice points (or bounding-box cells) enumerated by
/// default.
pub const DEFAULT_POINT_BUDGET: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlcovedError {
    #[error("difference constraints are infeasible")]
    Infeasible,
    #[error("coordinate z_{0} is unbounded")]
    Unbounded(usize),
    #[error("bound on z_{i} - z_{j} refers to a coordinate outside 0..={dim}")]
    InvalidBound { i: usize, j: usize, dim: usize },
    #[error("the polytope has no interior lattice point, so its shrink is empty")]
    EmptyShrink,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{what}: {size} exceeds the budget of {budget}")]
    BudgetExceeded { what: &'static str, size: usize, budget: usize },
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("simplex vertices are not affinely independent")]
    SingularSimplex,
    #[error("simplex needs {expected} vertices of length {dim}")]
    MalformedSimplex { expected: usize, dim: usize },
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("dilation factor {0} is negative")]
    NegativeDilation(i64),
}

/// A finite set of integer points of a fixed dimension, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePointSet {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

impl LatticePointSet {
    pub fn new(dim: usize) -> Self {
        LatticePointSet { dim, points: BTreeSet::new() }
    }

    pub fn from_points(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let points: BTreeSet<Vec<i64>> = points.into_iter().collect();
        assert!(points.iter().all(|p| p.len() == dim), "point of the wrong dimension");
        LatticePointSet { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, p: Vec<i64>) {
        assert_eq!(p.len(), self.dim, "point of the wrong dimension");
        self.points.insert(p);
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<i64>> + '_ {
        self.points.iter()
    }

    /// Points of `self` missing from `other`.
    pub fn difference(&self, other: &LatticePointSet) -> Vec<Vec<i64>> {
        self.points.difference(&other.points).cloned().collect()
    }

    pub fn is_subset(&self, other: &LatticePointSet) -> bool {
        self.points.is_subset(&other.points)
    }
}

/// `{a + b : a ∈ A, b ∈ B}`.
pub fn minkowski_sumset(a: &LatticePointSet, b: &LatticePointSet) -> Result<LatticePointSet, AlcovedError> {
    if a.dim != b.dim {
        return Err(AlcovedError::DimensionMismatch { left: a.dim, right: b.dim });
    }
    let mut out = LatticePointSet::new(a.dim);
    for p in &a.points {
        for q in &b.points {
            out.points.insert(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    Ok(out)
}

/// A bounded lattice polytope `P ⊂ R^d` queried through its dilates `kP`.
pub trait LatticePolytope {
    /// Ambient dimension.
    fn ambient_dim(&self) -> usize;

    /// Dimension of the affine hull.
    fn dim(&self) -> usize;

    fn contains(&self, p: &[i64], k: i64) -> bool;

    /// `p` lies in the topological interior of `kP`.
    fn contains_interior(&self, p: &[i64], k: i64) -> bool;

    /// Coordinatewise bounds of `P` itself.
    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>);

    fn lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        scan_box(self, k, false, budget)
    }

    fn interior_lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        scan_box(self, k, true, budget)
    }
}

/// Scans the bounding box of `kP` cell by cell.
pub fn scan_box<P: LatticePolytope + ?Sized>(
    poly: &P,
    k: i64,
    interior: bool,
    budget: usize,
) -> Result<LatticePointSet, AlcovedError> {
    if k < 0 {
        return Err(AlcovedError::NegativeDilation(k));
    }
    let (lo, hi) = poly.bounding_box();
    let lo: Vec<i64> = lo.iter().map(|v| v * k).collect();
    let hi: Vec<i64> = hi.iter().map(|v| v * k).collect();
    let cells = lo
        .iter()
        .zip(&hi)
        .try_fold(1usize, |acc, (l, h)| acc.checked_mul((h - l + 1) as usize))
        .filter(|&c| c <= budget);
    if cells.is_none() {
        return Err(AlcovedError::BudgetExceeded { what: "bounding-box cells", size: usize::MAX, budget });
    }
    let mut out = LatticePointSet::new(poly.ambient_dim());
    let mut p = lo.clone();
    loop {
        let inside = if interior { poly.contains_interior(&p, k) } else { poly.contains(&p, k) };
        if inside {
            out.insert(p.clone());
        }
        // odometer step, last coordinate fastest
        let mut axis = p.len();
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            if p[axis] < hi[axis] {
                p[axis] += 1;
                for (q, &l) in p[axis + 1..].iter_mut().zip(&lo[axis + 1..]) {
                    *q = l;
                }
                break;
            }
        }
    }
}

/// Any supported polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Polytope {
    Alcoved(AlcovedPolytope),
    Simplex(SimplexPolytope),
    Product(ProductPolytope),
}

impl Polytope {
    pub fn as_alcoved(&self) -> Option<&AlcovedPolytope> {
        match self {
            Polytope::Alcoved(a) => Some(a),
            _ => None,
        }
    }
}

impl LatticePolytope for Polytope {
    fn ambient_dim(&self) -> usize {
        match self {
            Polytope::Alcoved(p) => p.ambient_dim(),
            Polytope::Simplex(p) => p.ambient_dim(),
            Polytope::Product(p) => p.ambient_dim(),
        }
    }

    fn dim(&self) -> usize {
        match self {
            Polytope::Alcoved(p) => LatticePolytope::dim(p),
            Polytope::Simplex(p) => LatticePolytope::dim(p),
            Polytope::Product(p) => LatticePolytope::dim(p),
        }
    }

    fn contains(&self, x: &[i64], k: i64) -> bool {
        match self {
            Polytope::Alcoved(p) => p.contains(x, k),
            Polytope::Simplex(p) => p.contains(x, k),
            Polytope::Product(p) => p.contains(x, k),
        }
    }

    fn contains_interior(&self, x: &[i64], k: i64) -> bool {
        match self {
            Polytope::Alcoved(p) => p.contains_interior(x, k),
            Polytope::Simplex(p) => p.contains_interior(x, k),
            Polytope::Product(p) => p.contains_interior(x, k),
        }
    }

    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        match self {
            Polytope::Alcoved(p) => p.bounding_box(),
            Polytope::Simplex(p) => p.bounding_box(),
            Polytope::Product(p) => p.bounding_box(),
        }
    }

    fn lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        match self {
            Polytope::Alcoved(p) => p.lattice_points(k, budget),
            Polytope::Simplex(p) => p.lattice_points(k, budget),
            Polytope::Product(p) => p.lattice_points(k, budget),
        }
    }

    fn interior_lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        match self {
            Polytope::Alcoved(p) => p.interior_lattice_points(k, budget),
            Polytope::Simplex(p) => p.interior_lattice_points(k, budget),
            Polytope::Product(p) => p.interior_lattice_points(k, budget),
        }
    }
}
