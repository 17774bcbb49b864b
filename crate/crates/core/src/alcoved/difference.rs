//! Alcoved polytopes: `lo ≤ z_i - z_j ≤ hi` with `z_0 = 0`.
//!
//! Stored as the tightened upper-bound matrix `u[i][j] ≥ z_i - z_j` over
//! indices `0..=d`. Tightening is Floyd–Warshall on the constraint graph;
//! after it every finite bound is attained, and any partial assignment of
//! coordinates that respects the pairwise bounds extends to a point.

use alloc::vec;
use alloc::vec::Vec;

use super::{AlcovedError, LatticePointSet, LatticePolytope};

/// `lo ≤ z_i - z_j ≤ hi`; index 0 stands for the constant `z_0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub i: usize,
    pub j: usize,
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcovedPolytope {
    dim: usize,
    upper: Vec<Vec<Option<i64>>>,
}

fn add(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

fn tighten(upper: &mut [Vec<Option<i64>>]) {
    let n = upper.len();
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = upper[i][k] else { continue };
            for j in 0..n {
                if let Some(via) = add(Some(ik), upper[k][j]) {
                    if upper[i][j].is_none_or(|cur| via < cur) {
                        upper[i][j] = Some(via);
                    }
                }
            }
        }
    }
}

impl AlcovedPolytope {
    pub fn new(dim: usize, bounds: &[Bound]) -> Result<Self, AlcovedError> {
        let mut upper = vec![vec![None; dim + 1]; dim + 1];
        for (i, row) in upper.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for b in bounds {
            if b.i > dim || b.j > dim || b.i == b.j {
                return Err(AlcovedError::InvalidBound { i: b.i, j: b.j, dim });
            }
            if let Some(hi) = b.hi {
                upper[b.i][b.j] = Some(upper[b.i][b.j].map_or(hi, |c| c.min(hi)));
            }
            if let Some(lo) = b.lo {
                upper[b.j][b.i] = Some(upper[b.j][b.i].map_or(-lo, |c| c.min(-lo)));
            }
        }
        Self::from_upper(upper)
    }

    /// Tightens and validates a raw upper-bound matrix.
    pub fn from_upper(mut upper: Vec<Vec<Option<i64>>>) -> Result<Self, AlcovedError> {
        let dim = upper.len().checked_sub(1).expect("matrix includes z_0");
        tighten(&mut upper);
        if (0..=dim).any(|i| upper[i][i].is_some_and(|v| v < 0)) {
            return Err(AlcovedError::Infeasible);
        }
        for i in 1..=dim {
            if upper[i][0].is_none() || upper[0][i].is_none() {
                return Err(AlcovedError::Unbounded(i));
            }
        }
        Ok(AlcovedPolytope { dim, upper })
    }

    /// `Π [lo_i, hi_i]`.
    pub fn from_box(ranges: &[(i64, i64)]) -> Result<Self, AlcovedError> {
        let bounds: Vec<Bound> = ranges
            .iter()
            .enumerate()
            .map(|(i, &(lo, hi))| Bound { i: i + 1, j: 0, lo: Some(lo), hi: Some(hi) })
            .collect();
        Self::new(ranges.len(), &bounds)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Tight upper bound on `z_i - z_j`.
    pub fn upper(&self, i: usize, j: usize) -> Option<i64> {
        self.upper[i][j]
    }

    /// Canonical bounds, one entry per pair `j < i` with a finite side.
    pub fn bounds(&self) -> Vec<Bound> {
        let mut out = Vec::new();
        for i in 1..=self.dim {
            for j in 0..i {
                let hi = self.upper[i][j];
                let lo = self.upper[j][i].map(|v| -v);
                if hi.is_some() || lo.is_some() {
                    out.push(Bound { i, j, lo, hi });
                }
            }
        }
        out
    }

    /// True iff another tightening pass changes nothing.
    pub fn is_canonical(&self) -> bool {
        let mut again = self.upper.clone();
        tighten(&mut again);
        again == self.upper
    }

    /// `kP`: every bound multiplied by `k ≥ 0`.
    pub fn dilate(&self, k: i64) -> Result<Self, AlcovedError> {
        if k < 0 {
            return Err(AlcovedError::NegativeDilation(k));
        }
        let upper = self
            .upper
            .iter()
            .map(|row| row.iter().map(|v| v.map(|v| v * k)).collect())
            .collect();
        Self::from_upper(upper)
    }

    /// `P^(1)`: each finite off-diagonal bound moved inward by one, then
    /// re-tightened.
    pub fn shrink(&self) -> Result<Self, AlcovedError> {
        let mut upper = self.upper.clone();
        for (i, row) in upper.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                if i != j {
                    *v = v.map(|v| v - 1);
                }
            }
        }
        Self::from_upper(upper).map_err(|e| match e {
            AlcovedError::Infeasible => AlcovedError::EmptyShrink,
            other => other,
        })
    }

    /// The polytope cut out by summed bounds, which contains `P + Q`.
    pub fn bound_sum(&self, other: &AlcovedPolytope) -> Result<Self, AlcovedError> {
        if self.dim != other.dim {
            return Err(AlcovedError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let upper = self
            .upper
            .iter()
            .zip(&other.upper)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| add(x, y)).collect())
            .collect();
        Self::from_upper(upper)
    }

    /// Calls `visit` on each lattice point of `kP` in lexicographic order.
    fn for_each_point(&self, k: i64, budget: usize, visit: &mut impl FnMut(&[i64])) -> Result<usize, AlcovedError> {
        let mut z = vec![0i64; self.dim + 1];
        let mut count = 0;
        self.assign(k, 1, &mut z, &mut count, budget, visit)?;
        Ok(count)
    }

    fn assign(
        &self,
        k: i64,
        i: usize,
        z: &mut [i64],
        count: &mut usize,
        budget: usize,
        visit: &mut impl FnMut(&[i64]),
    ) -> Result<(), AlcovedError> {
        if i > self.dim {
            *count += 1;
            if *count > budget {
                return Err(AlcovedError::BudgetExceeded { what: "lattice points", size: *count, budget });
            }
            visit(&z[1..]);
            return Ok(());
        }
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for j in 0..i {
            if let Some(u) = self.upper[i][j] {
                hi = hi.min(z[j] + k * u);
            }
            if let Some(u) = self.upper[j][i] {
                lo = lo.max(z[j] - k * u);
            }
        }
        for v in lo..=hi {
            z[i] = v;
            self.assign(k, i + 1, z, count, budget, visit)?;
        }
        Ok(())
    }
}

impl LatticePolytope for AlcovedPolytope {
    fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Coordinates forced equal (`z_i - z_j` pinned both ways) collapse into
    /// one class; the dimension is the number of classes besides `z_0`'s.
    fn dim(&self) -> usize {
        let n = self.dim + 1;
        let mut class = (0..n).collect::<Vec<usize>>();
        for i in 0..n {
            for j in 0..i {
                if add(self.upper[i][j], self.upper[j][i]) == Some(0) && class[i] == i {
                    class[i] = class[j];
                }
            }
        }
        (0..n).filter(|&i| class[i] == i).count() - 1
    }

    fn contains(&self, p: &[i64], k: i64) -> bool {
        self.check(p, k, false)
    }

    fn contains_interior(&self, p: &[i64], k: i64) -> bool {
        self.check(p, k, true)
    }

    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let lo = (1..=self.dim).map(|i| -self.upper[0][i].expect("bounded")).collect();
        let hi = (1..=self.dim).map(|i| self.upper[i][0].expect("bounded")).collect();
        (lo, hi)
    }

    fn lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        if k < 0 {
            return Err(AlcovedError::NegativeDilation(k));
        }
        let mut out = LatticePointSet::new(self.dim);
        self.for_each_point(k, budget, &mut |p| out.insert(p.to_vec()))?;
        Ok(out)
    }

    /// Lattice points of `kP` strict on every finite bound.
    fn interior_lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        if k < 0 {
            return Err(AlcovedError::NegativeDilation(k));
        }
        let mut out = LatticePointSet::new(self.dim);
        self.for_each_point(k, budget, &mut |p| {
            if self.check(p, k, true) {
                out.insert(p.to_vec());
            }
        })?;
        Ok(out)
    }
}

impl AlcovedPolytope {
    fn check(&self, p: &[i64], k: i64, strict: bool) -> bool {
        if p.len() != self.dim {
            return false;
        }
        let z = |i: usize| if i == 0 { 0 } else { p[i - 1] };
        (0..=self.dim).all(|i| {
            (0..=self.dim).all(|j| {
                i == j
                    || self.upper[i][j].is_none_or(|u| {
                        let diff = z(i) - z(j);
                        if strict {
                            diff < k * u
                        } else {
                            diff <= k * u
                        }
                    })
            })
        })
    }
}
