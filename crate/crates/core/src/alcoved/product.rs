//! Cartesian products `P_1 × … × P_m`, handled factor by factor.

use alloc::vec::Vec;

use super::{AlcovedError, LatticePointSet, LatticePolytope, Polytope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductPolytope {
    factors: Vec<Polytope>,
}

impl ProductPolytope {
    pub fn new(factors: Vec<Polytope>) -> Result<Self, AlcovedError> {
        if factors.is_empty() {
            return Err(AlcovedError::EmptyProduct);
        }
        Ok(ProductPolytope { factors })
    }

    pub fn factors(&self) -> &[Polytope] {
        &self.factors
    }

    /// Coordinate ranges of the factors.
    fn blocks(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.factors
            .iter()
            .map(|f| {
                let d = f.ambient_dim();
                start += d;
                (start - d, start)
            })
            .collect()
    }

    fn combine(
        &self,
        sets: impl Iterator<Item = Result<LatticePointSet, AlcovedError>>,
        budget: usize,
    ) -> Result<LatticePointSet, AlcovedError> {
        let mut acc: Vec<Vec<i64>> = alloc::vec![Vec::new()];
        for set in sets {
            let set = set?;
            let size = acc.len().saturating_mul(set.len());
            if size > budget {
                return Err(AlcovedError::BudgetExceeded { what: "product lattice points", size, budget });
            }
            acc = acc
                .iter()
                .flat_map(|prefix| set.iter().map(move |p| prefix.iter().chain(p).copied().collect()))
                .collect();
        }
        Ok(LatticePointSet::from_points(self.ambient_dim(), acc))
    }
}

impl LatticePolytope for ProductPolytope {
    fn ambient_dim(&self) -> usize {
        self.factors.iter().map(|f| f.ambient_dim()).sum()
    }

    fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum()
    }

    fn contains(&self, p: &[i64], k: i64) -> bool {
        p.len() == self.ambient_dim()
            && self.factors.iter().zip(self.blocks()).all(|(f, (a, b))| f.contains(&p[a..b], k))
    }

    fn contains_interior(&self, p: &[i64], k: i64) -> bool {
        p.len() == self.ambient_dim()
            && self.factors.iter().zip(self.blocks()).all(|(f, (a, b))| f.contains_interior(&p[a..b], k))
    }

    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for f in &self.factors {
            let (l, h) = f.bounding_box();
            lo.extend(l);
            hi.extend(h);
        }
        (lo, hi)
    }

    fn lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        self.combine(self.factors.iter().map(|f| f.lattice_points(k, budget)), budget)
    }

    fn interior_lattice_points(&self, k: i64, budget: usize) -> Result<LatticePointSet, AlcovedError> {
        self.combine(self.factors.iter().map(|f| f.interior_lattice_points(k, budget)), budget)
    }
}
