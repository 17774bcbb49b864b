//! Lattice points of `cone(𝒪(Π))`.

use alloc::vec::Vec;

use crate::poset::BoundedPoset;

/// A lattice point `(x, h)` of the cone over the order polytope: one
/// coordinate per base element (in element order) plus the height `h`.
///
/// Read on `Π̂`, the point is the labeling with `x(-inf) = 0` and
/// `x(+inf) = h`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConePoint {
    pub coords: Vec<i64>,
    pub height: i64,
}

impl ConePoint {
    pub fn new(coords: Vec<i64>, height: i64) -> Self {
        ConePoint { coords, height }
    }

    /// Value at a node of `Π̂`.
    pub fn at(&self, bounded: &BoundedPoset, node: usize) -> i64 {
        if node == bounded.bottom() {
            0
        } else if node == bounded.top() {
            self.height
        } else {
            self.coords[node - 1]
        }
    }

    /// Weakly increasing along every cover of `Π̂`: a point of `cone(𝒪(Π))`.
    pub fn in_cone(&self, bounded: &BoundedPoset) -> bool {
        self.coords.len() == bounded.base().len()
            && self.height >= 0
            && bounded
                .covers()
                .iter()
                .all(|&(u, v)| self.at(bounded, u) <= self.at(bounded, v))
    }

    /// Strictly increasing along every cover of `Π̂`: an interior point,
    /// equivalently a strictly order-preserving map into `{1, …, h - 1}`.
    pub fn is_interior(&self, bounded: &BoundedPoset) -> bool {
        self.coords.len() == bounded.base().len()
            && bounded
                .covers()
                .iter()
                .all(|&(u, v)| self.at(bounded, u) < self.at(bounded, v))
    }

    /// `x_j - x_i == 1` across the cover `(u, v)` of `Π̂`.
    pub fn is_sharp(&self, bounded: &BoundedPoset, u: usize, v: usize) -> bool {
        self.at(bounded, v) - self.at(bounded, u) == 1
    }

    pub fn minus(&self, other: &ConePoint) -> ConePoint {
        ConePoint {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
            height: self.height - other.height,
        }
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.coords.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use alloc::vec;

    #[test]
    fn interior_means_strict_labels() {
        let c2 = Poset::chain(2).bounded();
        assert!(ConePoint::new(vec![1, 2], 3).is_interior(&c2));
        assert!(!ConePoint::new(vec![1, 2], 2).is_interior(&c2));
        assert!(ConePoint::new(vec![1, 2], 2).in_cone(&c2));
        assert!(!ConePoint::new(vec![2, 1], 3).in_cone(&c2));
        assert!(ConePoint::new(vec![1, 3], 4).is_sharp(&c2, 0, 1));
        assert!(!ConePoint::new(vec![1, 3], 4).is_sharp(&c2, 1, 2));
    }
}
