//! Full-dimensional lattice simplices with exact barycentric membership.

use alloc::vec;
use alloc::vec::Vec;

use super::{AlcovedError, LatticePolytope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexPolytope {
    vertices: Vec<Vec<i64>>,
    // barycentric coordinates of (p, k) are adj · (p, k) / det
    adjugate: Vec<Vec<i128>>,
    det: i128,
}

/// Determinant by fraction-free (Bareiss) elimination.
fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else { return 0 };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn minor(m: &[Vec<i128>], row: usize, col: usize) -> Vec<Vec<i128>> {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != row)
        .map(|(_, cells)| cells.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, &v)| v).collect())
        .collect()
}

impl SimplexPolytope {
    /// `d + 1` affinely independent vertices in `Z^d`.
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self, AlcovedError> {
        let n = vertices.len();
        let dim = n.saturating_sub(1);
        if n == 0 || vertices.iter().any(|v| v.len() != dim) {
            return Err(AlcovedError::MalformedSimplex { expected: dim + 1, dim });
        }
        // columns (v_i, 1)
        let m: Vec<Vec<i128>> = (0..n)
            .map(|row| {
                (0..n)
                    .map(|col| if row < dim { i128::from(vertices[col][row]) } else { 1 })
                    .collect()
            })
            .collect();
        let det = determinant(m.clone());
        if det == 0 {
            return Err(AlcovedError::SingularSimplex);
        }
        let adjugate = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = determinant(minor(&m, j, i));
                        if (i + j) % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(SimplexPolytope { vertices, adjugate, det })
    }

    /// The standard simplex `conv{0, e_1, …, e_d}`.
    pub fn standard(dim: usize) -> Self {
        let mut vertices = vec![vec![0; dim]];
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            vertices.push(e);
        }
        SimplexPolytope::new(vertices).expect("standard simplex is nondegenerate")
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Barycentric coordinates of `p` in `kP`, scaled by `|det|`.
    fn scaled_barycentric(&self, p: &[i64], k: i64) -> Vec<i128> {
        let rhs: Vec<i128> = p.iter().map(|&v| i128::from(v)).chain([i128::from(k)]).collect();
        let sign = self.det.signum();
        self.adjugate
            .iter()
            .map(|row| sign * row.iter().zip(&rhs).map(|(a, b)| a * b).sum::<i128>())
            .collect()
    }
}

impl LatticePolytope for SimplexPolytope {
    fn ambient_dim(&self) -> usize {
        self.vertices.len() - 1
    }

    fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    fn contains(&self, p: &[i64], k: i64) -> bool {
        p.len() == self.ambient_dim() && self.scaled_barycentric(p, k).iter().all(|&l| l >= 0)
    }

    fn contains_interior(&self, p: &[i64], k: i64) -> bool {
        p.len() == self.ambient_dim() && self.scaled_barycentric(p, k).iter().all(|&l| l > 0)
    }

    fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let d = self.ambient_dim();
        let lo = (0..d).map(|i| self.vertices.iter().map(|v| v[i]).min().expect("vertices")).collect();
        let hi = (0..d).map(|i| self.vertices.iter().map(|v| v[i]).max().expect("vertices")).collect();
        (lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(m), 4);
        assert_eq!(determinant(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn triangle_dilates() {
        let t = SimplexPolytope::standard(2);
        assert_eq!(t.lattice_points(3, 1000).unwrap().len(), 10);
        let int3 = t.interior_lattice_points(3, 1000).unwrap();
        assert_eq!(int3.iter().cloned().collect::<Vec<_>>(), vec![vec![1, 1]]);
        assert!(t.interior_lattice_points(2, 1000).unwrap().is_empty());
    }

    #[test]
    fn degenerate_vertices_are_rejected() {
        let flat = SimplexPolytope::new(vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert_eq!(flat, Err(AlcovedError::SingularSimplex));
        assert!(matches!(SimplexPolytope::new(vec![vec![0], vec![1, 0]]), Err(AlcovedError::MalformedSimplex { .. })));
    }

    #[test]
    fn tall_tetrahedron_has_an_interior_point_at_two() {
        let p = SimplexPolytope::new(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]]).unwrap();
        assert!(p.interior_lattice_points(1, 1000).unwrap().is_empty());
        assert_eq!(p.interior_lattice_points(2, 1000).unwrap().len(), 1);
    }
}
