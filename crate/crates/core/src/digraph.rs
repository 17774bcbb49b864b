//! Weighted Hasse digraphs `Γ(Π, Π′)`, `Γ_b` and `H(Π)`, Bellman–Ford with
//! negative-cycle extraction, and the conversion of shortest-path potentials
//! into interior cone points.
//!
//! Up-edges `(i, j, -1)` run along every cover `i ⋖ j` of `Π̂`; down-edges
//! `(j, i, +1)` run back along a selected subset of covers. The selected
//! subset stands in for the subposet `Π′`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::point::ConePoint;
use crate::poset::BoundedPoset;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DigraphError {
    #[error("({0}, {1}) is not a cover of the bounded poset")]
    NotACover(String, String),
    #[error("point is not an interior point of the cone")]
    NotInterior,
    #[error("graph has a negative cycle of weight {}", .0.total_weight)]
    HasNegativeCycle(NegativeCycle),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

/// A digraph with integer edge weights and at most one edge per ordered
/// node pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    node_count: usize,
    edges: BTreeMap<(usize, usize), i64>,
}

impl WeightedDigraph {
    pub fn new(node_count: usize) -> Self {
        WeightedDigraph { node_count, edges: BTreeMap::new() }
    }

    /// Inserts `from -> to`; a second insertion for the same pair keeps the
    /// lighter weight.
    pub fn add_edge(&mut self, from: usize, to: usize, weight: i64) {
        assert!(from < self.node_count && to < self.node_count, "edge endpoint out of range");
        self.edges
            .entry((from, to))
            .and_modify(|w| *w = (*w).min(weight))
            .or_insert(weight);
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, from: usize, to: usize) -> Option<i64> {
        self.edges.get(&(from, to)).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(from, to), &weight)| Edge { from, to, weight })
    }

    /// Subgraph keeping the edges for which `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(Edge) -> bool) -> WeightedDigraph {
        let mut g = WeightedDigraph::new(self.node_count);
        for e in self.edges() {
            if keep(e) {
                g.add_edge(e.from, e.to, e.weight);
            }
        }
        g
    }
}

/// A directed cycle with negative total weight. `nodes` lists the cycle once,
/// without repeating the first node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCycle {
    pub nodes: Vec<usize>,
    pub total_weight: i64,
}

impl NegativeCycle {
    /// Consecutive node pairs, closing back to the start.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.nodes.len();
        (0..n).map(move |i| (self.nodes[i], self.nodes[(i + 1) % n]))
    }

    /// True iff every step is an edge of `graph` and the weights add up to
    /// the recorded negative total.
    pub fn is_valid_in(&self, graph: &WeightedDigraph) -> bool {
        if self.nodes.is_empty() || self.total_weight >= 0 {
            return false;
        }
        let mut total = 0;
        for (u, v) in self.steps() {
            match graph.weight(u, v) {
                Some(w) => total += w,
                None => return false,
            }
        }
        total == self.total_weight
    }
}

/// Shortest-path distances from a source; `None` marks unreachable nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potentials {
    pub dist: Vec<Option<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShortestPaths {
    Potentials(Potentials),
    NegativeCycle(NegativeCycle),
}

impl ShortestPaths {
    pub fn has_negative_cycle(&self) -> bool {
        matches!(self, ShortestPaths::NegativeCycle(_))
    }
}

/// Bellman–Ford from `source`. Reports a negative cycle reachable from the
/// source if one exists, otherwise exact distances.
pub fn bellman_ford(graph: &WeightedDigraph, source: usize) -> ShortestPaths {
    let n = graph.node_count();
    let mut dist: Vec<Option<i64>> = vec![None; n];
    let mut pred: Vec<usize> = vec![usize::MAX; n];
    dist[source] = Some(0);
    let edges: Vec<Edge> = graph.edges().collect();

    for _ in 1..n.max(1) {
        let mut changed = false;
        for e in &edges {
            if let Some(du) = dist[e.from] {
                if dist[e.to].is_none_or(|dv| du + e.weight < dv) {
                    dist[e.to] = Some(du + e.weight);
                    pred[e.to] = e.from;
                    changed = true;
                }
            }
        }
        if !changed {
            return ShortestPaths::Potentials(Potentials { dist });
        }
    }

    for e in &edges {
        let Some(du) = dist[e.from] else { continue };
        if dist[e.to].is_some_and(|dv| du + e.weight < dv) {
            pred[e.to] = e.from;
            // n predecessor steps land on the cycle
            let mut on_cycle = e.to;
            for _ in 0..n {
                on_cycle = pred[on_cycle];
            }
            let mut nodes = vec![on_cycle];
            let mut at = pred[on_cycle];
            while at != on_cycle {
                nodes.push(at);
                at = pred[at];
            }
            nodes.reverse();
            let mut cycle = NegativeCycle { nodes, total_weight: 0 };
            cycle.total_weight = cycle
                .steps()
                .map(|(u, v)| graph.weight(u, v).expect("predecessor edges exist"))
                .sum();
            debug_assert!(cycle.total_weight < 0);
            return ShortestPaths::NegativeCycle(cycle);
        }
    }
    ShortestPaths::Potentials(Potentials { dist })
}

/// `Γ(Π, Π′)` together with the selected covers that carry down-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma {
    graph: WeightedDigraph,
    prime_edges: Vec<(usize, usize)>,
}

impl Gamma {
    pub fn graph(&self) -> &WeightedDigraph {
        &self.graph
    }

    /// Covers of `Π̂` carrying a down-edge, sorted.
    pub fn prime_edges(&self) -> &[(usize, usize)] {
        &self.prime_edges
    }
}

fn build_gamma(bounded: &BoundedPoset, mut prime_edges: Vec<(usize, usize)>) -> Gamma {
    prime_edges.sort_unstable();
    prime_edges.dedup();
    let mut graph = WeightedDigraph::new(bounded.node_count());
    for &(u, v) in bounded.covers() {
        graph.add_edge(u, v, -1);
    }
    for &(u, v) in &prime_edges {
        graph.add_edge(v, u, 1);
    }
    Gamma { graph, prime_edges }
}

/// Up-edges on every cover of `Π̂`, down-edges exactly on `prime_edges`.
pub fn gamma(bounded: &BoundedPoset, prime_edges: &[(usize, usize)]) -> Result<Gamma, DigraphError> {
    for &(u, v) in prime_edges {
        if u >= bounded.node_count() || v >= bounded.node_count() || !bounded.is_cover(u, v) {
            let name = |x: usize| {
                if x < bounded.node_count() {
                    bounded.node_name(x).to_string()
                } else {
                    x.to_string()
                }
            };
            return Err(DigraphError::NotACover(name(u), name(v)));
        }
    }
    Ok(build_gamma(bounded, prime_edges.to_vec()))
}

/// The Hasse graph `H(Π) = Γ(Π, Π̂)`.
pub fn hasse_graph(bounded: &BoundedPoset) -> Gamma {
    build_gamma(bounded, bounded.covers().to_vec())
}

/// `Γ_b`: down-edges on exactly the covers along which `b` is sharp, reading
/// `b(-inf) = 0` and `b(+inf) = b.height`.
pub fn gamma_b(bounded: &BoundedPoset, b: &ConePoint) -> Result<Gamma, DigraphError> {
    if !b.is_interior(bounded) {
        return Err(DigraphError::NotInterior);
    }
    let sharp = bounded
        .covers()
        .iter()
        .copied()
        .filter(|&(u, v)| b.is_sharp(bounded, u, v))
        .collect();
    Ok(build_gamma(bounded, sharp))
}

/// Adds down-edges along every cover lying on a longest chain of `Π̂`.
pub fn augment_with_longest_chains(g: &Gamma, bounded: &BoundedPoset) -> Gamma {
    let mut prime = g.prime_edges.clone();
    prime.extend(bounded.longest_chain_edges());
    build_gamma(bounded, prime)
}

/// Runs Bellman–Ford on `Γ(Π, Π′)` from `-inf` and negates the distances:
/// `b_j >= b_i + 1` on every cover and `b_j - b_i = 1` on every selected one.
pub fn potentials_to_point(bounded: &BoundedPoset, prime_edges: &[(usize, usize)]) -> Result<ConePoint, DigraphError> {
    let g = gamma(bounded, prime_edges)?;
    match bellman_ford(g.graph(), bounded.bottom()) {
        ShortestPaths::NegativeCycle(c) => Err(DigraphError::HasNegativeCycle(c)),
        ShortestPaths::Potentials(p) => {
            let value = |node: usize| -p.dist[node].expect("up-edges reach every node from -inf");
            let coords = (0..bounded.base().len()).map(|i| value(bounded.node(i))).collect();
            Ok(ConePoint::new(coords, value(bounded.top())))
        }
    }
}
