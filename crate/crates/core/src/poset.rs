//! Finite posets given by their Hasse diagrams, the bounded extension with
//! synthetic `-inf`/`+inf`, and the order-theoretic helpers built on them.
//!
//! Elements carry opaque string identifiers. Internally every element gets a
//! dense index in declaration order, so all vector-valued outputs (filter
//! indicators, cone points) share one stable coordinate order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Identifier reserved for the synthetic bottom element.
pub const BOTTOM_ID: &str = "-inf";
/// Identifier reserved for the synthetic top element.
pub const TOP_ID: &str = "+inf";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` declared twice")]
    DuplicateElement(String),
    #[error("`{0}` is a reserved identifier")]
    ReservedIdentifier(String),
    #[error("cover relations contain a cycle through `{0}`")]
    CycleDetected(String),
    #[error("cover ({0}, {1}) is implied by a longer chain")]
    RedundantCover(String, String),
    #[error("`{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("identifier `{0}` occurs in both operands")]
    IdentifierCollision(String),
}

/// How [`Poset::ordinal_sum`] and [`Poset::disjoint_union`] treat identifiers
/// that occur in both operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Collisions {
    /// Append `'` to a colliding identifier of the second operand until it
    /// is unique.
    #[default]
    Rename,
    /// Fail with [`PosetError::IdentifierCollision`].
    Reject,
}

/// A finite poset stored as its cover relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    // below[i][j] <=> i <= j
    below: Vec<Vec<bool>>,
    linear: Vec<usize>,
}

impl Poset {
    /// Builds a poset from its Hasse diagram. A pair `(a, b)` means `a ⋖ b`.
    ///
    /// Covers that are implied by a longer chain are rejected rather than
    /// dropped.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        let mut names = Vec::with_capacity(elements.len());
        let mut index = BTreeMap::new();
        for e in elements {
            let e = e.as_ref();
            if e == BOTTOM_ID || e == TOP_ID {
                return Err(PosetError::ReservedIdentifier(e.to_string()));
            }
            if index.insert(e.to_string(), names.len()).is_some() {
                return Err(PosetError::DuplicateElement(e.to_string()));
            }
            names.push(e.to_string());
        }
        let mut pairs = BTreeSet::new();
        for (a, b) in covers {
            let lookup = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| PosetError::UnknownElement(s.to_string()))
            };
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if i == j {
                return Err(PosetError::CycleDetected(names[i].clone()));
            }
            pairs.insert((i, j));
        }
        Self::from_indexed(names, index, pairs.into_iter().collect())
    }

    /// Builds the poset generated by arbitrary relations `a < b`, keeping
    /// only the covers of their transitive closure.
    pub fn from_relations<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self, PosetError> {
        let closure = Self::from_covers_unchecked(elements, relations)?;
        let n = closure.len();
        let covers: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                closure.lt_index(i, j) && !(0..n).any(|k| closure.lt_index(i, k) && closure.lt_index(k, j))
            })
            .collect();
        Self::from_indexed(closure.names, closure.index, covers)
    }

    fn from_covers_unchecked<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self, PosetError> {
        match Self::from_covers(elements, relations) {
            Err(PosetError::RedundantCover(..)) => {}
            other => return other,
        }
        // Redundant pairs only fail the final Hasse check; rebuild without it.
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let index: BTreeMap<String, usize> = names.iter().cloned().zip(0..).collect();
        let pairs: BTreeSet<(usize, usize)> =
            relations.iter().map(|(a, b)| (index[a.as_ref()], index[b.as_ref()])).collect();
        Self::build(names, index, pairs.into_iter().collect(), false)
    }

    fn from_indexed(
        names: Vec<String>,
        index: BTreeMap<String, usize>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self, PosetError> {
        Self::build(names, index, covers, true)
    }

    fn build(
        names: Vec<String>,
        index: BTreeMap<String, usize>,
        covers: Vec<(usize, usize)>,
        hasse_only: bool,
    ) -> Result<Self, PosetError> {
        let n = names.len();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(i, j) in &covers {
            upper[i].push(j);
            lower[j].push(i);
        }

        // Kahn's algorithm, smallest index first so the extension is stable.
        let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut linear = Vec::with_capacity(n);
        while let Some(i) = ready.pop_first() {
            linear.push(i);
            for &j in &upper[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        if linear.len() != n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(PosetError::CycleDetected(names[stuck].clone()));
        }

        let mut below = vec![vec![false; n]; n];
        for &i in linear.iter().rev() {
            below[i][i] = true;
            for &j in &upper[i] {
                for k in 0..n {
                    if below[j][k] {
                        below[i][k] = true;
                    }
                }
            }
        }

        for &(i, j) in covers.iter().filter(|_| hasse_only) {
            if upper[i].iter().any(|&k| k != j && below[k][j]) {
                return Err(PosetError::RedundantCover(names[i].clone(), names[j].clone()));
            }
        }

        Ok(Poset { names, index, covers, upper, lower, below, linear })
    }

    /// The empty poset.
    pub fn empty() -> Self {
        Self::from_indexed(Vec::new(), BTreeMap::new(), Vec::new()).expect("empty poset is valid")
    }

    /// The chain `1 < 2 < … < s`.
    pub fn chain(s: usize) -> Self {
        let names: Vec<String> = (1..=s).map(|i| i.to_string()).collect();
        let covers: Vec<(String, String)> =
            (1..s).map(|i| (i.to_string(), (i + 1).to_string())).collect();
        Self::from_covers(&names, &covers).expect("chains are valid posets")
    }

    /// The antichain on `1, …, s`.
    pub fn antichain(s: usize) -> Self {
        let names: Vec<String> = (1..=s).map(|i| i.to_string()).collect();
        Self::from_covers::<String>(&names, &[]).expect("antichains are valid posets")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PosetError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    /// Cover pairs `(i, j)` with `i ⋖ j`, sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// A linear extension (smallest available index first).
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn leq_index(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    pub fn lt_index(&self, i: usize, j: usize) -> bool {
        i != j && self.below[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.below[i][j] || self.below[j][i]
    }

    pub fn leq(&self, i: &str, j: &str) -> Result<bool, PosetError> {
        Ok(self.leq_index(self.index_of(i)?, self.index_of(j)?))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lower[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper[i].is_empty()).collect()
    }

    /// Adjoins `-inf` and `+inf`.
    pub fn bounded(&self) -> BoundedPoset {
        BoundedPoset::new(self.clone())
    }

    /// All order filters (upward-closed sets), each as a sorted index list.
    pub fn filters(&self) -> Vec<Vec<usize>> {
        let order: Vec<usize> = self.linear.iter().rev().copied().collect();
        let mut member = vec![false; self.len()];
        let mut out = Vec::new();
        self.filters_rec(&order, 0, &mut member, &mut out);
        out
    }

    fn filters_rec(&self, order: &[usize], pos: usize, member: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if pos == order.len() {
            out.push((0..member.len()).filter(|&i| member[i]).collect());
            return;
        }
        let i = order[pos];
        self.filters_rec(order, pos + 1, member, out);
        if self.upper[i].iter().all(|&j| member[j]) {
            member[i] = true;
            self.filters_rec(order, pos + 1, member, out);
            member[i] = false;
        }
    }

    /// All order ideals (downward-closed sets): complements of filters.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        self.filters()
            .into_iter()
            .map(|f| {
                let mut inside = vec![false; self.len()];
                for i in f {
                    inside[i] = true;
                }
                (0..self.len()).filter(|&i| !inside[i]).collect()
            })
            .collect()
    }

    /// All antichains, each as a sorted index list.
    pub fn antichains(&self) -> Vec<Vec<usize>> {
        let mut current = Vec::new();
        let mut out = Vec::new();
        self.antichains_rec(0, &mut current, &mut out);
        out
    }

    fn antichains_rec(&self, next: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if next == self.len() {
            out.push(current.clone());
            return;
        }
        self.antichains_rec(next + 1, current, out);
        if current.iter().all(|&k| !self.comparable(k, next)) {
            current.push(next);
            self.antichains_rec(next + 1, current, out);
            current.pop();
        }
    }

    /// 0/1 indicator vector of `set` in element order.
    pub fn indicator(&self, set: &[usize]) -> Vec<u8> {
        let mut v = vec![0; self.len()];
        for &i in set {
            v[i] = 1;
        }
        v
    }

    /// The ordinal sum `self ◁ other`: every element of `self` lies below
    /// every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset, collisions: Collisions) -> Result<Poset, PosetError> {
        let mut covers = Vec::new();
        for &i in &self.maximal_elements() {
            for &j in &other.minimal_elements() {
                covers.push((i, self.len() + j));
            }
        }
        self.combine(other, collisions, covers)
    }

    /// Places `self` and `other` side by side with no relations between them.
    pub fn disjoint_union(&self, other: &Poset, collisions: Collisions) -> Result<Poset, PosetError> {
        self.combine(other, collisions, Vec::new())
    }

    fn combine(
        &self,
        other: &Poset,
        collisions: Collisions,
        cross: Vec<(usize, usize)>,
    ) -> Result<Poset, PosetError> {
        let mut names = self.names.clone();
        let mut index = self.index.clone();
        for name in &other.names {
            let mut fresh = name.clone();
            while index.contains_key(&fresh) || (fresh != *name && other.index.contains_key(&fresh)) {
                if collisions == Collisions::Reject {
                    return Err(PosetError::IdentifierCollision(name.clone()));
                }
                fresh.push('\'');
            }
            index.insert(fresh.clone(), names.len());
            names.push(fresh);
        }
        let shift = self.len();
        let mut covers: Vec<(usize, usize)> = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(i, j)| (i + shift, j + shift)));
        covers.extend(cross);
        covers.sort_unstable();
        Self::from_indexed(names, index, covers)
    }

    /// Restriction to `keep` (sorted indices), which must be a union of
    /// connected components or otherwise convex so that covers stay covers.
    fn restrict(&self, keep: &[usize]) -> Poset {
        let mut position = vec![usize::MAX; self.len()];
        for (p, &i) in keep.iter().enumerate() {
            position[i] = p;
        }
        let names: Vec<String> = keep.iter().map(|&i| self.names[i].clone()).collect();
        let index = names.iter().enumerate().map(|(p, s)| (s.clone(), p)).collect();
        let covers = self
            .covers
            .iter()
            .filter(|&&(i, j)| position[i] != usize::MAX && position[j] != usize::MAX)
            .map(|&(i, j)| (position[i], position[j]))
            .collect();
        Self::from_indexed(names, index, covers).expect("restriction of a valid poset")
    }

    /// Connected components of the comparability graph, ordered by their
    /// smallest element index.
    pub fn connected_components(&self) -> Vec<Poset> {
        let n = self.len();
        let mut component = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![start];
            component[start] = id;
            let mut members = Vec::new();
            while let Some(i) = stack.pop() {
                members.push(i);
                for &j in self.upper[i].iter().chain(self.lower[i].iter()) {
                    if component[j] == usize::MAX {
                        component[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        groups.iter().map(|g| self.restrict(g)).collect()
    }
}

/// A strictly increasing sequence of nodes; `length` counts edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub nodes: Vec<usize>,
}

impl Chain {
    pub fn length(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }
}

/// The poset `Π̂ = Π ∪ {-inf, +inf}`.
///
/// Nodes are numbered `0` for `-inf`, `i + 1` for base element `i`, and
/// `len + 1` for `+inf`. All pairwise longest-chain lengths are precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedPoset {
    base: Poset,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    // rank[u][v] = Some(length of a longest chain u..v) iff u <= v
    rank: Vec<Vec<Option<u32>>>,
}

impl BoundedPoset {
    pub fn new(base: Poset) -> Self {
        let n = base.len();
        let top = n + 1;
        let mut covers: Vec<(usize, usize)> = base.covers.iter().map(|&(i, j)| (i + 1, j + 1)).collect();
        covers.extend(base.minimal_elements().into_iter().map(|m| (0, m + 1)));
        covers.extend(base.maximal_elements().into_iter().map(|m| (m + 1, top)));
        if n == 0 {
            covers.push((0, top));
        }
        covers.sort_unstable();

        let mut upper = vec![Vec::new(); n + 2];
        for &(u, v) in &covers {
            upper[u].push(v);
        }
        let mut order = Vec::with_capacity(n + 2);
        order.push(0);
        order.extend(base.linear.iter().map(|&i| i + 1));
        order.push(top);

        let mut rank = vec![vec![None; n + 2]; n + 2];
        for (pos, &source) in order.iter().enumerate() {
            let row = &mut rank[source];
            row[source] = Some(0u32);
            for &u in &order[pos..] {
                if let Some(ru) = row[u] {
                    for &v in &upper[u] {
                        if row[v].is_none_or(|rv| rv < ru + 1) {
                            row[v] = Some(ru + 1);
                        }
                    }
                }
            }
        }
        BoundedPoset { base, covers, upper, rank }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn node_count(&self) -> usize {
        self.base.len() + 2
    }

    pub const fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.base.len() + 1
    }

    /// Node of base element `i`.
    pub fn node(&self, i: usize) -> usize {
        i + 1
    }

    /// Base element of `node`, or `None` for the synthetic bounds.
    pub fn element(&self, node: usize) -> Option<usize> {
        (node != 0 && node != self.top()).then(|| node - 1)
    }

    pub fn node_name(&self, node: usize) -> &str {
        if node == 0 {
            BOTTOM_ID
        } else if node == self.top() {
            TOP_ID
        } else {
            self.base.name(node - 1)
        }
    }

    pub fn node_of(&self, name: &str) -> Result<usize, PosetError> {
        match name {
            BOTTOM_ID => Ok(0),
            TOP_ID => Ok(self.top()),
            _ => self.base.index_of(name).map(|i| i + 1),
        }
    }

    /// Cover pairs of `Π̂`, sorted by node index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, node: usize) -> &[usize] {
        &self.upper[node]
    }

    pub fn is_cover(&self, u: usize, v: usize) -> bool {
        self.covers.binary_search(&(u, v)).is_ok()
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.rank[u][v].is_some()
    }

    /// Length of a longest chain from `u` up to `v`, or `None` unless `u <= v`.
    pub fn rank(&self, u: usize, v: usize) -> Option<u32> {
        self.rank[u][v]
    }

    /// [`BoundedPoset::rank`] addressed by identifiers (including `-inf`/`+inf`).
    pub fn rank_interval(&self, i: &str, j: &str) -> Result<u32, PosetError> {
        let (u, v) = (self.node_of(i)?, self.node_of(j)?);
        self.rank(u, v)
            .ok_or_else(|| PosetError::NotComparable(i.to_string(), j.to_string()))
    }

    /// `rank(-inf, +inf)`, the codegree of the order polytope.
    pub fn total_rank(&self) -> u32 {
        self.rank[0][self.top()].expect("-inf is below +inf")
    }

    /// Longest chain from `-inf` to base element `i`.
    pub fn height(&self, i: usize) -> u32 {
        self.rank[0][i + 1].expect("-inf is below every element")
    }

    /// Longest chain from base element `i` to `+inf`.
    pub fn depth(&self, i: usize) -> u32 {
        self.rank[i + 1][self.top()].expect("+inf is above every element")
    }

    pub fn height_of(&self, name: &str) -> Result<u32, PosetError> {
        Ok(self.height(self.base.index_of(name)?))
    }

    pub fn depth_of(&self, name: &str) -> Result<u32, PosetError> {
        Ok(self.depth(self.base.index_of(name)?))
    }

    /// Covers of `Π̂` lying on at least one maximum-length chain.
    pub fn longest_chain_edges(&self) -> Vec<(usize, usize)> {
        let total = self.total_rank();
        let top = self.top();
        self.covers
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let below = self.rank[0][u].expect("reachable from -inf");
                let above = self.rank[v][top].expect("reaches +inf");
                below + 1 + above == total
            })
            .collect()
    }

    /// One maximum-length chain from `-inf` to `+inf`.
    pub fn longest_chain(&self) -> Chain {
        let top = self.top();
        let mut nodes = vec![0];
        let mut at = 0;
        while at != top {
            let here = self.rank[0][at].expect("on a chain from -inf");
            at = self.upper[at]
                .iter()
                .copied()
                .find(|&v| {
                    self.rank[0][v] == Some(here + 1)
                        && self.rank[v][top].map(|r| r + here + 1) == Some(self.total_rank())
                })
                .expect("a longest chain continues");
            nodes.push(at);
        }
        Chain { nodes }
    }
}
