//! Levelness deciders for order polytopes.
//!
//! * [`subsets`]: searches subsets `Π′` of covers of `Π̂` for which `Γ(Π′)`
//!   has no negative cycle but its longest-chain augmentation does.
//! * [`condition_n`]: maximizes `r` over condition-N zigzag sequences and
//!   compares `r_max` with the codegree.
//! * [`bruteforce`]: enumerates interior lattice points of the cone and tries
//!   to split each off a point at codegree height.
//!
//! [`ehh`] holds the height/depth necessary condition and its sharp points.

pub mod bruteforce;
pub mod condition_n;
pub mod ehh;
pub mod subsets;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::NegativeCycle;
use crate::point::ConePoint;
use crate::poset::Poset;

pub use bruteforce::check_level_bruteforce;
pub use condition_n::{check_level_miyazaki, ConditionNSequence};
pub use ehh::{check_ehh_condition, witness_sharp_point};
pub use subsets::check_level_subsets;

/// Largest number of covers of `Π̂` the subset search accepts by default.
pub const DEFAULT_SUBSET_BUDGET: usize = 22;
/// Largest number of condition-N sequences enumerated by default.
pub const DEFAULT_SEQUENCE_BUDGET: usize = 1 << 24;
/// Largest poset the brute-force checker accepts by default.
pub const DEFAULT_BRUTE_BUDGET: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub subset_edges: usize,
    pub sequences: usize,
    pub brute_elements: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            subset_edges: DEFAULT_SUBSET_BUDGET,
            sequences: DEFAULT_SEQUENCE_BUDGET,
            brute_elements: DEFAULT_BRUTE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LevelnessError {
    #[error("{what}: {size} exceeds the budget of {budget}")]
    BudgetExceeded { what: &'static str, size: usize, budget: usize },
    #[error("cover ({i}, {j}) violates height(j) + depth(i) <= rank + 1")]
    ConditionViolated { i: String, j: String },
    #[error("({i}, {j}) is not a cover relation of the poset")]
    NotACover { i: String, j: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Level,
    NotLevel,
}

impl Verdict {
    pub fn is_level(self) -> bool {
        self == Verdict::Level
    }

    pub fn from_level(level: bool) -> Self {
        if level {
            Verdict::Level
        } else {
            Verdict::NotLevel
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Level => "LEVEL",
            Verdict::NotLevel => "NOT_LEVEL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Subsets,
    ConditionN,
    BruteForce,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Subsets, Method::ConditionN, Method::BruteForce];

    pub fn name(self) -> &'static str {
        match self {
            Method::Subsets => "subsets",
            Method::ConditionN => "condition_n",
            Method::BruteForce => "brute_force",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Covers of `Π̂` selected as `Π′` (node indices), the cycle found after
    /// augmentation, and the point read off the potentials of `Γ(Π′)`.
    Subsets { prime_edges: Vec<(usize, usize)>, cycle: NegativeCycle, point: ConePoint },
    /// A sequence attaining `r_max` and its point `y`.
    ConditionN { sequence: ConditionNSequence, point: ConePoint },
    /// An interior point with no decomposition through codegree height.
    /// `point` is the canonical choice; `all_at_height` lists every failing
    /// point of the same height.
    BruteForce { point: ConePoint, all_at_height: Vec<ConePoint> },
}

impl Witness {
    pub fn point(&self) -> &ConePoint {
        match self {
            Witness::Subsets { point, .. }
            | Witness::ConditionN { point, .. }
            | Witness::BruteForce { point, .. } => point,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelnessCertificate {
    pub verdict: Verdict,
    pub method: Method,
    /// Codegree of the order polytope, `rank(Π̂)`.
    pub r: u32,
    pub r_max: Option<i64>,
    pub witness: Option<Witness>,
}

/// Runs one decider.
pub fn check_level(poset: &Poset, method: Method, budgets: &Budgets) -> Result<LevelnessCertificate, LevelnessError> {
    match method {
        Method::Subsets => check_level_subsets(poset, budgets.subset_edges),
        Method::ConditionN => check_level_miyazaki(poset, budgets.sequences),
        Method::BruteForce => check_level_bruteforce(poset, budgets.brute_elements),
    }
}

/// Re-checks a certificate's witness from scratch. LEVEL certificates carry
/// nothing to check and pass trivially.
pub fn revalidate(poset: &Poset, cert: &LevelnessCertificate) -> bool {
    let bounded = poset.bounded();
    if cert.r != bounded.total_rank() {
        return false;
    }
    match (&cert.verdict, &cert.witness) {
        (Verdict::Level, None) => true,
        (Verdict::Level, Some(_)) | (Verdict::NotLevel, None) => false,
        (Verdict::NotLevel, Some(w)) => match w {
            Witness::Subsets { prime_edges, cycle, point } => {
                subsets::validate_witness(&bounded, prime_edges, cycle, point)
            }
            Witness::ConditionN { sequence, point } => {
                condition_n::validate_witness(&bounded, sequence, point, cert.r_max)
            }
            Witness::BruteForce { point, .. } => {
                point.is_interior(&bounded)
                    && point.height > i64::from(cert.r)
                    && bruteforce::decompose(&bounded, point, i64::from(cert.r)).is_none()
            }
        },
    }
}
