//! Levelness of order polytopes of finite posets.
//!
//! Three independent deciders live in [`levelness`]: a search over weighted
//! Hasse digraphs with Bellman–Ford negative-cycle certificates, the
//! condition-N sequence method, and a brute-force decomposition of interior
//! lattice points of the cone. [`ehrhart`] computes exact Ehrhart data and
//! [`alcoved`] covers alcoved polytopes, simplices and their products.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]
// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod alcoved;
pub mod catalog;
pub mod digraph;
pub mod ehrhart;
pub mod levelness;
pub mod point;
pub mod poset;

pub use point::ConePoint;
pub use poset::{BoundedPoset, Chain, Collisions, Poset, PosetError};
