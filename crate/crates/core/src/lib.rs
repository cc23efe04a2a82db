//! Exact combinatorics of partial flag manifolds `F(n_1,...,n_l,n)`.
//!
//! Everything hangs off a [`FlagShape`]. From it [`LadderGraph::build`]
//! produces the ladder diagram with its dots, stars, oriented edges, boxes
//! and roofs; the remaining modules are functions of that graph:
//!
//! * [`paths`]: positive lattice paths, meanders and their edge functionals,
//! * [`polytope`]: the reflexive polytope, the small refinement of its fan and
//!   the conifold strata,
//! * [`sections`]: the dual cone, greedy path peeling, section polytopes and
//!   the quadratic binomial relations,
//! * [`series`]: hypergeometric coefficients (three independent routes),
//!   complete-intersection series and mirror equation systems,
//! * [`census`]: Calabi-Yau complete-intersection 3-folds in flag manifolds.
//!
//! All arithmetic is exact. The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod census;
mod error;
pub mod hull;
pub mod ladder;
pub mod linalg;
pub mod paths;
pub mod polytope;
pub mod sections;
pub mod series;
mod shape;

pub use error::{Error, Result};
pub use ladder::LadderGraph;
pub use shape::FlagShape;
