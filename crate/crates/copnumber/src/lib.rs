//! Pursuit-evasion on finite graphs against a robber of unbounded speed.
//!
//! Cops occupy vertices (several may share one); each round every cop may
//! stay or cross one edge, and then the robber may relocate anywhere within
//! her connected component of the graph minus the occupied vertices. The
//! cops win by moving onto the robber. The library provides:
//!
//! - an exact game solver over cop-multiset positions ([`solver`]),
//! - the helicopter variant whose optimum equals treewidth + 1
//!   ([`helicopter`], [`decomposition`]),
//! - structural machinery for interval graphs, where the minimum cop count
//!   is approximable within a factor of three ([`interval`]),
//! - executable cop and robber strategies that realize the bound proofs
//!   ([`strategies`]),
//! - certified lower/upper bounds assembled per graph ([`bounds`]), and
//! - generators for the graph families the test corpus is built on
//!   ([`generators`]).
//!
//! Everything is deterministic: same inputs, same bytes out.

pub mod bounds;
pub mod config;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod helicopter;
pub mod interval;
pub mod solver;
pub mod strategies;
pub mod verify;

pub use config::Limits;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solver::{cop_number_exact, play, solve_fixed_k};
