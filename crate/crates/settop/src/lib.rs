//! A finite-model laboratory for topological set theory.
//!
//! The crate implements closed-set topologies on finite point sets and their
//! exponential hyperspaces, hereditarily finite sets with generalized zeros
//! and pristine inner models, a compiler from positive formulas to a small
//! algebra of set operations, and the choice-function well-ordering
//! construction. Every construction is checked against brute-force oracles
//! at desk scale.

pub mod error;
pub mod finite_topology;
pub mod hf_universe;
pub mod hyperspace;
pub mod positive_core;
pub mod suite;
pub mod wellorder;

pub use error::{Error, Result};
