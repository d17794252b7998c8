//! Exact computations for the framing-trade embedding of type-A Nakajima
//! quiver varieties.
//!
//! An embedding step moves the last framing before the final vertex over to
//! the final vertex, enlarging some of the gauge spaces. This crate builds
//! that map on explicit representations over the rationals, tracks the torus
//! embedding and the correspondence of torus fixed points, and computes
//! quasimap vertex functions by localization so that the two sides of the
//! embedding can be compared term by term.
//!
//! The modules build on each other in order:
//!
//! - [`exact_algebra`]: big rationals, Laurent monomials with half-integer
//!   exponents, factored rational functions, matrices and subspace closure.
//! - [`quiver_rep`]: settings, representations, moment map, group and torus
//!   actions, semistability.
//! - [`fixed_points`]: tuples of partitions, box statistics, characters and
//!   the fixed-point correspondence.
//! - [`embedding`]: the block-matrix map, its dimension arithmetic and the
//!   group and torus embeddings.
//! - [`vertex`]: brackets, admissible degrees, vertex coefficients,
//!   specialization and the term-by-term verifier.
//! - [`cli`]: the JSON front end used by the `quiver-embed` binary.

pub mod cli;
pub mod embedding;
mod error;
pub mod exact_algebra;
pub mod fixed_points;
pub mod quiver_rep;
pub mod vertex;

pub use error::{Error, Result};
