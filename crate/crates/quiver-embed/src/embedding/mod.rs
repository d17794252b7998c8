//! The framing-trade embedding.
//!
//! One step picks the largest `k < m` with `w_{k+1} ≠ 0`, sets `n = m − k`,
//! removes the first framing at vertex `k+1` and adds `n` framings at the
//! last vertex, enlarging `V_{k+p}` by `p − 1` dimensions for `p = 1..n`.
//! Inside this module "relative vertex `p`" means global vertex `k + p`.

mod phi;
mod step;
mod torus;

pub use phi::{embed_rep_full, embed_rep_step, embed_rep_step_with, rho, SignConvention};
pub use step::{embed_full, embedded_dims, EmbeddingStep};
pub use torus::{equivariance_witness, iota, iota_star, TorusEmbedding};
