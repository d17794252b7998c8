//! Exact arithmetic: rationals, monomials, factored functions, matrices.

mod closure;
mod factored;
mod matrix;
mod monomial;
mod point;
mod rational;

pub use closure::{invariant_closure, largest_invariant_in_kernels};
pub use factored::{Evaluation, FactoredFunction};
pub use matrix::RationalMatrix;
pub use monomial::{Monomial, Symbol};
pub use point::{Point, PointSampler, DEFAULT_RANGE};
pub(crate) use rational::pow_i;
pub use rational::{format_rational, parse_rational, Q};
#[cfg(test)]
pub(crate) use rational::{q, q_frac};
