use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial::Symbol;
use super::rational::Q;

/// Default numerator/denominator range for random points.
pub const DEFAULT_RANGE: (i64, i64) = (2, 10_000);

/// An evaluation point, holding the value of `s^{1/2}` for every symbol `s`.
///
/// Storing square roots makes every monomial with half-integer exponents
/// evaluate to a rational.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Point {
    roots: BTreeMap<Symbol, Q>,
}

impl Point {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_roots(roots: impl IntoIterator<Item = (Symbol, Q)>) -> Self {
        Point {
            roots: roots.into_iter().collect(),
        }
    }

    pub fn set_root(&mut self, s: Symbol, r: Q) {
        self.roots.insert(s, r);
    }

    /// The value of `s^{1/2}`.
    ///
    /// Panics if `s` has no value: evaluating a function at a point that
    /// does not cover it is a programming error.
    pub fn root(&self, s: Symbol) -> &Q {
        self.roots
            .get(&s)
            .unwrap_or_else(|| panic!("no value for {s} at evaluation point"))
    }

    pub fn get(&self, s: Symbol) -> Option<&Q> {
        self.roots.get(&s)
    }

    /// The value of `s` itself.
    pub fn value(&self, s: Symbol) -> Q {
        let r = self.root(s);
        r * r
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.roots.keys()
    }
}

/// Deterministic sampler of random points with distinct coordinates.
#[derive(Clone, Debug)]
pub struct PointSampler {
    rng: ChaCha8Rng,
    range: (i64, i64),
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_range(seed, DEFAULT_RANGE)
    }

    pub fn with_range(seed: u64, range: (i64, i64)) -> Self {
        assert!(
            2 <= range.0 && range.0 < range.1,
            "range must satisfy 2 <= lo < hi"
        );
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            range,
        }
    }

    pub fn rational(&mut self) -> Q {
        let n = self.rng.gen_range(self.range.0..=self.range.1);
        let d = self.rng.gen_range(self.range.0..=self.range.1);
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    /// A point whose square-root coordinates are pairwise distinct and `!= 1`.
    pub fn sample(&mut self, symbols: impl IntoIterator<Item = Symbol>) -> Point {
        let mut used = BTreeSet::new();
        let mut p = Point::new();
        for s in symbols {
            let r = loop {
                let r = self.rational();
                if r != Q::from_integer(1.into()) && used.insert(r.clone()) {
                    break r;
                }
            };
            p.set_root(s, r);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_deterministic_and_distinct() {
        let syms = [Symbol::A(1, 1), Symbol::A(2, 1), Symbol::Hbar, Symbol::Q];
        let a = PointSampler::new(7).sample(syms);
        let b = PointSampler::new(7).sample(syms);
        assert_eq!(a, b);
        let vals: BTreeSet<_> = syms.iter().map(|s| a.root(*s).clone()).collect();
        assert_eq!(vals.len(), syms.len());
        assert_ne!(a, PointSampler::new(8).sample(syms));
    }
}
