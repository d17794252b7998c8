use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{Monomial, Symbol};
use super::point::Point;
use super::rational::{pow_i, Q};
use crate::{Error, Result};

/// `pre · ∏ (1 − m)^{mult(m)}`.
///
/// Multiplicities are net: a factor occurring in both numerator and
/// denominator is stored once with the difference, and zero multiplicities
/// are dropped. In particular the factor `1 − 1` is identically zero when
/// its net multiplicity is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFunction {
    pre: Monomial,
    factors: BTreeMap<Monomial, i64>,
}

/// Outcome of exact evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    /// A numerator factor vanished.
    Zero,
    NonZero(Q),
}

impl Evaluation {
    pub fn value(&self) -> Q {
        match self {
            Evaluation::Zero => Q::zero(),
            Evaluation::NonZero(v) => v.clone(),
        }
    }
}

impl FactoredFunction {
    pub fn unit() -> Self {
        FactoredFunction {
            pre: Monomial::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        FactoredFunction {
            pre: m,
            factors: BTreeMap::new(),
        }
    }

    /// `(1 − m)^mult`.
    pub fn factor(m: Monomial, mult: i64) -> Self {
        let mut f = Self::unit();
        f.push_factor(m, mult);
        f
    }

    pub fn from_parts(pre: Monomial, factors: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut f = Self::monomial(pre);
        for (m, k) in factors {
            f.push_factor(m, k);
        }
        f
    }

    fn push_factor(&mut self, m: Monomial, mult: i64) {
        if mult == 0 {
            return;
        }
        let slot = self.factors.entry(m.clone()).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.factors.remove(&m);
        }
    }

    pub fn prefactor(&self) -> &Monomial {
        &self.pre
    }

    pub fn factors(&self) -> &BTreeMap<Monomial, i64> {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.pre.is_one() && self.factors.is_empty()
    }

    pub fn mul(&self, other: &FactoredFunction) -> FactoredFunction {
        let mut out = self.clone();
        out.pre = out.pre.mul(&other.pre);
        for (m, k) in &other.factors {
            out.push_factor(m.clone(), *k);
        }
        out
    }

    pub fn pow(&self, e: i64) -> FactoredFunction {
        FactoredFunction {
            pre: self.pre.pow(e),
            factors: if e == 0 {
                BTreeMap::new()
            } else {
                self.factors
                    .iter()
                    .map(|(m, k)| (m.clone(), k * e))
                    .collect()
            },
        }
    }

    pub fn inv(&self) -> FactoredFunction {
        self.pow(-1)
    }

    pub fn div(&self, other: &FactoredFunction) -> FactoredFunction {
        self.mul(&other.inv())
    }

    /// Net multiplicity of the factor `1 − 1`.
    pub fn unit_multiplicity(&self) -> i64 {
        self.factors.get(&Monomial::one()).copied().unwrap_or(0)
    }

    /// True iff the factor `1 − 1` occurs with positive net multiplicity.
    pub fn is_identically_zero(&self) -> bool {
        self.unit_multiplicity() > 0
    }

    /// True iff the factor `1 − 1` occurs with negative net multiplicity.
    pub fn has_identical_pole(&self) -> bool {
        self.unit_multiplicity() < 0
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        let mut out: BTreeSet<Symbol> = self.pre.exps().keys().copied().collect();
        for m in self.factors.keys() {
            out.extend(m.exps().keys().copied());
        }
        out
    }

    /// Applies a monomial map to the prefactor and every factor.
    pub fn substitute(&self, f: impl Fn(Symbol) -> Monomial) -> FactoredFunction {
        let mut out = Self::monomial(self.pre.substitute(&f));
        for (m, k) in &self.factors {
            out.push_factor(m.substitute(&f), *k);
        }
        out
    }

    /// Exact value at a point of square roots.
    pub fn eval(&self, p: &Point) -> Result<Evaluation> {
        self.eval_by(|m| m.eval(p))
    }

    /// Exact value where `values[s]` is the value of `s`, except that for a
    /// symbol occurring with an odd doubled exponent anywhere in `self` it is
    /// read as the value of `s^{1/2}`.
    pub fn eval_values(&self, values: &BTreeMap<Symbol, Q>) -> Result<Evaluation> {
        let mut odd = BTreeSet::new();
        for m in std::iter::once(&self.pre).chain(self.factors.keys()) {
            odd.extend(
                m.exps()
                    .iter()
                    .filter(|(_, e)| *e % 2 != 0)
                    .map(|(s, _)| *s),
            );
        }
        self.eval_by(|m| {
            let mut v = Q::from_integer(m.sign().into());
            for (s, e) in m.exps() {
                let x = values
                    .get(s)
                    .unwrap_or_else(|| panic!("no value for {s} at evaluation point"));
                v *= if odd.contains(s) {
                    pow_i(x, *e)
                } else {
                    pow_i(x, e / 2)
                };
            }
            v
        })
    }

    fn eval_by(&self, value: impl Fn(&Monomial) -> Q) -> Result<Evaluation> {
        let mut acc = value(&self.pre);
        let mut pole = false;
        for (m, k) in &self.factors {
            let base = Q::one() - value(m);
            if base.is_zero() {
                if *k > 0 {
                    return Ok(Evaluation::Zero);
                }
                pole = true;
                continue;
            }
            acc *= pow_i(&base, *k);
        }
        if pole {
            Err(Error::PoleAtPoint)
        } else {
            Ok(Evaluation::NonZero(acc))
        }
    }
}

impl fmt::Display for FactoredFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        if !self.pre.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.pre)?;
            sep = " ";
        }
        for (m, k) in &self.factors {
            write!(f, "{sep}(1 - {m})")?;
            if *k != 1 {
                write!(f, "^{k}")?;
            }
            sep = " ";
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FactoredJson {
    pre: Monomial,
    factors: Vec<(Monomial, i64)>,
}

impl Serialize for FactoredFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FactoredJson {
            pre: self.pre.clone(),
            factors: self.factors.iter().map(|(m, k)| (m.clone(), *k)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FactoredJson::deserialize(d)?;
        if raw.factors.iter().any(|(_, k)| *k == 0) {
            return Err(D::Error::custom("factor multiplicity must be nonzero"));
        }
        Ok(FactoredFunction::from_parts(raw.pre, raw.factors))
    }
}
