use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::point::Point;
use super::rational::{pow_i, Q};
use crate::{Error, Result};

/// An equivariant parameter.
///
/// `A(i, j)` is the framing parameter `a_{i,j}` (1-based vertex and slot).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    A(usize, usize),
    Hbar,
    Q,
}

impl Symbol {
    /// JSON key: `a_i_j`, `hbar2`, `q2` (the `2` marks doubled exponents).
    pub fn key(&self) -> String {
        match self {
            Symbol::A(i, j) => format!("a_{i}_{j}"),
            Symbol::Hbar => "hbar2".into(),
            Symbol::Q => "q2".into(),
        }
    }

    pub fn from_key(s: &str) -> Result<Symbol> {
        match s {
            "hbar2" => Ok(Symbol::Hbar),
            "q2" => Ok(Symbol::Q),
            _ => {
                let bad = || Error::Input(format!("unknown symbol key {s:?}"));
                let rest = s.strip_prefix("a_").ok_or_else(bad)?;
                let (i, j) = rest.split_once('_').ok_or_else(bad)?;
                let i: usize = i.parse().map_err(|_| bad())?;
                let j: usize = j.parse().map_err(|_| bad())?;
                if i == 0 || j == 0 {
                    return Err(bad());
                }
                Ok(Symbol::A(i, j))
            }
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::A(i, j) => write!(f, "a{i}{j}"),
            Symbol::Hbar => write!(f, "ħ"),
            Symbol::Q => write!(f, "q"),
        }
    }
}

/// `±∏ s^{e_s/2}`: a signed Laurent monomial with exponents stored doubled.
///
/// Zero exponents are never stored, so structural equality is equality of
/// monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    negative: bool,
    exps: BTreeMap<Symbol, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            negative: false,
            exps: BTreeMap::new(),
        }
    }

    /// `s^{doubled/2}`.
    pub fn symbol_pow2(s: Symbol, doubled: i64) -> Self {
        let mut m = Monomial::one();
        if doubled != 0 {
            m.exps.insert(s, doubled);
        }
        m
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::symbol_pow2(s, 2)
    }

    pub fn a(i: usize, j: usize) -> Self {
        Self::symbol(Symbol::A(i, j))
    }

    /// `ħ^e` for integer `e`.
    pub fn hbar(e: i64) -> Self {
        Self::symbol_pow2(Symbol::Hbar, 2 * e)
    }

    /// `q^e` for integer `e`.
    pub fn q(e: i64) -> Self {
        Self::symbol_pow2(Symbol::Q, 2 * e)
    }

    pub fn minus_one() -> Self {
        Monomial {
            negative: true,
            exps: BTreeMap::new(),
        }
    }

    pub fn from_parts(sign: i8, exps: impl IntoIterator<Item = (Symbol, i64)>) -> Self {
        let mut m = Monomial {
            negative: sign < 0,
            exps: BTreeMap::new(),
        };
        for (s, e) in exps {
            *m.exps.entry(s).or_insert(0) += e;
        }
        m.exps.retain(|_, e| *e != 0);
        m
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// Doubled exponents, zero entries omitted.
    pub fn exps(&self) -> &BTreeMap<Symbol, i64> {
        &self.exps
    }

    /// Doubled exponent of `s`.
    pub fn exp2(&self, s: Symbol) -> i64 {
        self.exps.get(&s).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (s, e) in &other.exps {
            let slot = exps.entry(*s).or_insert(0);
            *slot += e;
            if *slot == 0 {
                exps.remove(s);
            }
        }
        Monomial {
            negative: self.negative ^ other.negative,
            exps,
        }
    }

    pub fn pow(&self, e: i64) -> Monomial {
        Monomial {
            negative: self.negative && e.rem_euclid(2) == 1,
            exps: if e == 0 {
                BTreeMap::new()
            } else {
                self.exps.iter().map(|(s, x)| (*s, x * e)).collect()
            },
        }
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn neg(&self) -> Monomial {
        Monomial {
            negative: !self.negative,
            exps: self.exps.clone(),
        }
    }

    /// Rewrites each symbol through `f`, exponents transforming linearly.
    ///
    /// `f(s)` is the image of `s` itself; half-integer exponents of `s`
    /// require the image to have even doubled exponents and sign `+1`.
    pub fn substitute(&self, f: impl Fn(Symbol) -> Monomial) -> Monomial {
        let mut out = if self.negative {
            Monomial::minus_one()
        } else {
            Monomial::one()
        };
        for (s, e) in &self.exps {
            let img = f(*s);
            if e % 2 == 0 {
                out = out.mul(&img.pow(e / 2));
            } else {
                assert!(
                    !img.negative && img.exps.values().all(|x| x % 2 == 0),
                    "square root of {img} is not a monomial"
                );
                let half = Monomial {
                    negative: false,
                    exps: img.exps.iter().map(|(t, x)| (*t, x / 2)).collect(),
                };
                out = out.mul(&half.pow(*e));
            }
        }
        out
    }

    /// Value at a point given by square roots of the symbols.
    pub fn eval(&self, p: &Point) -> Q {
        let mut v = if self.negative {
            -Q::from_integer(1.into())
        } else {
            Q::from_integer(1.into())
        };
        for (s, e) in &self.exps {
            v *= pow_i(p.root(*s), *e);
        }
        v
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in &self.exps {
            if !first {
                write!(f, "·")?;
            }
            first = false;
            match (e % 2 == 0, e / 2) {
                (true, 1) => write!(f, "{s}")?,
                (true, h) => write!(f, "{s}^{h}")?,
                (false, _) => write!(f, "{s}^({e}/2)")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    sign: i8,
    exp: BTreeMap<String, i64>,
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MonomialJson {
            sign: self.sign(),
            exp: self.exps.iter().map(|(k, v)| (k.key(), *v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MonomialJson::deserialize(d)?;
        if raw.sign != 1 && raw.sign != -1 {
            return Err(D::Error::custom("sign must be 1 or -1"));
        }
        let mut exps = Vec::new();
        for (k, v) in raw.exp {
            exps.push((Symbol::from_key(&k).map_err(D::Error::custom)?, v));
        }
        Ok(Monomial::from_parts(raw.sign, exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zero_exponents() {
        let m = Monomial::a(1, 1).mul(&Monomial::a(1, 1).inv());
        assert!(m.is_one());
        assert_eq!(m, Monomial::one());
        assert_eq!(Monomial::from_parts(1, [(Symbol::Q, 0)]), Monomial::one());
    }

    #[test]
    fn sign_and_powers() {
        let m = Monomial::minus_one().mul(&Monomial::hbar(1));
        assert_eq!(m.pow(2), Monomial::hbar(2));
        assert_eq!(m.pow(-1).sign(), -1);
        assert_eq!(m.pow(0), Monomial::one());
    }

    #[test]
    fn json_round_trip() {
        let m = Monomial::from_parts(
            -1,
            [(Symbol::A(1, 2), 2), (Symbol::Hbar, -1), (Symbol::Q, 4)],
        );
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"sign":-1,"exp":{"a_1_2":2,"hbar2":-1,"q2":4}}"#);
        assert_eq!(serde_json::from_str::<Monomial>(&s).unwrap(), m);
        assert!(serde_json::from_str::<Monomial>(r#"{"sign":2,"exp":{}}"#).is_err());
        assert!(serde_json::from_str::<Monomial>(r#"{"sign":1,"exp":{"b_1":2}}"#).is_err());
    }

    #[test]
    fn substitution_is_linear_on_exponents() {
        let m = Monomial::a(2, 1).pow(2).mul(&Monomial::hbar(-1));
        let img = m.substitute(|s| match s {
            Symbol::A(2, 1) => Monomial::hbar(-1).mul(&Monomial::a(1, 1)),
            other => Monomial::symbol(other),
        });
        assert_eq!(img, Monomial::a(1, 1).pow(2).mul(&Monomial::hbar(-3)));
        let half = Monomial::symbol_pow2(Symbol::Hbar, 1);
        assert_eq!(half.substitute(Monomial::symbol), half);
    }
}
