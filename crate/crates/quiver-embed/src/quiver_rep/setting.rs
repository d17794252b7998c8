use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_algebra::{Symbol, Q};
use crate::{Error, Result};

/// Stability parameter. Only `Plus = (1,…,1)` and `Minus = (−1,…,−1)` are
/// decidable here; anything else is carried so that it can be rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum Theta {
    Plus,
    #[default]
    Minus,
    Other(Vec<i64>),
}

impl Theta {
    /// Normalizes an explicit vector to `Plus`/`Minus` when possible.
    pub fn from_vec(v: Vec<i64>) -> Theta {
        if !v.is_empty() && v.iter().all(|x| *x == 1) {
            Theta::Plus
        } else if !v.is_empty() && v.iter().all(|x| *x == -1) {
            Theta::Minus
        } else {
            Theta::Other(v)
        }
    }
}

impl Serialize for Theta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Theta::Plus => s.serialize_str("plus"),
            Theta::Minus => s.serialize_str("minus"),
            Theta::Other(v) => v.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Theta {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Vec(Vec<i64>),
        }
        match Raw::deserialize(d)? {
            Raw::Name(s) if s == "plus" => Ok(Theta::Plus),
            Raw::Name(s) if s == "minus" => Ok(Theta::Minus),
            Raw::Name(s) => Err(D::Error::custom(format!("unknown theta {s:?}"))),
            Raw::Vec(v) => Ok(Theta::from_vec(v)),
        }
    }
}

/// Type-A quiver data with `m` vertices. Vectors are indexed from 0 for
/// vertex 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuiverSetting {
    pub m: usize,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    pub theta: Theta,
}

impl QuiverSetting {
    pub fn new(v: Vec<usize>, w: Vec<usize>) -> Result<Self> {
        Self::with_theta(v, w, Theta::Minus)
    }

    pub fn with_theta(v: Vec<usize>, w: Vec<usize>, theta: Theta) -> Result<Self> {
        let s = QuiverSetting {
            m: v.len(),
            v,
            w,
            theta,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::Input("m must be at least 1".into()));
        }
        if self.v.len() != self.m || self.w.len() != self.m {
            return Err(Error::Input(format!(
                "v and w must have length m = {} (got {} and {})",
                self.m,
                self.v.len(),
                self.w.len()
            )));
        }
        Ok(())
    }

    /// 1-based accessors.
    pub fn v_at(&self, i: usize) -> usize {
        self.v[i - 1]
    }

    pub fn w_at(&self, i: usize) -> usize {
        self.w[i - 1]
    }

    /// Framing parameters `a_{i,j}` in (vertex, slot) order.
    pub fn framing_symbols(&self) -> Vec<Symbol> {
        (1..=self.m)
            .flat_map(|i| (1..=self.w_at(i)).map(move |j| Symbol::A(i, j)))
            .collect()
    }

    /// Framing parameters followed by `ħ` and `q`.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s = self.framing_symbols();
        s.push(Symbol::Hbar);
        s.push(Symbol::Q);
        s
    }
}

impl<'de> Deserialize<'de> for QuiverSetting {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            m: Option<usize>,
            v: Vec<usize>,
            w: Vec<usize>,
            #[serde(default)]
            theta: Theta,
        }
        let raw = Raw::deserialize(d)?;
        let s = QuiverSetting {
            m: raw.m.unwrap_or(raw.v.len()),
            v: raw.v,
            w: raw.w,
            theta: raw.theta,
        };
        s.validate().map_err(D::Error::custom)?;
        Ok(s)
    }
}

/// A point of the torus `A × C^×_ħ`: `a[i][j]` is `a_{i+1,j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    pub a: Vec<Vec<Q>>,
    pub hbar: Q,
}

impl TorusPoint {
    pub fn identity(s: &QuiverSetting) -> Self {
        let one = Q::from_integer(1.into());
        TorusPoint {
            a: s.w.iter().map(|w| vec![one.clone(); *w]).collect(),
            hbar: one,
        }
    }

    pub fn a_at(&self, i: usize, j: usize) -> &Q {
        &self.a[i - 1][j - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_json_with_default_theta() {
        let s: QuiverSetting = serde_json::from_str(r#"{"m":2,"v":[1,1],"w":[1,1]}"#).unwrap();
        assert_eq!(s.theta, Theta::Minus);
        let p: QuiverSetting =
            serde_json::from_str(r#"{"m":1,"v":[1],"w":[1],"theta":"plus"}"#).unwrap();
        assert_eq!(p.theta, Theta::Plus);
        let o: QuiverSetting =
            serde_json::from_str(r#"{"m":2,"v":[1,1],"w":[1,1],"theta":[1,-1]}"#).unwrap();
        assert_eq!(o.theta, Theta::Other(vec![1, -1]));
        assert!(serde_json::from_str::<QuiverSetting>(r#"{"m":3,"v":[1,1],"w":[1,1]}"#).is_err());
        assert!(serde_json::from_str::<QuiverSetting>(r#"{"m":0,"v":[],"w":[]}"#).is_err());
    }

    #[test]
    fn serializes_theta_as_name() {
        let s = QuiverSetting::new(vec![1], vec![2]).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"m":1,"v":[1],"w":[2],"theta":"minus"}"#
        );
    }
}
