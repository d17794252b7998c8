use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact_algebra::Monomial;
use crate::quiver_rep::QuiverSetting;
use crate::{Error, Result};

/// A partition as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(len: usize) -> Self {
        if len == 0 {
            Self::empty()
        } else {
            Partition(vec![len])
        }
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_r` with `λ_r = 0` past the length (1-based).
    pub fn part(&self, r: usize) -> usize {
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    /// `(row, col)` cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, len)| (1..=*len).map(move |c| (r + 1, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A box of the partition attached to framing slot `host = (i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct YoungBox {
    pub host: (usize, usize),
    pub row: usize,
    pub col: usize,
}

impl YoungBox {
    pub fn content(&self) -> i64 {
        self.row as i64 - self.col as i64
    }

    /// `row + col − 2`.
    pub fn height(&self) -> i64 {
        (self.row + self.col) as i64 - 2
    }

    /// Exponent of `ħ` in the torus weight of the box: `col − 1`.
    pub fn delta(&self) -> i64 {
        self.col as i64 - 1
    }

    /// `a_host · ħ^δ`.
    pub fn weight(&self) -> Monomial {
        Monomial::a(self.host.0, self.host.1).mul(&Monomial::hbar(self.delta()))
    }

    /// Key used in degree maps: `i_j_row_col`.
    pub fn key(&self) -> String {
        format!("{}_{}_{}_{}", self.host.0, self.host.1, self.row, self.col)
    }

    pub fn from_key(s: &str) -> Result<YoungBox> {
        let parts: Vec<usize> = s
            .split('_')
            .map(|p| {
                p.parse()
                    .map_err(|_| Error::Input(format!("bad box key {s:?}")))
            })
            .collect::<Result<_>>()?;
        match parts[..] {
            [i, j, r, c] => Ok(YoungBox {
                host: (i, j),
                row: r,
                col: c,
            }),
            _ => Err(Error::Input(format!("bad box key {s:?}"))),
        }
    }
}

/// The quiver vertex a box lives over: host vertex plus content.
pub fn gamma(b: &YoungBox) -> i64 {
    b.host.0 as i64 + b.content()
}

/// A `(v,w)`-tuple of partitions: one partition per framing slot such that
/// exactly `v_l` boxes lie over vertex `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VWTuple {
    setting: QuiverSetting,
    partitions: BTreeMap<(usize, usize), Partition>,
}

impl VWTuple {
    /// Builds and validates; slots missing from `parts` are empty.
    pub fn new(
        setting: &QuiverSetting,
        parts: BTreeMap<(usize, usize), Partition>,
    ) -> Result<Self> {
        for (i, j) in parts.keys() {
            if *i == 0 || *i > setting.m || *j == 0 || *j > setting.w_at(*i) {
                return Err(Error::ShapeMismatch(format!("no framing slot ({i},{j})")));
            }
        }
        let mut partitions = BTreeMap::new();
        for i in 1..=setting.m {
            for j in 1..=setting.w_at(i) {
                partitions.insert((i, j), parts.get(&(i, j)).cloned().unwrap_or_default());
            }
        }
        let t = VWTuple {
            setting: setting.clone(),
            partitions,
        };
        t.validate()?;
        Ok(t)
    }

    /// Builds from partitions listed in (vertex, slot) order.
    pub fn from_list(setting: &QuiverSetting, parts: &[&[usize]]) -> Result<Self> {
        let slots: Vec<(usize, usize)> = (1..=setting.m)
            .flat_map(|i| (1..=setting.w_at(i)).map(move |j| (i, j)))
            .collect();
        if slots.len() != parts.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} partitions for {} framing slots",
                parts.len(),
                slots.len()
            )));
        }
        let map = slots
            .into_iter()
            .zip(parts)
            .map(|(s, p)| Ok((s, Partition::new(p.to_vec())?)))
            .collect::<Result<_>>()?;
        Self::new(setting, map)
    }

    pub(crate) fn from_validated(
        setting: QuiverSetting,
        partitions: BTreeMap<(usize, usize), Partition>,
    ) -> Self {
        VWTuple {
            setting,
            partitions,
        }
    }

    fn validate(&self) -> Result<()> {
        let mut counts = vec![0usize; self.setting.m];
        for b in self.boxes() {
            let g = gamma(&b);
            if g < 1 || g > self.setting.m as i64 {
                return Err(Error::ShapeMismatch(format!(
                    "box {b:?} lies over vertex {g}"
                )));
            }
            counts[g as usize - 1] += 1;
        }
        if counts != self.setting.v {
            return Err(Error::ShapeMismatch(format!(
                "box counts {counts:?} differ from v = {:?}",
                self.setting.v
            )));
        }
        Ok(())
    }

    pub fn setting(&self) -> &QuiverSetting {
        &self.setting
    }

    pub fn partitions(&self) -> &BTreeMap<(usize, usize), Partition> {
        &self.partitions
    }

    pub fn partition(&self, i: usize, j: usize) -> &Partition {
        &self.partitions[&(i, j)]
    }

    /// All boxes, slot by slot, each partition row-major.
    pub fn boxes(&self) -> Vec<YoungBox> {
        self.partitions
            .iter()
            .flat_map(|(host, p)| {
                p.cells().map(move |(row, col)| YoungBox {
                    host: *host,
                    row,
                    col,
                })
            })
            .collect()
    }

    /// Tautological character at `vertex`: the sorted multiset of box weights.
    pub fn character(&self, vertex: usize) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .boxes()
            .iter()
            .filter(|b| gamma(b) == vertex as i64)
            .map(YoungBox::weight)
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let parts: serde_json::Map<String, serde_json::Value> = self
            .partitions
            .iter()
            .map(|((i, j), p)| {
                (
                    format!("{i}_{j}"),
                    serde_json::to_value(p).expect("partition json"),
                )
            })
            .collect();
        serde_json::json!({ "partitions": parts })
    }

    pub fn from_json(setting: &QuiverSetting, value: &serde_json::Value) -> Result<Self> {
        let parts = value
            .get("partitions")
            .and_then(|p| p.as_object())
            .ok_or_else(|| Error::Input("fixed point needs a \"partitions\" object".into()))?;
        let mut map = BTreeMap::new();
        for (k, v) in parts {
            let (i, j) = k
                .split_once('_')
                .and_then(|(i, j)| Some((i.parse().ok()?, j.parse().ok()?)))
                .ok_or_else(|| Error::Input(format!("bad slot key {k:?}")))?;
            let raw: Vec<usize> = serde_json::from_value(v.clone())
                .map_err(|e| Error::Input(format!("partition {k}: {e}")))?;
            map.insert((i, j), Partition::new(raw)?);
        }
        Self::new(setting, map)
    }
}

impl fmt::Display for VWTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partitions.values().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_statistics() {
        let b = YoungBox {
            host: (3, 1),
            row: 1,
            col: 1,
        };
        assert_eq!((gamma(&b), b.delta()), (3, 0));
        let b = YoungBox {
            host: (4, 1),
            row: 1,
            col: 2,
        };
        assert_eq!((gamma(&b), b.delta()), (3, 1));
        assert_eq!(YoungBox::from_key(&b.key()).unwrap(), b);
    }

    #[test]
    fn validation_counts_boxes_per_vertex() {
        let s = QuiverSetting::new(vec![1, 1], vec![1, 1]).unwrap();
        assert!(VWTuple::from_list(&s, &[&[1], &[1]]).is_ok());
        assert!(VWTuple::from_list(&s, &[&[1], &[]]).is_err());
        assert!(VWTuple::from_list(&s, &[&[2], &[]]).is_err());
        assert!(VWTuple::from_list(&s, &[&[1, 1], &[]]).is_ok());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = QuiverSetting::new(vec![1, 1], vec![1, 1]).unwrap();
        let t = VWTuple::from_list(&s, &[&[1, 1], &[]]).unwrap();
        let j = t.to_json();
        assert_eq!(
            j,
            serde_json::json!({"partitions": {"1_1": [1, 1], "2_1": []}})
        );
        assert_eq!(VWTuple::from_json(&s, &j).unwrap(), t);
        assert_eq!(t.to_string(), "((1,1),∅)");
    }
}
