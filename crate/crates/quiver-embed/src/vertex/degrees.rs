use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::fixed_points::{gamma, VWTuple, YoungBox};
use crate::Result;

/// Degrees `d_□` on the boxes of a fixed point.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeAssignment(pub BTreeMap<YoungBox, i64>);

impl DegreeAssignment {
    pub fn zero(fp: &VWTuple) -> Self {
        DegreeAssignment(fp.boxes().into_iter().map(|b| (b, 0)).collect())
    }

    pub fn get(&self, b: &YoungBox) -> i64 {
        self.0.get(b).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }

    /// Component `i` is the sum of `d_□` over boxes lying over vertex `i+1`.
    pub fn zdeg(&self, m: usize) -> Vec<i64> {
        let mut z = vec![0; m];
        for (b, d) in &self.0 {
            z[gamma(b) as usize - 1] += d;
        }
        z
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(self.0.iter().map(|(b, d)| (b.key(), (*d).into())).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| crate::Error::Input("degrees must be an object".into()))?;
        let mut out = BTreeMap::new();
        for (k, v) in obj {
            let d = v
                .as_i64()
                .ok_or_else(|| crate::Error::Input(format!("degree of {k} is not an integer")))?;
            out.insert(YoungBox::from_key(k)?, d);
        }
        Ok(DegreeAssignment(out))
    }
}

impl Serialize for DegreeAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DegreeAssignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        DegreeAssignment::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// `d_□ ≥ 0`, and `d_□ ≤ d_□'` whenever `□'` is the box right of or below
/// `□` in the same partition.
///
/// These are exactly the pairs in one partition with `γ` differing by one
/// and height `row + col − 2` increasing by one.
pub fn is_admissible(fp: &VWTuple, d: &DegreeAssignment) -> bool {
    let boxes = fp.boxes();
    if d.0.len() != boxes.len() || boxes.iter().any(|b| !d.0.contains_key(b)) {
        return false;
    }
    d.0.iter().all(|(b, x)| {
        let p = fp.partition(b.host.0, b.host.1);
        *x >= 0
            && (!p.contains(b.row, b.col + 1)
                || *x
                    <= d.get(&YoungBox {
                        col: b.col + 1,
                        ..*b
                    }))
            && (!p.contains(b.row + 1, b.col)
                || *x
                    <= d.get(&YoungBox {
                        row: b.row + 1,
                        ..*b
                    }))
    })
}

/// All admissible assignments with `Σ d_□ ≤ bound`, lexicographic in the box
/// order of [`VWTuple::boxes`].
pub fn enumerate_admissible(fp: &VWTuple, bound: i64) -> Vec<DegreeAssignment> {
    let boxes = fp.boxes();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(boxes.len());
    fill(&boxes, bound, &mut cur, &mut out);
    out
}

fn fill(boxes: &[YoungBox], left: i64, cur: &mut Vec<i64>, out: &mut Vec<DegreeAssignment>) {
    let k = cur.len();
    if k == boxes.len() {
        out.push(DegreeAssignment(
            boxes.iter().copied().zip(cur.iter().copied()).collect(),
        ));
        return;
    }
    let b = boxes[k];
    // Row-major order within a partition: the boxes above and to the left are placed.
    let lower = boxes[..k]
        .iter()
        .zip(cur.iter())
        .filter(|(o, _)| {
            o.host == b.host
                && ((o.row + 1 == b.row && o.col == b.col)
                    || (o.row == b.row && o.col + 1 == b.col))
        })
        .map(|(_, d)| *d)
        .max()
        .unwrap_or(0);
    for x in lower..=left {
        cur.push(x);
        fill(boxes, left - x, cur, out);
        cur.pop();
    }
}
