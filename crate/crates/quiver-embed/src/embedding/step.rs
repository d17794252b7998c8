use serde::{Deserialize, Serialize};

use crate::quiver_rep::QuiverSetting;
use crate::{Error, Result};

/// One embedding step `M(v,w) → M(v',w')`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingStep {
    /// Number of untouched leading vertices; the pivot is vertex `k + 1`.
    pub k: usize,
    /// `m − k`, at least 2.
    pub n: usize,
    pub source: QuiverSetting,
    pub target: QuiverSetting,
}

impl EmbeddingStep {
    /// Global vertex of relative vertex `p`.
    pub fn global(&self, p: usize) -> usize {
        self.k + p
    }

    pub fn m(&self) -> usize {
        self.source.m
    }
}

/// The step taken from `s`, using the largest admissible pivot.
pub fn embedded_dims(s: &QuiverSetting) -> Result<EmbeddingStep> {
    s.validate()?;
    let m = s.m;
    let kp1 = (1..m)
        .rev()
        .find(|&i| s.w_at(i) != 0)
        .ok_or(Error::NoPivot)?;
    let k = kp1 - 1;
    let n = m - k;
    let v = (1..=m)
        .map(|i| {
            if i <= k {
                s.v_at(i)
            } else {
                s.v_at(i) + i - k - 1
            }
        })
        .collect();
    let mut w = s.w.clone();
    w[k] -= 1;
    w[m - 1] += n;
    let target = QuiverSetting {
        m,
        v,
        w,
        theta: s.theta.clone(),
    };
    Ok(EmbeddingStep {
        k,
        n,
        source: s.clone(),
        target,
    })
}

/// Iterates [`embedded_dims`] until every framing sits at the last vertex.
pub fn embed_full(s: &QuiverSetting) -> Result<Vec<EmbeddingStep>> {
    let mut chain = Vec::new();
    let mut cur = s.clone();
    loop {
        match embedded_dims(&cur) {
            Ok(step) => {
                cur = step.target.clone();
                chain.push(step);
            }
            Err(Error::NoPivot) => return Ok(chain),
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(v: &[usize], w: &[usize]) -> QuiverSetting {
        QuiverSetting::new(v.to_vec(), w.to_vec()).unwrap()
    }

    #[test]
    fn two_vertex_step() {
        let step = embedded_dims(&st(&[1, 1], &[1, 1])).unwrap();
        assert_eq!((step.k, step.n), (0, 2));
        assert_eq!(step.target.v, [1, 2]);
        assert_eq!(step.target.w, [0, 3]);
    }

    #[test]
    fn no_pivot_when_framed_only_at_end() {
        assert_eq!(
            embedded_dims(&st(&[1, 2, 3], &[0, 0, 4])),
            Err(Error::NoPivot)
        );
        assert!(embed_full(&st(&[1, 2, 3], &[0, 0, 4])).unwrap().is_empty());
        assert_eq!(embedded_dims(&st(&[3], &[2])), Err(Error::NoPivot));
    }

    #[test]
    fn bookkeeping_per_step() {
        let s = st(&[2, 3, 4, 4, 3, 1], &[0, 0, 1, 2, 0, 0]);
        for step in embed_full(&s).unwrap() {
            let n = step.n;
            let sw: usize = step.source.w.iter().sum();
            let tw: usize = step.target.w.iter().sum();
            assert_eq!(tw, sw + n - 1);
            let sv: usize = step.source.v.iter().sum();
            let tv: usize = step.target.v.iter().sum();
            assert_eq!(tv, sv + n * (n - 1) / 2);
        }
    }
}
