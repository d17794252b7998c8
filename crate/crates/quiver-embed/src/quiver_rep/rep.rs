use serde::{Deserialize, Serialize};

use super::setting::{QuiverSetting, TorusPoint};
use crate::exact_algebra::{RationalMatrix, Q};
use crate::{Error, Result};

/// A point `(X, Y, I, J)` of the cotangent space of framed representations.
///
/// `x[i]` is `X_{i+1}: V_{i+1} → V_{i+2}` (shape `v_{i+2} × v_{i+1}`) and
/// `y[i]` goes back; `i[i]`, `j[i]` are the framing maps at vertex `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    #[serde(rename = "X")]
    pub x: Vec<RationalMatrix>,
    #[serde(rename = "Y")]
    pub y: Vec<RationalMatrix>,
    #[serde(rename = "I")]
    pub i: Vec<RationalMatrix>,
    #[serde(rename = "J")]
    pub j: Vec<RationalMatrix>,
}

impl Representation {
    pub fn zero(s: &QuiverSetting) -> Self {
        let m = s.m;
        Representation {
            x: (0..m - 1)
                .map(|i| RationalMatrix::zeros(s.v[i + 1], s.v[i]))
                .collect(),
            y: (0..m - 1)
                .map(|i| RationalMatrix::zeros(s.v[i], s.v[i + 1]))
                .collect(),
            i: (0..m)
                .map(|i| RationalMatrix::zeros(s.v[i], s.w[i]))
                .collect(),
            j: (0..m)
                .map(|i| RationalMatrix::zeros(s.w[i], s.v[i]))
                .collect(),
        }
    }

    /// Shapes `(X, Y, I, J)` expected for `s`.
    fn expected(s: &QuiverSetting) -> [Vec<(usize, usize)>; 4] {
        let m = s.m;
        [
            (0..m - 1).map(|i| (s.v[i + 1], s.v[i])).collect(),
            (0..m - 1).map(|i| (s.v[i], s.v[i + 1])).collect(),
            (0..m).map(|i| (s.v[i], s.w[i])).collect(),
            (0..m).map(|i| (s.w[i], s.v[i])).collect(),
        ]
    }

    pub fn check_shapes(&self, s: &QuiverSetting) -> Result<()> {
        let exp = Self::expected(s);
        for (name, (mats, shapes)) in ["X", "Y", "I", "J"].iter().zip(
            [&self.x, &self.y, &self.i, &self.j]
                .into_iter()
                .zip(exp.iter()),
        ) {
            if mats.len() != shapes.len() {
                return Err(Error::ShapeMismatch(format!(
                    "{name}: {} matrices, expected {}",
                    mats.len(),
                    shapes.len()
                )));
            }
            for (k, (mat, sh)) in mats.iter().zip(shapes).enumerate() {
                if mat.shape() != *sh {
                    return Err(Error::ShapeMismatch(format!(
                        "{name}_{}: shape {:?}, expected {:?}",
                        k + 1,
                        mat.shape(),
                        sh
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parses JSON and repairs the shapes of matrices with no rows, which
    /// nested arrays cannot express.
    pub fn from_json(s: &QuiverSetting, value: &serde_json::Value) -> Result<Self> {
        let mut r: Representation = serde_json::from_value(value.clone())
            .map_err(|e| Error::Input(format!("representation: {e}")))?;
        let exp = Self::expected(s);
        for (mats, shapes) in [&mut r.x, &mut r.y, &mut r.i, &mut r.j]
            .into_iter()
            .zip(exp.iter())
        {
            for (mat, sh) in mats.iter_mut().zip(shapes) {
                if mat.rows() == 0 && (sh.0 == 0 || sh.1 == 0) {
                    *mat = RationalMatrix::zeros(sh.0, sh.1);
                }
            }
        }
        r.check_shapes(s)?;
        Ok(r)
    }
}

/// `μ_i = X_{i−1}Y_{i−1} − Y_i X_i + I_i J_i` for every vertex.
pub fn moment_map(s: &QuiverSetting, r: &Representation) -> Result<Vec<RationalMatrix>> {
    r.check_shapes(s)?;
    Ok((0..s.m)
        .map(|i| {
            let mut mu = &r.i[i] * &r.j[i];
            if i > 0 {
                mu = &mu + &(&r.x[i - 1] * &r.y[i - 1]);
            }
            if i + 1 < s.m {
                mu = &mu - &(&r.y[i] * &r.x[i]);
            }
            mu
        })
        .collect())
}

/// Change of basis by `g = (g_1, …, g_m)`.
pub fn group_act(
    s: &QuiverSetting,
    g: &[RationalMatrix],
    r: &Representation,
) -> Result<Representation> {
    r.check_shapes(s)?;
    if g.len() != s.m || g.iter().zip(&s.v).any(|(gi, vi)| gi.shape() != (*vi, *vi)) {
        return Err(Error::ShapeMismatch(
            "group element does not match v".into(),
        ));
    }
    let ginv = g
        .iter()
        .map(RationalMatrix::inverse)
        .collect::<Result<Vec<_>>>()?;
    Ok(Representation {
        x: (0..s.m - 1)
            .map(|i| &(&g[i + 1] * &r.x[i]) * &ginv[i])
            .collect(),
        y: (0..s.m - 1)
            .map(|i| &(&g[i] * &r.y[i]) * &ginv[i + 1])
            .collect(),
        i: (0..s.m).map(|i| &g[i] * &r.i[i]).collect(),
        j: (0..s.m).map(|i| &r.j[i] * &ginv[i]).collect(),
    })
}

/// `X ↦ X`, `Y ↦ ħ⁻¹Y`, `I ↦ I·diag(a)⁻¹`, `J ↦ ħ⁻¹·diag(a)·J`.
pub fn torus_act(s: &QuiverSetting, t: &TorusPoint, r: &Representation) -> Result<Representation> {
    r.check_shapes(s)?;
    if t.a.len() != s.m || t.a.iter().zip(&s.w).any(|(a, w)| a.len() != *w) {
        return Err(Error::ShapeMismatch("torus point does not match w".into()));
    }
    let hinv = t.hbar.recip();
    let da: Vec<RationalMatrix> = t.a.iter().map(|a| RationalMatrix::diag(a)).collect();
    let dainv: Vec<RationalMatrix> =
        t.a.iter()
            .map(|a| RationalMatrix::diag(&a.iter().map(Q::recip).collect::<Vec<_>>()))
            .collect();
    Ok(Representation {
        x: r.x.clone(),
        y: r.y.iter().map(|y| y.scale(&hinv)).collect(),
        i: (0..s.m).map(|i| &r.i[i] * &dainv[i]).collect(),
        j: (0..s.m).map(|i| (&da[i] * &r.j[i]).scale(&hinv)).collect(),
    })
}
