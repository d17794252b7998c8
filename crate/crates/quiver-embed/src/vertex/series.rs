use std::collections::BTreeMap;

use serde::Serialize;

use super::coefficient::vertex_coefficient_unchecked;
use super::degrees::{enumerate_admissible, DegreeAssignment};
use crate::exact_algebra::{FactoredFunction, Point, Q};
use crate::fixed_points::VWTuple;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub degrees: DegreeAssignment,
    pub zdeg: Vec<i64>,
    pub coeff: FactoredFunction,
}

/// The vertex function at a fixed point, truncated to total degree `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSeries {
    pub fixed_point: VWTuple,
    pub bound: i64,
    pub terms: Vec<Term>,
}

pub fn vertex_series(fp: &VWTuple, bound: i64) -> VertexSeries {
    let m = fp.setting().m;
    let terms = enumerate_admissible(fp, bound)
        .into_iter()
        .map(|d| Term {
            zdeg: d.zdeg(m),
            coeff: vertex_coefficient_unchecked(fp, &d),
            degrees: d,
        })
        .collect();
    VertexSeries {
        fixed_point: fp.clone(),
        bound,
        terms,
    }
}

impl VertexSeries {
    /// Sum of evaluated coefficients per z-degree.
    pub fn aggregate(&self, p: &Point) -> Result<BTreeMap<Vec<i64>, Q>> {
        let mut out: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
        for t in &self.terms {
            let v = t.coeff.eval(p)?.value();
            *out.entry(t.zdeg.clone())
                .or_insert_with(|| Q::from_integer(0.into())) += v;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "fixed_point": self.fixed_point.to_json(),
            "bound": self.bound,
            "terms": self.terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::PointSampler;
    use crate::quiver_rep::QuiverSetting;

    #[test]
    fn constant_term_is_one() {
        let s = QuiverSetting::new(vec![1, 1], vec![1, 1]).unwrap();
        for fp in crate::fixed_points::enumerate_fixed_points(&s).unwrap() {
            let ser = vertex_series(&fp, 2);
            assert!(ser.terms[0].coeff.is_unit());
            assert_eq!(ser.terms[0].zdeg, [0, 0]);
            let p = PointSampler::new(1).sample(s.symbols());
            assert_eq!(
                ser.aggregate(&p).unwrap()[&vec![0, 0]],
                Q::from_integer(1.into())
            );
            assert_eq!(vertex_series(&fp, 0).terms.len(), 1);
        }
    }
}
