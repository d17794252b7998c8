use super::bracket::bracket;
use super::degrees::{is_admissible, DegreeAssignment};
use crate::exact_algebra::{FactoredFunction, Monomial};
use crate::fixed_points::{gamma, VWTuple};
use crate::{Error, Result};

/// The three blocks of a vertex coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientParts {
    /// Edge factors over ordered pairs with `γ(□') = γ(□) + 1`.
    pub edges: FactoredFunction,
    /// Framing factors `∏_□ ∏_{j ≤ w_γ(□)} {a_□ ħ^{δ_□} / a_{γ(□),j}}_{d_□}`.
    pub framing: FactoredFunction,
    /// Inverted same-vertex factors over all ordered pairs, diagonal included.
    pub loops: FactoredFunction,
}

impl CoefficientParts {
    pub fn product(&self) -> FactoredFunction {
        self.edges.mul(&self.framing).mul(&self.loops)
    }
}

/// The blocks of the box-form coefficient, without an admissibility check.
pub fn coefficient_parts(fp: &VWTuple, d: &DegreeAssignment) -> CoefficientParts {
    let s = fp.setting();
    let boxes = fp.boxes();
    let mut edges = FactoredFunction::unit();
    let mut framing = FactoredFunction::unit();
    let mut loops = FactoredFunction::unit();
    for b in &boxes {
        let (wb, db, gb) = (b.weight(), d.get(b), gamma(b));
        for b2 in &boxes {
            let g2 = gamma(b2);
            let ratio = b2.weight().mul(&wb.inv());
            let dd = d.get(b2) - db;
            if g2 == gb + 1 {
                edges = edges.mul(&bracket(&ratio, dd));
            } else if g2 == gb {
                loops = loops.div(&bracket(&ratio, dd));
            }
        }
        let l = gb as usize;
        for j in 1..=s.w_at(l) {
            framing = framing.mul(&bracket(&wb.mul(&Monomial::a(l, j).inv()), db));
        }
    }
    CoefficientParts {
        edges,
        framing,
        loops,
    }
}

/// The coefficient of `z^d` in the vertex function restricted to `fp`.
pub fn vertex_coefficient(fp: &VWTuple, d: &DegreeAssignment) -> Result<FactoredFunction> {
    if !is_admissible(fp, d) {
        return Err(Error::InadmissibleDegrees(d.to_json().to_string()));
    }
    Ok(vertex_coefficient_unchecked(fp, d))
}

/// The same product for any integer assignment.
pub fn vertex_coefficient_unchecked(fp: &VWTuple, d: &DegreeAssignment) -> FactoredFunction {
    coefficient_parts(fp, d).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixed_points::YoungBox;
    use crate::quiver_rep::QuiverSetting;

    #[test]
    fn zero_degrees_give_one() {
        let s = QuiverSetting::new(vec![1, 2, 2], vec![1, 1, 1]).unwrap();
        for fp in crate::fixed_points::enumerate_fixed_points(&s).unwrap() {
            assert!(vertex_coefficient(&fp, &DegreeAssignment::zero(&fp))
                .unwrap()
                .is_unit());
        }
    }

    #[test]
    fn single_box_two_framings() {
        let s = QuiverSetting::new(vec![1], vec![2]).unwrap();
        let fp = VWTuple::from_list(&s, &[&[1], &[]]).unwrap();
        let b = YoungBox {
            host: (1, 1),
            row: 1,
            col: 1,
        };
        let d = DegreeAssignment([(b, 1)].into_iter().collect());
        let want = bracket(&Monomial::one(), 1).mul(&bracket(
            &Monomial::a(1, 1).mul(&Monomial::a(1, 2).inv()),
            1,
        ));
        assert_eq!(vertex_coefficient(&fp, &d).unwrap(), want);
        // The factor {1}_1 has numerator 1 − ħ, nonzero.
        assert!(!want.is_identically_zero());
    }

    #[test]
    fn inadmissible_is_rejected() {
        let s = QuiverSetting::new(vec![1, 1], vec![0, 1]).unwrap();
        let fp = VWTuple::from_list(&s, &[&[2]]).unwrap();
        let mut d = DegreeAssignment::zero(&fp);
        d.0.insert(
            YoungBox {
                host: (2, 1),
                row: 1,
                col: 1,
            },
            1,
        );
        assert!(matches!(
            vertex_coefficient(&fp, &d),
            Err(Error::InadmissibleDegrees(_))
        ));
        assert!(vertex_coefficient_unchecked(&fp, &d).is_identically_zero());
    }
}
