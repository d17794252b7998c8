use super::rep::Representation;
use super::setting::{QuiverSetting, Theta};
use crate::exact_algebra::{invariant_closure, largest_invariant_in_kernels, RationalMatrix};
use crate::{Error, Result};

/// Smallest `X,Y`-invariant collection containing the images of the `I_i`.
pub fn theta_minus_closure(s: &QuiverSetting, r: &Representation) -> Result<Vec<RationalMatrix>> {
    r.check_shapes(s)?;
    Ok(invariant_closure(&s.v, &r.i, &r.x, &r.y))
}

/// Largest `X,Y`-invariant collection contained in the kernels of the `J_i`.
pub fn theta_plus_destabilizer(
    s: &QuiverSetting,
    r: &Representation,
) -> Result<Vec<RationalMatrix>> {
    r.check_shapes(s)?;
    Ok(largest_invariant_in_kernels(&s.v, &r.j, &r.x, &r.y))
}

/// Semistability for `θ = ±(1,…,1)`.
///
/// For `θ⁻` the representation is semistable iff the images of the framings
/// generate every `V_i`; for `θ⁺` iff no nonzero invariant collection sits
/// inside `ker J`.
pub fn is_semistable(s: &QuiverSetting, r: &Representation) -> Result<bool> {
    match &s.theta {
        Theta::Minus => Ok(theta_minus_closure(s, r)?
            .iter()
            .zip(&s.v)
            .all(|(t, v)| t.cols() == *v)),
        Theta::Plus => Ok(theta_plus_destabilizer(s, r)?.iter().all(|k| k.cols() == 0)),
        Theta::Other(v) => Err(Error::UnsupportedTheta(v.clone())),
    }
}
