//! Vertex functions by localization and the term-by-term comparison across
//! an embedding step.

mod bracket;
mod coefficient;
mod degrees;
mod series;
mod verify;

pub use bracket::{ahat_contribution_oracle, bracket, pochhammer};
pub use coefficient::{
    coefficient_parts, vertex_coefficient, vertex_coefficient_unchecked, CoefficientParts,
};
pub use degrees::{enumerate_admissible, is_admissible, DegreeAssignment};
pub use series::{vertex_series, Term, VertexSeries};
pub use verify::{
    specialize_term, verify_fixed_point, verify_main_theorem, verify_setting, xyz_diagnostics,
    Report, SettingReport, VerifyOptions, ZShift,
};
