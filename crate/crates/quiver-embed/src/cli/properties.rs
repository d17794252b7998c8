//! Seeded matrix-level property suites shared by `selftest`, the examples
//! and the acceptance run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::embedding::{
    embed_rep_step_with, embedded_dims, equivariance_witness, iota, rho, SignConvention,
};
use crate::quiver_rep::{
    group_act, is_semistable, moment_map, random_group_element, random_representation,
    random_torus_point, torus_act, Constraint, QuiverSetting, Representation,
};
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Settings with a pivot, nonempty fixed loci and `v_i ≤ 4`.
pub fn default_settings() -> Vec<QuiverSetting> {
    [
        (vec![1, 1], vec![1, 1]),
        (vec![1, 2], vec![2, 1]),
        (vec![1, 1, 1], vec![1, 0, 1]),
        (vec![1, 2, 2], vec![1, 1, 1]),
        (vec![2, 2], vec![2, 1]),
        (vec![1, 2, 3], vec![1, 0, 2]),
    ]
    .into_iter()
    .map(|(v, w)| QuiverSetting::new(v, w).expect("valid setting"))
    .collect()
}

/// Runs the four Φ properties on `cases` instances cycling through
/// `settings`.
pub fn phi_properties(
    settings: &[QuiverSetting],
    cases: usize,
    seed: u64,
    conv: SignConvention,
) -> Result<Vec<PropertyOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = [
        "moment_map_preserved",
        "rho_equivariance",
        "torus_equivariance",
        "stability_preserved",
    ]
    .map(|name| PropertyOutcome {
        name,
        cases: 0,
        failures: Vec::new(),
    });
    for c in 0..cases {
        let s = &settings[c % settings.len()];
        let step = embedded_dims(s)?;
        let tgt = &step.target;
        let case_seed = seed.wrapping_mul(1_000_003).wrapping_add(c as u64);
        let r = random_representation(s, case_seed, Constraint::MomentZeroAndStable)?;
        let phi = |r: &Representation| embed_rep_step_with(&step, r, conv);
        let pr = phi(&r)?;
        let tag = |what: &str| format!("case {c}, v={:?}, w={:?}: {what}", s.v, s.w);

        out[0].cases += 1;
        if !moment_map(tgt, &pr)?.iter().all(|mu| mu.is_zero()) {
            out[0].failures.push(tag("μ(Φ(r)) ≠ 0"));
        }

        out[1].cases += 1;
        let g = random_group_element(s, &mut rng);
        if phi(&group_act(s, &g, &r)?)? != group_act(tgt, &rho(&step, &g)?, &pr)? {
            out[1].failures.push(tag("Φ(g·r) ≠ ρ(g)·Φ(r)"));
        }

        out[2].cases += 1;
        let t = random_torus_point(s, &mut rng);
        let lhs = phi(&torus_act(s, &t, &r)?)?;
        let rhs = group_act(
            tgt,
            &equivariance_witness(&step, &t)?,
            &torus_act(tgt, &iota(&step, &t), &pr)?,
        )?;
        if lhs != rhs {
            out[2].failures.push(tag("Φ(t·r) ≠ g_t·(ι(t)·Φ(r))"));
        }

        out[3].cases += 1;
        if !is_semistable(tgt, &pr)? {
            out[3].failures.push(tag("Φ(r) is not semistable"));
        }
    }
    Ok(out.into())
}
