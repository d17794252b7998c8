//! Checks that pulling back the vertex function of the bigger variety gives
//! the original one up to a q-shift of z, for both candidate shifts.

use quiver_embed::embedding::embedded_dims;
use quiver_embed::quiver_rep::QuiverSetting;
use quiver_embed::vertex::{verify_setting, VerifyOptions, ZShift};

fn main() -> quiver_embed::Result<()> {
    let settings = [
        (vec![1, 1], vec![1, 1]),
        (vec![1, 2], vec![2, 1]),
        (vec![1, 1, 1], vec![1, 0, 1]),
    ];
    for (v, w) in settings {
        let s = QuiverSetting::new(v, w)?;
        let step = embedded_dims(&s)?;
        for (name, shift) in [
            ("main", ZShift::main_theorem(&step)),
            ("final display", ZShift::final_display(&step)),
        ] {
            let opts = VerifyOptions {
                seed: 7,
                shift: Some(shift.clone()),
                ..Default::default()
            };
            let rep = verify_setting(&s, 3, &opts)?;
            let failures: usize = rep
                .reports
                .iter()
                .map(|r| r.per_term.failures.len() + r.aggregate.failures.len())
                .sum();
            let terms: usize = rep
                .reports
                .iter()
                .map(|r| r.per_term.checked + r.vanishing.checked)
                .sum();
            println!(
                "v={:?} w={:?} shift {:?} ({name}): {} over {terms} terms, {failures} failures",
                s.v,
                s.w,
                shift.0,
                if rep.passed { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
