//! Tautological characters at a fixed point, and how the torus map relates
//! them across an embedding step.

use quiver_embed::embedding::{embedded_dims, iota_star};
use quiver_embed::fixed_points::{match_fixed_point, VWTuple};
use quiver_embed::quiver_rep::QuiverSetting;

fn show(ms: &[quiver_embed::exact_algebra::Monomial]) -> String {
    ms.iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> quiver_embed::Result<()> {
    let s = QuiverSetting::new(vec![2, 3, 4, 4, 3, 1], vec![0, 0, 1, 2, 0, 0])?;
    let lam = VWTuple::from_list(&s, &[&[3, 3, 1], &[2, 2], &[4, 1, 1]])?;
    println!("λ = {lam}");
    for i in 1..=s.m {
        println!("  V_{i}: {}", show(&lam.character(i)));
    }

    let step = embedded_dims(&s)?;
    let mu = match_fixed_point(&step, &lam)?;
    let e = iota_star(&step);
    println!("\nμ = {mu}, pulled back:");
    for i in 1..=s.m {
        let mut pulled: Vec<_> = mu.character(i).iter().map(|m| e.apply(m)).collect();
        pulled.sort();
        println!("  V'_{i}: {}", show(&pulled));
    }
    Ok(())
}
