//! Torus fixed points as tuples of partitions and their images under one
//! embedding step.

use quiver_embed::embedding::embedded_dims;
use quiver_embed::fixed_points::{box_inclusion, enumerate_fixed_points, match_fixed_point};
use quiver_embed::quiver_rep::QuiverSetting;

fn main() -> quiver_embed::Result<()> {
    let s = QuiverSetting::new(vec![1, 2, 2], vec![1, 1, 1])?;
    let step = embedded_dims(&s)?;
    println!(
        "M({:?}, {:?}) -> M({:?}, {:?})",
        s.v, s.w, step.target.v, step.target.w
    );
    for lam in enumerate_fixed_points(&s)? {
        let mu = match_fixed_point(&step, &lam)?;
        println!("{lam}  ↦  {mu}");
        for (from, to) in box_inclusion(&step, &lam, &mu)? {
            if from != to {
                println!("    box {} -> {}", from.key(), to.key());
            }
        }
    }
    Ok(())
}
