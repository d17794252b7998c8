//! Trades framings for dimension until everything is framed at the last
//! vertex, then pushes a random point of μ⁻¹(0) through the chain.

use quiver_embed::embedding::{embed_full, embed_rep_full};
use quiver_embed::quiver_rep::{
    is_semistable, moment_map, random_representation, Constraint, QuiverSetting,
};

fn main() -> quiver_embed::Result<()> {
    let s = QuiverSetting::new(vec![2, 3, 4, 4, 3, 1], vec![0, 0, 1, 2, 0, 0])?;
    println!("M({:?}, {:?})", s.v, s.w);
    for step in embed_full(&s)? {
        println!(
            "  k = {}, n = {}  ->  M({:?}, {:?})",
            step.k, step.n, step.target.v, step.target.w
        );
    }

    let small = QuiverSetting::new(vec![1, 2, 2], vec![1, 1, 1])?;
    let r = random_representation(&small, 1, Constraint::MomentZeroAndStable)?;
    let (chain, out) = embed_rep_full(&small, &r)?;
    let target = &chain.last().expect("at least one step").target;
    let mu_zero = moment_map(target, &out)?.iter().all(|m| m.is_zero());
    println!(
        "\nM({:?}, {:?}) embeds in M({:?}, {:?})",
        small.v, small.w, target.v, target.w
    );
    println!(
        "image has μ = 0: {mu_zero}, semistable: {}",
        is_semistable(target, &out)?
    );
    println!("{}", serde_json::to_string(&out).expect("json"));
    Ok(())
}
