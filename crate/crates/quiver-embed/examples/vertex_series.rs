//! The vertex function at one fixed point, term by term, and summed per
//! power of z at a random rational point.

use quiver_embed::exact_algebra::{format_rational as fmt, PointSampler};
use quiver_embed::fixed_points::VWTuple;
use quiver_embed::quiver_rep::QuiverSetting;
use quiver_embed::vertex::vertex_series;

fn main() -> quiver_embed::Result<()> {
    let s = QuiverSetting::new(vec![1, 1], vec![1, 1])?;
    let fp = VWTuple::from_list(&s, &[&[1], &[1]])?;
    let series = vertex_series(&fp, 2);
    println!("V at {fp}, total degree ≤ {}", series.bound);
    for t in &series.terms {
        println!("  z^{:?}: {}", t.zdeg, t.coeff);
    }
    let p = PointSampler::new(1).sample(s.symbols());
    println!("\nat a random point:");
    for (z, v) in series.aggregate(&p)? {
        println!("  z^{z:?}: {}", fmt(&v));
    }
    Ok(())
}
