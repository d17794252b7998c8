//! Exact linear algebra underneath: moment maps, the stability test by
//! invariant closure, and gauge invariance.

use quiver_embed::exact_algebra::RationalMatrix as M;
use quiver_embed::quiver_rep::{
    group_act, is_semistable, moment_map, random_group_element, theta_minus_closure, QuiverSetting,
    Representation,
};
use rand::SeedableRng;

fn main() -> quiver_embed::Result<()> {
    // T*P^1: one vertex of dimension 1 framed twice.
    let s = QuiverSetting::new(vec![1], vec![2])?;
    let r = Representation {
        x: vec![],
        y: vec![],
        i: vec![M::from_i64(&[&[1, 0]])],
        j: vec![M::from_i64(&[&[0], &[1]])],
    };
    println!(
        "μ = {:?}, semistable: {}",
        moment_map(&s, &r)?[0].to_strings(),
        is_semistable(&s, &r)?
    );

    // Two vertices, framing only at the first: X must carry I onward.
    let s = QuiverSetting::new(vec![1, 1], vec![1, 0])?;
    let mut r = Representation::zero(&s);
    r.i[0] = M::from_i64(&[&[1]]);
    let dims: Vec<usize> = theta_minus_closure(&s, &r)?.iter().map(M::cols).collect();
    println!(
        "X = 0: closure dimensions {dims:?}, semistable: {}",
        is_semistable(&s, &r)?
    );
    r.x[0] = M::from_i64(&[&[3]]);
    let dims: Vec<usize> = theta_minus_closure(&s, &r)?.iter().map(M::cols).collect();
    println!(
        "X = 3: closure dimensions {dims:?}, semistable: {}",
        is_semistable(&s, &r)?
    );

    let g = random_group_element(&s, &mut rand_chacha::ChaCha8Rng::seed_from_u64(4));
    let moved = group_act(&s, &g, &r)?;
    println!(
        "after a change of basis: semistable: {}",
        is_semistable(&s, &moved)?
    );
    Ok(())
}
