use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rep::{group_act, moment_map, torus_act, Representation};
use super::setting::{QuiverSetting, TorusPoint};
use super::stability::is_semistable;
use crate::exact_algebra::{RationalMatrix as M, Q};
use crate::fixed_points::{enumerate_fixed_points, gamma, VWTuple, YoungBox};
use crate::{Error, Result};

/// Extra requirement on a random representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// `μ = 0` and `θ⁻`-semistable, exactly.
    MomentZeroAndStable,
}

fn small_rational(rng: &mut impl Rng) -> Q {
    Q::new(
        BigInt::from(rng.gen_range(-5..=5)),
        BigInt::from(rng.gen_range(1..=3)),
    )
}

fn nonzero_rational(rng: &mut impl Rng) -> Q {
    loop {
        let x = small_rational(rng);
        if x != Q::from_integer(0.into()) {
            return x;
        }
    }
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> M {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| small_rational(rng)).collect())
        .collect();
    M::from_rows(data, cols).expect("rectangular")
}

/// A random invertible matrix per vertex.
pub fn random_group_element(s: &QuiverSetting, rng: &mut impl Rng) -> Vec<M> {
    s.v.iter()
        .map(|&d| loop {
            let g = random_matrix(rng, d, d);
            if g.rank() == d {
                break g;
            }
        })
        .collect()
}

/// A random torus point with nonzero coordinates.
pub fn random_torus_point(s: &QuiverSetting, rng: &mut impl Rng) -> TorusPoint {
    TorusPoint {
        a: s.w
            .iter()
            .map(|&w| (0..w).map(|_| nonzero_rational(rng)).collect())
            .collect(),
        hbar: nonzero_rational(rng),
    }
}

/// Deterministic random representation from `seed`.
///
/// With [`Constraint::MomentZeroAndStable`], `X` and `I` are drawn at random
/// and `(Y, J)` is a random solution of the linear system `μ = 0`, redrawn
/// until the result is semistable. If that keeps failing, a random fixed
/// point is put in coordinates and moved by a random group element and
/// torus point.
pub fn random_representation(
    s: &QuiverSetting,
    seed: u64,
    constraint: Constraint,
) -> Result<Representation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match constraint {
        Constraint::None => {
            let m = s.m;
            Ok(Representation {
                x: (0..m - 1)
                    .map(|i| random_matrix(&mut rng, s.v[i + 1], s.v[i]))
                    .collect(),
                y: (0..m - 1)
                    .map(|i| random_matrix(&mut rng, s.v[i], s.v[i + 1]))
                    .collect(),
                i: (0..m)
                    .map(|i| random_matrix(&mut rng, s.v[i], s.w[i]))
                    .collect(),
                j: (0..m)
                    .map(|i| random_matrix(&mut rng, s.w[i], s.v[i]))
                    .collect(),
            })
        }
        Constraint::MomentZeroAndStable => {
            for _ in 0..32 {
                let r = solve_moment_zero(s, &mut rng);
                if is_semistable(s, &r)? {
                    return Ok(r);
                }
            }
            let fps = enumerate_fixed_points(s)?;
            if fps.is_empty() {
                return Err(Error::EmptyVariety {
                    v: s.v.clone(),
                    w: s.w.clone(),
                });
            }
            let fp = &fps[rng.gen_range(0..fps.len())];
            let base = representation_of_fixed_point(s, fp)?;
            let g = random_group_element(s, &mut rng);
            group_act(
                s,
                &g,
                &torus_act(s, &random_torus_point(s, &mut rng), &base)?,
            )
        }
    }
}

/// Random `X`, `I`, and a random point of the kernel of `(Y, J) ↦ μ`.
fn solve_moment_zero(s: &QuiverSetting, rng: &mut impl Rng) -> Representation {
    let mut r = Representation::zero(s);
    for i in 0..s.m - 1 {
        r.x[i] = random_matrix(rng, s.v[i + 1], s.v[i]);
    }
    for i in 0..s.m {
        r.i[i] = random_matrix(rng, s.v[i], s.w[i]);
    }
    // Unknowns: entries of Y_i (kind 0) and J_i (kind 1).
    let mut unknowns = Vec::new();
    for i in 0..s.m - 1 {
        unknowns.extend((0..s.v[i]).flat_map(|a| (0..s.v[i + 1]).map(move |b| (0, i, a, b))));
    }
    for i in 0..s.m {
        unknowns.extend((0..s.w[i]).flat_map(|a| (0..s.v[i]).map(move |b| (1, i, a, b))));
    }
    let one = Q::from_integer(1.into());
    let set = |r: &mut Representation, u: &(usize, usize, usize, usize), x: Q| match u.0 {
        0 => r.y[u.1][(u.2, u.3)] = x,
        _ => r.j[u.1][(u.2, u.3)] = x,
    };
    let columns: Vec<Vec<Q>> = unknowns
        .iter()
        .map(|u| {
            let mut e = r.clone();
            set(&mut e, u, one.clone());
            moment_map(s, &e)
                .expect("shapes")
                .iter()
                .flat_map(|mu| mu.entries().to_vec())
                .collect()
        })
        .collect();
    let eqs: usize = s.v.iter().map(|v| v * v).sum();
    let a = M::from_rows(
        (0..eqs)
            .map(|e| columns.iter().map(|c| c[e].clone()).collect())
            .collect(),
        unknowns.len(),
    )
    .expect("rectangular");
    let kernel = a.kernel();
    let coeffs = random_matrix(rng, kernel.cols(), 1);
    let sol = &kernel * &coeffs;
    for (k, u) in unknowns.iter().enumerate() {
        set(&mut r, u, sol[(k, 0)].clone());
    }
    r
}

fn boxes_by_vertex(s: &QuiverSetting, fp: &VWTuple) -> Vec<Vec<YoungBox>> {
    let mut index: Vec<Vec<YoungBox>> = vec![Vec::new(); s.m];
    for b in fp.boxes() {
        index[gamma(&b) as usize - 1].push(b);
    }
    index
}

/// Coordinates for a fixed point: `V_l` has a basis indexed by the boxes over
/// vertex `l` (in [`VWTuple::boxes`] order); `X` moves a box one row down,
/// `Y` one column right, `I` hits the corner of each partition and `J = 0`.
///
/// Every torus point fixes the result up to gauge: see [`fixed_point_gauge`].
pub fn representation_of_fixed_point(s: &QuiverSetting, fp: &VWTuple) -> Result<Representation> {
    if fp.setting() != s {
        return Err(Error::ShapeMismatch(
            "fixed point does not belong to the setting".into(),
        ));
    }
    let boxes = fp.boxes();
    let index = boxes_by_vertex(s, fp);
    let pos = |b: &YoungBox| -> Option<(usize, usize)> {
        let g = gamma(b);
        if g < 1 || g > s.m as i64 {
            return None;
        }
        let l = g as usize - 1;
        index[l].iter().position(|x| x == b).map(|p| (l, p))
    };
    let mut r = Representation::zero(s);
    let one = Q::from_integer(1.into());
    for b in &boxes {
        let (l, src) = pos(b).expect("box of the tuple");
        let down = YoungBox {
            row: b.row + 1,
            ..*b
        };
        if let Some((l2, dst)) = pos(&down) {
            debug_assert_eq!(l2, l + 1);
            r.x[l][(dst, src)] = one.clone();
        }
        let right = YoungBox {
            col: b.col + 1,
            ..*b
        };
        if let Some((l2, dst)) = pos(&right) {
            debug_assert_eq!(l2 + 1, l);
            r.y[l2][(dst, src)] = one.clone();
        }
        if b.row == 1 && b.col == 1 {
            let (i, j) = b.host;
            r.i[i - 1][(src, j - 1)] = one.clone();
        }
    }
    Ok(r)
}

/// `diag(a_□ ħ^{δ_□})` on each `V_l`, in the basis of
/// [`representation_of_fixed_point`]. With `r` that representation,
/// `t · r = g⁻¹ · r`; the diagonal entries are the tautological weights.
pub fn fixed_point_gauge(s: &QuiverSetting, fp: &VWTuple, t: &TorusPoint) -> Vec<M> {
    boxes_by_vertex(s, fp)
        .iter()
        .map(|bs| {
            let d: Vec<Q> = bs
                .iter()
                .map(|b| {
                    t.a_at(b.host.0, b.host.1) * crate::exact_algebra::pow_i(&t.hbar, b.delta())
                })
                .collect();
            M::diag(&d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver_rep::{is_semistable, moment_map};

    #[test]
    fn single_box_model() {
        let s = QuiverSetting::new(vec![1], vec![1]).unwrap();
        let fp = VWTuple::from_list(&s, &[&[1]]).unwrap();
        let r = representation_of_fixed_point(&s, &fp).unwrap();
        assert_eq!(r.i[0], M::from_i64(&[&[1]]));
        assert!(r.j[0].is_zero());
    }

    #[test]
    fn fixed_point_models_are_stable_with_zero_moment() {
        for (v, w) in [
            (vec![1, 1], vec![1, 1]),
            (vec![1, 2, 2], vec![1, 1, 1]),
            (vec![2, 3, 2], vec![0, 2, 0]),
        ] {
            let s = QuiverSetting::new(v, w).unwrap();
            for fp in enumerate_fixed_points(&s).unwrap() {
                let r = representation_of_fixed_point(&s, &fp).unwrap();
                assert!(moment_map(&s, &r).unwrap().iter().all(M::is_zero), "{fp}");
                assert!(is_semistable(&s, &r).unwrap(), "{fp}");
            }
        }
    }

    #[test]
    fn torus_acts_through_the_weight_gauge() {
        let s = QuiverSetting::new(vec![1, 2, 2], vec![1, 1, 1]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for fp in enumerate_fixed_points(&s).unwrap() {
            let r = representation_of_fixed_point(&s, &fp).unwrap();
            let t = random_torus_point(&s, &mut rng);
            let g = fixed_point_gauge(&s, &fp, &t);
            let ginv: Vec<M> = g.iter().map(|x| x.inverse().unwrap()).collect();
            assert_eq!(
                torus_act(&s, &t, &r).unwrap(),
                group_act(&s, &ginv, &r).unwrap()
            );
        }
    }

    #[test]
    fn seeded_generation_is_deterministic() {
        let s = QuiverSetting::new(vec![1, 2], vec![2, 1]).unwrap();
        for c in [Constraint::None, Constraint::MomentZeroAndStable] {
            let a = random_representation(&s, 9, c).unwrap();
            assert_eq!(a, random_representation(&s, 9, c).unwrap());
            a.check_shapes(&s).unwrap();
        }
        let r = random_representation(&s, 3, Constraint::MomentZeroAndStable).unwrap();
        assert!(moment_map(&s, &r).unwrap().iter().all(M::is_zero));
        let empty = QuiverSetting::new(vec![2], vec![1]).unwrap();
        assert!(matches!(
            random_representation(&empty, 0, Constraint::MomentZeroAndStable),
            Err(Error::EmptyVariety { .. })
        ));
    }

    #[test]
    fn constrained_samples_leave_the_fixed_locus() {
        let s = QuiverSetting::new(vec![1, 2, 2], vec![1, 1, 1]).unwrap();
        let mut with_j = 0;
        for seed in 0..20 {
            let r = random_representation(&s, seed, Constraint::MomentZeroAndStable).unwrap();
            assert!(moment_map(&s, &r).unwrap().iter().all(M::is_zero));
            assert!(is_semistable(&s, &r).unwrap());
            with_j += usize::from(r.j.iter().any(|j| !j.is_zero()));
        }
        assert!(with_j >= 15, "only {with_j} of 20 samples have J ≠ 0");
    }
}
