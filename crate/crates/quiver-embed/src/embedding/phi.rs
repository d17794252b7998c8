use super::step::{embed_full, EmbeddingStep};
use crate::exact_algebra::{RationalMatrix as M, Q};
use crate::quiver_rep::{QuiverSetting, Representation};
use crate::{Error, Result};

/// Sign pattern of the blocks of `Φ`.
///
/// `Consistent` satisfies `μ(Φ(r))_i = diag(μ(r)_i, 0)` exactly, hence
/// preserves the zero level of the moment map for every pivot and every
/// framing count. `Literal` uses `−X` and `−Id` on the tail edges and an
/// overall minus on the new framing map `J'`. It preserves the zero level
/// only in the smallest cases and is kept as a control.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignConvention {
    #[default]
    Consistent,
    Literal,
}

/// `Φ` for one step with the default sign convention.
pub fn embed_rep_step(step: &EmbeddingStep, r: &Representation) -> Result<Representation> {
    embed_rep_step_with(step, r, SignConvention::Consistent)
}

/// Applies the steps of [`embed_full`] in turn.
pub fn embed_rep_full(
    s: &QuiverSetting,
    r: &Representation,
) -> Result<(Vec<EmbeddingStep>, Representation)> {
    let chain = embed_full(s)?;
    let mut cur = r.clone();
    for step in &chain {
        cur = embed_rep_step(step, &cur)?;
    }
    Ok((chain, cur))
}

pub fn embed_rep_step_with(
    step: &EmbeddingStep,
    r: &Representation,
    conv: SignConvention,
) -> Result<Representation> {
    let s = &step.source;
    r.check_shapes(s)?;
    let (k, n, m) = (step.k, step.n, s.m);
    if n < 2 || s.w_at(k + 1) == 0 {
        return Err(Error::NoPivot);
    }
    // Relative accessors, p = 1..n.
    let v = |p: usize| s.v_at(k + p);
    let xr = |p: usize| &r.x[k + p - 1];
    let yr = |p: usize| &r.y[k + p - 1];
    let a1 = r.i[k].col(0);
    let b1 = r.j[k].row(0);

    // up[p] = X_{p−1}⋯X_1 A_1, down[p] = B_1 Y_1⋯Y_{p−1}, c[p] = down[p]·up[p].
    let mut up = vec![M::zeros(0, 0), a1.clone()];
    let mut down = vec![M::zeros(0, 0), b1.clone()];
    for p in 1..n {
        up.push(xr(p) * &up[p]);
        down.push(&down[p] * yr(p));
    }
    let c: Vec<Q> = (0..=n)
        .map(|p| {
            if p == 0 {
                Q::from_integer(0.into())
            } else {
                (&down[p] * &up[p])[(0, 0)].clone()
            }
        })
        .collect();
    let c_row = |p: usize| M::from_rows(vec![c[1..p].to_vec()], p - 1).expect("C row");

    let (edge_sign, j_sign) = match conv {
        SignConvention::Consistent => (Q::from_integer((-1).into()), Q::from_integer(1.into())),
        SignConvention::Literal => (Q::from_integer(1.into()), Q::from_integer((-1).into())),
    };
    let minus_edge = -&edge_sign;

    let mut out = r.clone();
    for p in 1..n {
        // X'_p : V_p ⊕ C^{p−1} → V_{p+1} ⊕ C^p.
        let grid = vec![
            vec![xr(p).scale(&minus_edge), M::zeros(v(p + 1), p - 1)],
            vec![down[p].scale(&edge_sign), c_row(p).scale(&edge_sign)],
            vec![M::zeros(p - 1, v(p)), M::identity(p - 1).scale(&minus_edge)],
        ];
        out.x[k + p - 1] = M::blocks(&[v(p + 1), 1, p - 1], &[v(p), p - 1], &grid)?;
        // Y'_p : V_{p+1} ⊕ C^p → V_p ⊕ C^{p−1}.
        let grid = vec![
            vec![yr(p).clone(), M::zeros(v(p), p - 1), up[p].clone()],
            vec![
                M::zeros(p - 1, v(p + 1)),
                M::identity(p - 1),
                M::zeros(p - 1, 1),
            ],
        ];
        out.y[k + p - 1] = M::blocks(&[v(p), p - 1], &[v(p + 1), p - 1, 1], &grid)?;
    }
    // Framing at the pivot loses its first slot.
    let w1 = s.w_at(k + 1);
    out.i[k] = r.i[k].submatrix(0..v(1), 1..w1);
    out.j[k] = r.j[k].submatrix(1..w1, 0..v(1));
    for p in 2..n {
        out.i[k + p - 1] = M::zeros(v(p) + p - 1, 0);
        out.j[k + p - 1] = M::zeros(0, v(p) + p - 1);
    }
    // New framings at the last vertex: W_m ⊕ C^n.
    let wn = s.w_at(m);
    let grid = vec![
        vec![r.i[m - 1].clone(), M::zeros(v(n), n - 1), up[n].clone()],
        vec![M::zeros(n - 1, wn), M::identity(n - 1), M::zeros(n - 1, 1)],
    ];
    out.i[m - 1] = M::blocks(&[v(n), n - 1], &[wn, n - 1, 1], &grid)?;
    let grid = vec![
        vec![r.j[m - 1].clone(), M::zeros(wn, n - 1)],
        vec![down[n].clone(), c_row(n)],
        vec![M::zeros(n - 1, v(n)), -&M::identity(n - 1)],
    ];
    out.j[m - 1] = M::blocks(&[wn, 1, n - 1], &[v(n), n - 1], &grid)?.scale(&j_sign);
    out.check_shapes(&step.target)?;
    Ok(out)
}

/// `ρ_i(g_i) = diag(g_i, Id_{i−k−1})`.
pub fn rho(step: &EmbeddingStep, g: &[M]) -> Result<Vec<M>> {
    let s = &step.source;
    if g.len() != s.m || g.iter().zip(&s.v).any(|(gi, vi)| gi.shape() != (*vi, *vi)) {
        return Err(Error::ShapeMismatch(
            "group element does not match source v".into(),
        ));
    }
    Ok(g.iter()
        .enumerate()
        .map(|(idx, gi)| {
            let extra = step.target.v[idx] - s.v[idx];
            if extra == 0 {
                gi.clone()
            } else {
                let vi = s.v[idx];
                M::blocks(
                    &[vi, extra],
                    &[vi, extra],
                    &[
                        vec![gi.clone(), M::zeros(vi, extra)],
                        vec![M::zeros(extra, vi), M::identity(extra)],
                    ],
                )
                .expect("rho blocks")
            }
        })
        .collect())
}
