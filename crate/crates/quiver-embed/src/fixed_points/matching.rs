use std::collections::BTreeMap;

use super::tuple::{Partition, VWTuple, YoungBox};
use crate::embedding::EmbeddingStep;
use crate::{Error, Result};

/// The fixed point `μ` of the target matched to `λ`.
///
/// The partition at the removed framing slot `(k+1, 1)` is traded for `n`
/// one-row partitions at the new last-vertex slots: slot `w_m + j` gets the
/// row of length `λ^{k+1,1}_j + n − j`. Other slots at vertex `k+1` move down
/// by one; everything else is copied.
pub fn match_fixed_point(step: &EmbeddingStep, fp: &VWTuple) -> Result<VWTuple> {
    if fp.setting() != &step.source {
        return Err(Error::ShapeMismatch(
            "fixed point does not belong to the step source".into(),
        ));
    }
    let (k, n, m) = (step.k, step.n, step.m());
    let wm = step.source.w_at(m);
    let mut out = BTreeMap::new();
    for (&(i, j), p) in fp.partitions() {
        if i == k + 1 {
            if j >= 2 {
                out.insert((i, j - 1), p.clone());
            }
        } else {
            out.insert((i, j), p.clone());
        }
    }
    let lam = fp.partition(k + 1, 1);
    for j in 1..=n {
        out.insert((m, wm + j), Partition::row(lam.part(j) + n - j));
    }
    VWTuple::new(&step.target, out)
}

/// The inclusion of the boxes of `λ` into those of `μ = match_fixed_point(λ)`.
///
/// Row `j` of `λ^{k+1,1}` goes to the last `λ_j` cells of the one-row
/// partition at slot `(m, w_m + j)`; the first `n − j` cells there are not hit.
pub fn box_inclusion(
    step: &EmbeddingStep,
    lambda: &VWTuple,
    mu: &VWTuple,
) -> Result<BTreeMap<YoungBox, YoungBox>> {
    if &match_fixed_point(step, lambda)? != mu {
        return Err(Error::ShapeMismatch("μ is not the match of λ".into()));
    }
    let (k, n, m) = (step.k, step.n, step.m());
    let wm = step.source.w_at(m);
    Ok(lambda
        .boxes()
        .into_iter()
        .map(|b| {
            let img = match b.host {
                (i, 1) if i == k + 1 => YoungBox {
                    host: (m, wm + b.row),
                    row: 1,
                    col: n - b.row + b.col,
                },
                (i, j) if i == k + 1 => YoungBox {
                    host: (i, j - 1),
                    ..b
                },
                _ => b,
            };
            (b, img)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::embedded_dims;
    use crate::fixed_points::gamma;
    use crate::quiver_rep::QuiverSetting;

    #[test]
    fn two_vertex_matches() {
        let s = QuiverSetting::new(vec![1, 1], vec![1, 1]).unwrap();
        let step = embedded_dims(&s).unwrap();
        let cases: [(&[&[usize]], &str); 3] = [
            (&[&[1], &[1]], "((1),(2),∅)"),
            (&[&[1, 1], &[]], "(∅,(2),(1))"),
            (&[&[], &[2]], "((2),(1),∅)"),
        ];
        for (parts, want) in cases {
            let lam = VWTuple::from_list(&s, parts).unwrap();
            assert_eq!(match_fixed_point(&step, &lam).unwrap().to_string(), want);
        }
    }

    #[test]
    fn inclusion_preserves_gamma_and_shifts_delta() {
        let s = QuiverSetting::new(vec![1, 2, 2], vec![1, 1, 1]).unwrap();
        let step = embedded_dims(&s).unwrap();
        for lam in crate::fixed_points::enumerate_fixed_points(&s).unwrap() {
            let mu = match_fixed_point(&step, &lam).unwrap();
            let inc = box_inclusion(&step, &lam, &mu).unwrap();
            let mu_boxes = mu.boxes();
            for (b, img) in &inc {
                assert!(mu_boxes.contains(img));
                assert_eq!(gamma(b), gamma(img));
                let shift = if b.host == (step.k + 1, 1) {
                    b.row as i64 - step.n as i64
                } else {
                    0
                };
                assert_eq!(b.delta(), img.delta() + shift);
            }
        }
    }
}
