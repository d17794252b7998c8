#![allow(dead_code)]

use std::collections::BTreeMap;

use quiver_embed::fixed_points::{gamma, VWTuple, YoungBox};
use quiver_embed::vertex::DegreeAssignment;

/// Literal rule: `d ≥ 0`, and `d_□ ≤ d_□'` for boxes of one partition with
/// `γ(□') = γ(□) ± 1` and height one larger.
pub fn brute_admissible(fp: &VWTuple, d: &DegreeAssignment) -> bool {
    let boxes = fp.boxes();
    let height = |b: &YoungBox| (b.row + b.col) as i64 - 2;
    boxes.iter().all(|b| d.get(b) >= 0)
        && boxes.iter().all(|b| {
            boxes.iter().all(|b2| {
                b.host != b2.host
                    || (gamma(b2) - gamma(b)).abs() != 1
                    || height(b2) != height(b) + 1
                    || d.get(b) <= d.get(b2)
            })
        })
}

/// Every assignment in `[lo, hi]^boxes`.
pub fn all_assignments(fp: &VWTuple, lo: i64, hi: i64) -> Vec<DegreeAssignment> {
    let mut out = vec![DegreeAssignment(BTreeMap::new())];
    for b in fp.boxes() {
        out = out
            .into_iter()
            .flat_map(|d| {
                (lo..=hi).map(move |x| {
                    let mut d = d.clone();
                    d.0.insert(b, x);
                    d
                })
            })
            .collect();
    }
    out
}

/// Admissible assignments with total at most `bound`, by filtering.
pub fn brute_enumerate(fp: &VWTuple, bound: i64) -> Vec<DegreeAssignment> {
    let mut v: Vec<DegreeAssignment> = all_assignments(fp, 0, bound)
        .into_iter()
        .filter(|d| d.total() <= bound && brute_admissible(fp, d))
        .collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}
