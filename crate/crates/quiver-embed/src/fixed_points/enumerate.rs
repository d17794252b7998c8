use std::collections::BTreeMap;

use super::tuple::{Partition, VWTuple};
use crate::quiver_rep::QuiverSetting;
use crate::{Error, Result};

/// Default cap on `|v|` for enumeration.
pub const DEFAULT_BOX_LIMIT: usize = 24;

/// All `(v,w)`-tuples of partitions for `s`.
///
/// Slots are filled in (vertex, slot) order; each slot runs through its
/// partitions in reverse-lexicographic order.
pub fn enumerate_fixed_points(s: &QuiverSetting) -> Result<Vec<VWTuple>> {
    enumerate_fixed_points_with_limit(s, DEFAULT_BOX_LIMIT)
}

pub fn enumerate_fixed_points_with_limit(s: &QuiverSetting, limit: usize) -> Result<Vec<VWTuple>> {
    let total: usize = s.v.iter().sum();
    if total > limit {
        return Err(Error::LimitExceeded { total, limit });
    }
    let slots: Vec<(usize, usize)> = (1..=s.m)
        .flat_map(|i| (1..=s.w_at(i)).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut remaining = s.v.clone();
    let mut chosen = Vec::with_capacity(slots.len());
    fill(s, &slots, &mut remaining, &mut chosen, &mut out);
    Ok(out)
}

fn fill(
    s: &QuiverSetting,
    slots: &[(usize, usize)],
    remaining: &mut Vec<usize>,
    chosen: &mut Vec<Partition>,
    out: &mut Vec<VWTuple>,
) {
    let k = chosen.len();
    if k == slots.len() {
        if remaining.iter().all(|r| *r == 0) {
            let map: BTreeMap<_, _> = slots.iter().copied().zip(chosen.iter().cloned()).collect();
            out.push(VWTuple::from_validated(s.clone(), map));
        }
        return;
    }
    let host = slots[k].0;
    for p in partitions_at(s.m, host, remaining) {
        take(host, &p, remaining, -1);
        chosen.push(p.clone());
        fill(s, slots, remaining, chosen, out);
        chosen.pop();
        take(host, &p, remaining, 1);
    }
}

fn take(host: usize, p: &Partition, remaining: &mut [usize], sign: i64) {
    for (r, c) in p.cells() {
        let g = host + r - c;
        remaining[g - 1] = (remaining[g - 1] as i64 + sign) as usize;
    }
}

/// Partitions hosted at vertex `host` whose boxes fit in `budget`, in
/// reverse-lexicographic order.
fn partitions_at(m: usize, host: usize, budget: &[usize]) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    let mut budget = budget.to_vec();
    grow(m, host, usize::MAX, &mut parts, &mut budget, &mut out);
    out
}

fn grow(
    m: usize,
    host: usize,
    max_part: usize,
    parts: &mut Vec<usize>,
    budget: &mut [usize],
    out: &mut Vec<Partition>,
) {
    // Cell `c` of row `r` lies over vertex `host + r − c`.
    let top = host + parts.len();
    if top <= m {
        let mut longest = 0;
        while longest < max_part.min(top) && budget[top - longest - 1] > 0 {
            longest += 1;
        }
        for l in (1..=longest).rev() {
            (1..=l).for_each(|c| budget[top - c] -= 1);
            parts.push(l);
            grow(m, host, l, parts, budget, out);
            parts.pop();
            (1..=l).for_each(|c| budget[top - c] += 1);
        }
    }
    out.push(Partition(parts.clone()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(v: &[usize], w: &[usize]) -> Vec<String> {
        let s = QuiverSetting::new(v.to_vec(), w.to_vec()).unwrap();
        enumerate_fixed_points(&s)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(shapes(&[1], &[2]), ["((1),∅)", "(∅,(1))"]);
        assert_eq!(shapes(&[0], &[1]), ["(∅)"]);
        assert_eq!(
            shapes(&[1, 1], &[1, 1]),
            ["((1,1),∅)", "((1),(1))", "(∅,(2))"]
        );
    }

    #[test]
    fn reverse_lex_within_a_slot() {
        assert_eq!(shapes(&[1, 2, 1], &[0, 0, 0]).len(), 0);
        assert_eq!(shapes(&[1, 1, 1], &[0, 1, 0]), ["((2,1))"]);
        assert_eq!(shapes(&[0, 2], &[0, 2]), ["((1),(1))"]);
        assert_eq!(shapes(&[1, 2], &[0, 2]), ["((2),(1))", "((1),(2))"]);
        let s = QuiverSetting::new(vec![1, 1, 1], vec![1, 0, 0]).unwrap();
        assert_eq!(enumerate_fixed_points(&s).unwrap().len(), 1);
    }

    #[test]
    fn limit_is_enforced() {
        let s = QuiverSetting::new(vec![13, 12], vec![0, 1]).unwrap();
        assert_eq!(
            enumerate_fixed_points(&s),
            Err(Error::LimitExceeded {
                total: 25,
                limit: 24
            })
        );
    }
}
