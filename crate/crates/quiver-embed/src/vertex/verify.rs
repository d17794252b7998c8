use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::coefficient::{coefficient_parts, vertex_coefficient_unchecked};
use super::degrees::{enumerate_admissible, is_admissible, DegreeAssignment};
use super::series::vertex_series;
use crate::embedding::{embedded_dims, iota_star, EmbeddingStep, TorusEmbedding};
use crate::exact_algebra::{
    format_rational, pow_i, FactoredFunction, Monomial, Point, PointSampler, Symbol, Q,
};
use crate::fixed_points::{
    box_inclusion, enumerate_fixed_points, match_fixed_point, VWTuple, YoungBox,
};
use crate::quiver_rep::QuiverSetting;
use crate::{Error, Result};

/// Powers of `q` multiplying each `z_i`: `z_i ↦ z_i q^{s_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ZShift(pub Vec<i64>);

impl ZShift {
    /// `q^{−1}` on `z_j` for `k+1 ≤ j < m`, `q^{n−1}` on `z_m`.
    pub fn main_theorem(step: &EmbeddingStep) -> Self {
        Self::with_last(step, step.n as i64 - 1)
    }

    /// The same with `q^{n−2}` on `z_m`. The competing reading; it fails.
    pub fn final_display(step: &EmbeddingStep) -> Self {
        Self::with_last(step, step.n as i64 - 2)
    }

    fn with_last(step: &EmbeddingStep, last: i64) -> Self {
        let m = step.m();
        ZShift(
            (1..=m)
                .map(|j| {
                    if j == m {
                        last
                    } else if j > step.k {
                        -1
                    } else {
                        0
                    }
                })
                .collect(),
        )
    }

    pub fn exponent(&self, zdeg: &[i64]) -> i64 {
        self.0.iter().zip(zdeg).map(|(s, z)| s * z).sum()
    }
}

/// `ι*` applied to a function of the target parameters.
pub fn specialize_term(step: &EmbeddingStep, f: &FactoredFunction) -> FactoredFunction {
    iota_star(step).apply_ff(f)
}

/// Specializes and reports how many unit factors arose on each side before
/// cancellation.
fn specialize_counting(emb: &TorusEmbedding, f: &FactoredFunction) -> (FactoredFunction, i64, i64) {
    let (mut up, mut down) = (0, 0);
    for (m, k) in f.factors() {
        if emb.apply(m).is_one() {
            if *k > 0 {
                up += k;
            } else {
                down -= k;
            }
        }
    }
    (emb.apply_ff(f), up, down)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Layer {
    pub checked: usize,
    pub failures: Vec<Value>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PerTermLayer {
    pub checked: usize,
    /// Terms settled by equality of factored forms.
    pub fast_path: usize,
    /// Terms inside the image that specialize to zero; their pullback must
    /// vanish on the source side too.
    pub specialized_to_zero: usize,
    pub failures: Vec<Value>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DenominatorLayer {
    /// Terms in which `ι*` produced `1 − 1` both upstairs and downstairs.
    pub unit_cancellations: usize,
    pub identical_poles: Vec<Value>,
}

/// Outcome of comparing `ι*(V'|_μ)` with the shifted `V|_λ`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub fixed_point: Value,
    pub matched: Value,
    pub vanishing: Layer,
    pub per_term: PerTermLayer,
    pub aggregate: Layer,
    pub denominators: DenominatorLayer,
    pub shift_used: Vec<i64>,
    pub passed: bool,
}

impl Report {
    fn finish(mut self) -> Self {
        self.passed = self.vanishing.failures.is_empty()
            && self.per_term.failures.is_empty()
            && self.aggregate.failures.is_empty()
            && self.denominators.identical_poles.is_empty();
        self
    }
}

fn q_power(p: &Point, e: i64) -> Q {
    pow_i(&p.value(Symbol::Q), e)
}

fn eval(f: &FactoredFunction, p: &Point) -> Result<Q> {
    Ok(f.eval(p)?.value())
}

fn strs(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Checks `ι*(C^μ_d) = C^λ_d q^{s·zdeg}` for every admissible `d` of
/// `μ = match_fixed_point(λ)` with `Σ d ≤ bound`, the vanishing of terms
/// supported off the image of `λ`, and the per-z-degree sums.
///
/// Fails with [`Error::PoleAtPoint`] if some point hits a denominator.
pub fn verify_main_theorem(
    step: &EmbeddingStep,
    lambda: &VWTuple,
    bound: i64,
    points: &[Point],
    shift: &ZShift,
) -> Result<Report> {
    let m = step.m();
    if shift.0.len() != m {
        return Err(Error::Input(format!(
            "shift has length {}, expected {m}",
            shift.0.len()
        )));
    }
    let mu = match_fixed_point(step, lambda)?;
    let inc = box_inclusion(step, lambda, &mu)?;
    let back: BTreeMap<YoungBox, YoungBox> = inc.iter().map(|(l, u)| (*u, *l)).collect();
    let emb = iota_star(step);

    let mut rep = Report {
        fixed_point: lambda.to_json(),
        matched: mu.to_json(),
        vanishing: Layer::default(),
        per_term: PerTermLayer::default(),
        aggregate: Layer::default(),
        denominators: DenominatorLayer::default(),
        shift_used: shift.0.clone(),
        passed: false,
    };
    let zero = || vec![Q::from_integer(0.into()); points.len()];
    let mut lhs_sums: BTreeMap<Vec<i64>, Vec<Q>> = BTreeMap::new();

    for d in enumerate_admissible(&mu, bound) {
        let zdeg = d.zdeg(m);
        let (pulled, up, down) = specialize_counting(&emb, &vertex_coefficient_unchecked(&mu, &d));
        if up > 0 && down > 0 {
            rep.denominators.unit_cancellations += 1;
        }
        if pulled.has_identical_pole() {
            rep.denominators
                .identical_poles
                .push(json!({ "degrees": d.to_json() }));
            continue;
        }
        let sums = lhs_sums.entry(zdeg.clone()).or_insert_with(zero);
        for (acc, p) in sums.iter_mut().zip(points) {
            *acc += eval(&pulled, p)?;
        }

        let outside = d.0.iter().any(|(b, x)| *x != 0 && !back.contains_key(b));
        if outside {
            rep.vanishing.checked += 1;
            if !pulled.is_identically_zero() {
                rep.vanishing
                    .failures
                    .push(json!({ "degrees": d.to_json(), "specialized": pulled.to_string() }));
            }
            continue;
        }

        rep.per_term.checked += 1;
        let dl = DegreeAssignment(back.iter().map(|(u, l)| (*l, d.get(u))).collect());
        let lam_coeff = vertex_coefficient_unchecked(lambda, &dl);
        let e = shift.exponent(&zdeg);
        if pulled.is_identically_zero() {
            rep.per_term.specialized_to_zero += 1;
            if is_admissible(lambda, &dl) && !lam_coeff.is_identically_zero() {
                rep.per_term.failures.push(json!({
                    "degrees": d.to_json(),
                    "reason": "specializes to zero but the source coefficient does not vanish",
                }));
            }
            continue;
        }
        if !is_admissible(lambda, &dl) {
            rep.per_term.failures.push(json!({
                "degrees": d.to_json(),
                "reason": "survives specialization but pulls back to inadmissible degrees",
            }));
            continue;
        }
        let rhs = lam_coeff.mul(&FactoredFunction::monomial(Monomial::q(e)));
        if pulled == rhs {
            rep.per_term.fast_path += 1;
            continue;
        }
        let mut l = Vec::new();
        let mut r = Vec::new();
        for p in points {
            l.push(eval(&pulled, p)?);
            r.push(eval(&lam_coeff, p)? * q_power(p, e));
        }
        if l != r {
            rep.per_term.failures.push(json!({
                "degrees": d.to_json(),
                "lhs": strs(&l),
                "rhs": strs(&r),
            }));
        }
    }

    let mut rhs_sums: BTreeMap<Vec<i64>, Vec<Q>> = BTreeMap::new();
    for t in vertex_series(lambda, bound).terms {
        let sums = rhs_sums.entry(t.zdeg.clone()).or_insert_with(zero);
        let e = shift.exponent(&t.zdeg);
        for (acc, p) in sums.iter_mut().zip(points) {
            *acc += eval(&t.coeff, p)? * q_power(p, e);
        }
    }
    let keys: BTreeSet<Vec<i64>> = lhs_sums.keys().chain(rhs_sums.keys()).cloned().collect();
    for z in keys {
        rep.aggregate.checked += 1;
        let l = lhs_sums.get(&z).cloned().unwrap_or_else(zero);
        let r = rhs_sums.get(&z).cloned().unwrap_or_else(zero);
        if l != r {
            rep.aggregate
                .failures
                .push(json!({ "zdeg": z, "lhs": strs(&l), "rhs": strs(&r) }));
        }
    }
    Ok(rep.finish())
}

/// Sampling and retry policy for [`verify_fixed_point`] and
/// [`verify_setting`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub points: usize,
    pub retries: usize,
    pub seed: u64,
    pub range: (i64, i64),
    /// Defaults to [`ZShift::main_theorem`].
    pub shift: Option<ZShift>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            points: 3,
            retries: 5,
            seed: 0,
            range: crate::exact_algebra::DEFAULT_RANGE,
            shift: None,
        }
    }
}

fn verify_with_sampler(
    step: &EmbeddingStep,
    lambda: &VWTuple,
    bound: i64,
    opts: &VerifyOptions,
    sampler: &mut PointSampler,
) -> Result<Report> {
    let shift = opts
        .shift
        .clone()
        .unwrap_or_else(|| ZShift::main_theorem(step));
    for _ in 0..=opts.retries {
        let points: Vec<Point> = (0..opts.points)
            .map(|_| sampler.sample(step.source.symbols()))
            .collect();
        match verify_main_theorem(step, lambda, bound, &points, &shift) {
            Err(Error::PoleAtPoint) => continue,
            other => return other,
        }
    }
    Err(Error::EvaluationDegenerate(opts.retries + 1))
}

/// [`verify_main_theorem`] at freshly sampled points, resampling when a
/// point lands on a pole.
pub fn verify_fixed_point(
    step: &EmbeddingStep,
    lambda: &VWTuple,
    bound: i64,
    opts: &VerifyOptions,
) -> Result<Report> {
    verify_with_sampler(
        step,
        lambda,
        bound,
        opts,
        &mut PointSampler::with_range(opts.seed, opts.range),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct SettingReport {
    pub step: EmbeddingStep,
    pub bound: i64,
    pub shift_used: Vec<i64>,
    pub reports: Vec<Report>,
    pub passed: bool,
}

/// Verifies every fixed point of `s` across its first embedding step.
pub fn verify_setting(
    s: &QuiverSetting,
    bound: i64,
    opts: &VerifyOptions,
) -> Result<SettingReport> {
    let step = embedded_dims(s)?;
    let shift = opts
        .shift
        .clone()
        .unwrap_or_else(|| ZShift::main_theorem(&step));
    let opts = VerifyOptions {
        shift: Some(shift.clone()),
        ..opts.clone()
    };
    let mut sampler = PointSampler::with_range(opts.seed, opts.range);
    let reports = enumerate_fixed_points(s)?
        .iter()
        .map(|lam| verify_with_sampler(&step, lam, bound, &opts, &mut sampler))
        .collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    Ok(SettingReport {
        step,
        bound,
        shift_used: shift.0,
        reports,
        passed,
    })
}

/// `ι*(X^μ)/X^λ`, `ι*(Y^μ)/Y^λ`, `ι*(Z^μ)/Z^λ` for an assignment `d` of `μ`
/// supported on the image of `λ`; edges, framing and same-vertex blocks.
pub fn xyz_diagnostics(
    step: &EmbeddingStep,
    lambda: &VWTuple,
    mu: &VWTuple,
    d: &DegreeAssignment,
) -> Result<[FactoredFunction; 3]> {
    let inc = box_inclusion(step, lambda, mu)?;
    let back: BTreeMap<YoungBox, YoungBox> = inc.iter().map(|(l, u)| (*u, *l)).collect();
    if d.0.iter().any(|(b, x)| *x != 0 && !back.contains_key(b)) {
        return Err(Error::InadmissibleDegrees(
            "degrees outside the image of λ".into(),
        ));
    }
    let dl = DegreeAssignment(back.iter().map(|(u, l)| (*l, d.get(u))).collect());
    let emb = iota_star(step);
    let pm = coefficient_parts(mu, d);
    let pl = coefficient_parts(lambda, &dl);
    Ok([
        emb.apply_ff(&pm.edges).div(&pl.edges),
        emb.apply_ff(&pm.framing).div(&pl.framing),
        emb.apply_ff(&pm.loops).div(&pl.loops),
    ])
}
