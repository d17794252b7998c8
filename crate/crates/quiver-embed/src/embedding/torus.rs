use std::collections::BTreeMap;

use super::step::EmbeddingStep;
use crate::exact_algebra::{pow_i, FactoredFunction, Monomial, RationalMatrix as M, Symbol, Q};
use crate::quiver_rep::TorusPoint;
use crate::Result;

/// The pullback `ι*` on equivariant parameters, target symbols to monomials
/// in source symbols. `ħ` and `q` are fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusEmbedding {
    pub step: EmbeddingStep,
    map: BTreeMap<Symbol, Monomial>,
}

impl TorusEmbedding {
    pub fn image(&self, s: Symbol) -> Monomial {
        match s {
            Symbol::A(..) => self
                .map
                .get(&s)
                .cloned()
                .unwrap_or_else(|| panic!("{s} is not a target parameter")),
            other => Monomial::symbol(other),
        }
    }

    /// Images of `a_{i,j}` for the target framings, in (vertex, slot) order.
    pub fn framing_images(&self) -> impl Iterator<Item = (&Symbol, &Monomial)> {
        self.map.iter()
    }

    pub fn apply(&self, m: &Monomial) -> Monomial {
        m.substitute(|s| self.image(s))
    }

    pub fn apply_ff(&self, f: &FactoredFunction) -> FactoredFunction {
        f.substitute(|s| self.image(s))
    }
}

/// `ι*` for one step:
/// `b_{i,j} ↦ a_{i,j}` for `i ≤ k`, `b_{k+1,j} ↦ a_{k+1,j+1}`,
/// `b_{m,j} ↦ a_{m,j}` for `j ≤ w_m` and `b_{m,w_m+j} ↦ ħ^{j−n} a_{k+1,1}`.
pub fn iota_star(step: &EmbeddingStep) -> TorusEmbedding {
    let (k, n, m) = (step.k, step.n, step.m());
    let wm = step.source.w_at(m);
    let mut map = BTreeMap::new();
    for i in 1..=m {
        for j in 1..=step.target.w_at(i) {
            let img = if i <= k {
                Monomial::a(i, j)
            } else if i == k + 1 {
                Monomial::a(k + 1, j + 1)
            } else if j <= wm {
                Monomial::a(m, j)
            } else {
                let l = (j - wm) as i64;
                Monomial::hbar(l - n as i64).mul(&Monomial::a(k + 1, 1))
            };
            map.insert(Symbol::A(i, j), img);
        }
    }
    TorusEmbedding {
        step: step.clone(),
        map,
    }
}

/// `ι(t)` as a target torus point.
pub fn iota(step: &EmbeddingStep, t: &TorusPoint) -> TorusPoint {
    let emb = iota_star(step);
    let tgt = &step.target;
    let value = |m: &Monomial| -> Q {
        let mut v = Q::from_integer(m.sign().into());
        for (s, e) in m.exps() {
            let base = match s {
                Symbol::A(i, j) => t.a_at(*i, *j).clone(),
                Symbol::Hbar => t.hbar.clone(),
                Symbol::Q => unreachable!("q does not occur in a torus embedding"),
            };
            debug_assert!(e % 2 == 0);
            v *= pow_i(&base, e / 2);
        }
        v
    };
    TorusPoint {
        a: (1..=tgt.m)
            .map(|i| {
                (1..=tgt.w_at(i))
                    .map(|j| value(&emb.image(Symbol::A(i, j))))
                    .collect()
            })
            .collect(),
        hbar: t.hbar.clone(),
    }
}

/// The gauge element `g` with `Φ(t·r) = g · (ι(t) · Φ(r))`.
///
/// It is the identity on each `V_i` and acts on the appended `C^{p−1}` at
/// relative vertex `p` by `diag(ħ^{1−p} a, …, ħ^{−1} a)`, `a = a_{k+1,1}`.
pub fn equivariance_witness(step: &EmbeddingStep, t: &TorusPoint) -> Result<Vec<M>> {
    let a = t.a_at(step.k + 1, 1).clone();
    let hinv = t.hbar.recip();
    Ok((1..=step.m())
        .map(|i| {
            let vi = step.source.v_at(i);
            let extra = step.target.v_at(i) - vi;
            let p = i.saturating_sub(step.k);
            let mut diag = vec![Q::from_integer(1.into()); vi];
            for q in 1..=extra {
                diag.push(&a * pow_i(&hinv, (p - q) as i64));
            }
            M::diag(&diag)
        })
        .collect())
}
