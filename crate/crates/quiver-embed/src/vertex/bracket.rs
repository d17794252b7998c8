use crate::exact_algebra::{FactoredFunction, Monomial, Symbol};

/// `(x)_d = (x)_∞ / (x q^d)_∞` for any integer `d`.
pub fn pochhammer(x: &Monomial, d: i64) -> FactoredFunction {
    let mut f = FactoredFunction::unit();
    if d >= 0 {
        for i in 0..d {
            f = f.mul(&FactoredFunction::factor(x.mul(&Monomial::q(i)), 1));
        }
    } else {
        for i in 1..=-d {
            f = f.mul(&FactoredFunction::factor(x.mul(&Monomial::q(-i)), -1));
        }
    }
    f
}

/// `{x}_d = (ħx)_d / (qx)_d · (−q/ħ^{1/2})^d`.
pub fn bracket(x: &Monomial, d: i64) -> FactoredFunction {
    let pre = Monomial::from_parts(
        if d % 2 == 0 { 1 } else { -1 },
        [(Symbol::Q, 2 * d), (Symbol::Hbar, -d)],
    );
    pochhammer(&Monomial::hbar(1).mul(x), d)
        .div(&pochhammer(&Monomial::q(1).mul(x), d))
        .mul(&FactoredFunction::monomial(pre))
}

/// `1/(y^{1/2} − y^{−1/2}) = −y^{1/2} (1 − y)^{−1}`.
fn ahat(y: &Monomial) -> FactoredFunction {
    assert_eq!(y.sign(), 1, "square root of a negative weight");
    let root = Monomial::from_parts(
        1,
        y.exps().iter().map(|(s, e)| {
            assert!(e % 2 == 0, "weight {y} has no monomial square root");
            (*s, e / 2)
        }),
    );
    FactoredFunction::from_parts(root.neg(), [(y.clone(), -1)])
}

/// Contribution of `w O(d) + (ħw)^{-1} O(−d)` computed from its cohomology
/// character, term by term through `â`, times `q^{d/2}`.
///
/// Independent of [`bracket`], which it should equal.
pub fn ahat_contribution_oracle(w: &Monomial, d: i64) -> FactoredFunction {
    let inv_hw = Monomial::hbar(1).mul(w).inv();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    if d >= 0 {
        for i in 0..d {
            plus.push(w.mul(&Monomial::q(1 + i)));
        }
        for i in -(d - 1)..=0 {
            minus.push(inv_hw.mul(&Monomial::q(i)));
        }
    } else {
        for i in 0..-d {
            plus.push(inv_hw.mul(&Monomial::q(1 + i)));
        }
        for i in (d + 1)..=0 {
            minus.push(w.mul(&Monomial::q(i)));
        }
    }
    let mut f = FactoredFunction::monomial(Monomial::symbol_pow2(Symbol::Q, d));
    for y in &plus {
        f = f.mul(&ahat(y));
    }
    for y in &minus {
        f = f.div(&ahat(y));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{q, q_frac, Point};

    #[test]
    fn pochhammer_cases() {
        let x = Monomial::a(1, 1);
        assert!(pochhammer(&x, 0).is_unit());
        assert_eq!(
            pochhammer(&x, 2),
            FactoredFunction::from_parts(
                Monomial::one(),
                [(x.clone(), 1), (x.mul(&Monomial::q(1)), 1)]
            )
        );
        assert_eq!(
            pochhammer(&x, -1),
            FactoredFunction::factor(x.mul(&Monomial::q(-1)), -1)
        );
    }

    #[test]
    fn bracket_degree_one() {
        let x = Monomial::a(1, 1);
        let want = FactoredFunction::from_parts(
            Monomial::from_parts(-1, [(Symbol::Q, 2), (Symbol::Hbar, -1)]),
            [(Monomial::hbar(1).mul(&x), 1), (Monomial::q(1).mul(&x), -1)],
        );
        assert_eq!(bracket(&x, 1), want);
        assert!(bracket(&x, 0).is_unit());
    }

    #[test]
    fn bracket_at_one() {
        let p = Point::from_roots([(Symbol::Hbar, q(2)), (Symbol::Q, q_frac(1, 3))]);
        let v = bracket(&Monomial::one(), 1).eval(&p).unwrap().value();
        // q here is the square root 1/3, so q itself is 1/9 and ħ is 4.
        let (h, qq) = (q(4), q_frac(1, 9));
        assert_eq!(v, (q(1) - &h) / (q(1) - &qq) * (-&qq / q(2)));
    }

    #[test]
    fn bracket_inverse_cancels() {
        let x = Monomial::a(1, 1);
        assert!(bracket(&x, 1).mul(&bracket(&x, 1).inv()).is_unit());
        assert!(bracket(&Monomial::hbar(-1), 1).is_identically_zero());
    }
}
