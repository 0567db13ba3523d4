#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rectify::embedding::{pullback_embed, push_point};
use rectify::poly::{mono, rat, Substitution};
use rectify::{Embedding, Factor, FactoredAuto, LaurentPoly, Var};

fn coeff() -> impl Strategy<Value = rectify::Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Up to four terms; `x` and `t` may carry negative exponents.
pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((coeff(), -2i64..=2, 0u32..=2, 0u32..=2, -2i64..=2), 0..=4)
        .prop_map(|terms| terms.into_iter().fold(LaurentPoly::zero(), |acc, (c, ex, ey, ez, et)| &acc + &mono(c, ex, ey, ez, et)))
}

/// Polynomial in `x, y, z` (no `t`), up to three terms.
pub fn poly_xyz(max_x_neg: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((coeff(), -max_x_neg..=2, 0u32..=2, 0u32..=2), 0..=3)
        .prop_map(|terms| terms.into_iter().fold(LaurentPoly::zero(), |acc, (c, ex, ey, ez)| &acc + &mono(c, ex, ey, ez, 0)))
}

/// Nonzero monomial in the Laurent variables.
pub fn unit_monomial() -> impl Strategy<Value = LaurentPoly> {
    (coeff().prop_filter("nonzero", |c| *c != rat(0, 1)), -2i64..=2, -2i64..=2).prop_map(|(c, ex, et)| mono(c, ex, 0, 0, et))
}

/// `x ↦` monomial, `y, z ↦` anything, `t ↦` monomial.
pub fn substitution() -> impl Strategy<Value = Substitution> {
    (unit_monomial(), laurent(), laurent(), unit_monomial())
        .prop_map(|(x, y, z, t)| Substitution::new().with(Var::X, x).with(Var::Y, y).with(Var::Z, z).with(Var::T, t))
}

fn without(p: LaurentPoly, v: Var) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().filter(|(e, _)| e.get(v) == 0).map(|(e, c)| (*e, c.clone())))
}

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![Just(Var::X), Just(Var::Y), Just(Var::Z)]
}

/// One generator; `max_x_neg` bounds negative powers of `x` in payloads.
pub fn factor(max_x_neg: i64, permutations: bool) -> BoxedStrategy<Factor> {
    let elem = (var(), poly_xyz(max_x_neg)).prop_filter_map("payload must leave x fixed when Laurent", move |(v, p)| {
        let v = if max_x_neg > 0 && v == Var::X { Var::Y } else { v };
        Factor::elem(v, without(p, v)).ok()
    });
    let scale = (var(), coeff().prop_filter("nonzero", |c| *c != rat(0, 1))).prop_map(|(v, c)| Factor::scale(v, c).unwrap());
    if permutations {
        let perm = prop::sample::select(vec!["xyz", "xzy", "yxz", "yzx", "zxy", "zyx"])
            .prop_map(|w| Factor::Permute(w.parse().unwrap()));
        prop_oneof![3 => elem, 1 => scale, 1 => perm].boxed()
    } else {
        prop_oneof![3 => elem, 1 => scale.prop_filter("x fixed", |f| !matches!(f, Factor::Scale { target: Var::X, .. }))].boxed()
    }
}

pub fn auto(max_x_neg: i64, permutations: bool) -> impl Strategy<Value = FactoredAuto> {
    prop::collection::vec(factor(max_x_neg, permutations), 1..=4).prop_map(FactoredAuto::new)
}

pub fn family() -> impl Strategy<Value = Embedding> {
    (1u32..=5, 1u32..=7, 1u32..=9).prop_map(|(n, m, l)| Embedding::family(n, m, l).unwrap())
}

#[allow(clippy::eq_op)]
pub fn ring_laws(a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(&(a + b) + c, a + &(b + c));
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(a * &LaurentPoly::one(), a.clone());
    prop_assert!((a - a).is_zero());
    prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
    Ok(())
}

pub fn homomorphism(s: &Substitution, a: &LaurentPoly, b: &LaurentPoly) -> Result<(), TestCaseError> {
    let (sa, sb) = (a.substitute(s).unwrap(), b.substitute(s).unwrap());
    prop_assert_eq!((a + b).substitute(s).unwrap(), &sa + &sb);
    prop_assert_eq!((a * b).substitute(s).unwrap(), &sa * &sb);
    prop_assert_eq!(LaurentPoly::one().substitute(s).unwrap(), LaurentPoly::one());
    Ok(())
}

pub fn inverse_composition(f: &FactoredAuto, p: &LaurentPoly) -> Result<(), TestCaseError> {
    let there_and_back = f.then(&f.invert());
    prop_assert_eq!(there_and_back.pullback(p).unwrap(), p.clone());
    prop_assert_eq!(f.invert().then(f).pullback(p).unwrap(), p.clone());
    let triple = there_and_back.to_triple().unwrap();
    prop_assert_eq!(triple, [LaurentPoly::var(Var::X), LaurentPoly::var(Var::Y), LaurentPoly::var(Var::Z)]);
    Ok(())
}

fn at_point(p: &LaurentPoly, point: &[LaurentPoly; 3]) -> LaurentPoly {
    p.substitute(
        &Substitution::new().with(Var::X, point[0].clone()).with(Var::Y, point[1].clone()).with(Var::Z, point[2].clone()),
    )
    .unwrap()
}

/// `(A∘e)*(p) = e*(A*(p))` and `(B∘A)*` = `A*∘B*`.
pub fn contravariance(e: &Embedding, a: &FactoredAuto, b: &FactoredAuto, p: &LaurentPoly) -> Result<(), TestCaseError> {
    let pa = push_point(a, e).unwrap();
    prop_assert_eq!(at_point(p, &pa), pullback_embed(e, &a.pullback(p).unwrap()).unwrap());
    let ab = a.then(b);
    prop_assert_eq!(ab.pullback(p).unwrap(), a.pullback(&b.pullback(p).unwrap()).unwrap());
    let mut stepwise = pa;
    for f in b.factors() {
        stepwise = f.push_forward(&stepwise).unwrap();
    }
    prop_assert_eq!(push_point(&ab, e).unwrap(), stepwise);
    Ok(())
}
