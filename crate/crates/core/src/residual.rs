//! Clearing negative powers of `x` from composites over `k[x, x⁻¹]`, and
//! rectification from a coordinate defined over `k[x, x⁻¹]`.

use crate::auto::{Factor, FactoredAuto};
use crate::embedding::{pullback_embed, rectify_from_coordinate, Embedding, RectificationCertificate, TranscriptEntry};
use crate::error::Error;
use crate::poly::{LaurentPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearingResult {
    /// The input followed by the correction factors; polynomial.
    pub cleared: FactoredAuto,
    /// Sum of the appended payloads.
    pub correction: LaurentPoly,
    pub iterations: usize,
}

/// Appends `target ↦ target − N` for the negative part `N` of the target
/// component until no negative powers of `x` remain.
///
/// `max_iters` defaults to `|val_x(N₀)| + 2`. Each step must raise the
/// x-valuation of the remaining negative part.
pub fn clear_denominators(input: &FactoredAuto, target: Var, max_iters: Option<usize>) -> Result<ClearingResult, Error> {
    if !matches!(target, Var::Y | Var::Z) {
        return Err(Error::InvalidArgument(format!("clearing target must be y or z, not {target}")));
    }
    if input.pullback(&LaurentPoly::var(Var::X))? != LaurentPoly::var(Var::X) {
        return Err(Error::PreconditionViolated("the composite does not fix x".into()));
    }
    let parts = input.components_below(0)?;
    for v in [Var::Y, Var::Z] {
        if v != target && !parts[v.index()].is_zero() {
            return Err(Error::PreconditionViolated(format!(
                "the non-target component {v} has negative part {}",
                parts[v.index()]
            )));
        }
    }

    let mut current = input.clone();
    let mut correction = LaurentPoly::zero();
    let mut negative = parts[target.index()].clone();
    let cap = max_iters.unwrap_or_else(|| negative.x_valuation().map_or(0, |v| v.unsigned_abs() as usize) + 2);
    let mut iterations = 0;
    while !negative.is_zero() {
        if iterations >= cap {
            return Err(Error::MaxIters(cap));
        }
        if negative.involves(target) {
            return Err(Error::NonClearable { residue: negative.to_string() });
        }
        let payload = -&negative;
        correction += &payload;
        current.push(Factor::elem(target, payload)?);
        iterations += 1;

        let next = current.components_below(0)?[target.index()].clone();
        if let (Some(before), Some(after)) = (negative.x_valuation(), next.x_valuation()) {
            if after <= before {
                return Err(Error::Stalled { before, after });
            }
        }
        negative = next;
    }

    Ok(ClearingResult { cleared: current.into_polynomial()?, correction, iterations })
}

/// Rectifies `e` from `pre_factors` whose `coordinate_component` already
/// pulls back to `t`, after clearing the denominators in `clear_target`.
pub fn criterion_rectify(
    e: &Embedding,
    pre_factors: &FactoredAuto,
    coordinate_component: Var,
    clear_target: Var,
) -> Result<RectificationCertificate, Error> {
    let f = pre_factors.pullback(&LaurentPoly::var(coordinate_component))?;
    let image = pullback_embed(e, &f)?;
    if image != LaurentPoly::var(Var::T) {
        return Err(Error::PullbackNotT { image: image.to_string() });
    }
    let cleared = if pre_factors.is_laurent() {
        clear_denominators(pre_factors, clear_target, None)?
    } else {
        ClearingResult { cleared: pre_factors.clone(), correction: LaurentPoly::zero(), iterations: 0 }
    };
    let mut cert = rectify_from_coordinate(e, &cleared.cleared, coordinate_component)?;
    let mut transcript = vec![
        TranscriptEntry::new("criterion", format!("phi*(pre*({coordinate_component}))"), &image),
        TranscriptEntry::new(
            "clearing",
            format!("correction in {clear_target} ({} iterations)", cleared.iterations),
            &cleared.correction,
        ),
    ];
    transcript.append(&mut cert.transcript);
    cert.transcript = transcript;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_certificate;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn elem(v: Var, s: &str) -> Factor {
        Factor::elem(v, p(s)).unwrap()
    }

    #[test]
    fn nagata() {
        let input = FactoredAuto::new(vec![elem(Var::Z, "-y^2/x"), elem(Var::Y, "x^2*z")]);
        let r = clear_denominators(&input, Var::Z, None).unwrap();
        assert_eq!(r.iterations, 1);
        assert_eq!(r.correction, p("y^2/x"));
        assert_eq!(r.cleared.to_triple().unwrap(), [p("x"), p("y + x*(x*z - y^2)"), p("z + 2*y*(x*z - y^2) + x*(x*z - y^2)^2")]);
        assert!(!r.cleared.is_laurent());
    }

    #[test]
    fn conjugated_example() {
        let a0 = FactoredAuto::new(vec![elem(Var::Z, "-y^2/x^2")]);
        let b0 = FactoredAuto::new(vec![elem(Var::Y, "x^3*z")]);
        let input = a0.then(&b0).then(&a0.invert());
        let r = clear_denominators(&input, Var::Z, None).unwrap();
        assert_eq!(r.correction, p("2*y^3/x"));
        assert!(r.cleared.is_polynomial_over_kx());
        assert!(r.cleared.to_triple().unwrap().iter().all(LaurentPoly::is_polynomial));
    }

    #[test]
    fn already_polynomial() {
        let input = FactoredAuto::new(vec![elem(Var::Y, "x^2*z")]);
        let r = clear_denominators(&input, Var::Y, None).unwrap();
        assert_eq!(r.iterations, 0);
        assert!(r.correction.is_zero());
    }

    #[test]
    fn errors() {
        // the z-payload reaches y after the second factor
        let input = FactoredAuto::new(vec![elem(Var::Y, "z/x"), elem(Var::Z, "y")]);
        assert!(matches!(clear_denominators(&input, Var::Y, None), Err(Error::PreconditionViolated(_))));

        let input = FactoredAuto::new(vec![elem(Var::Z, "-y^2/x^5"), elem(Var::Y, "x^6*z")]);
        assert!(matches!(clear_denominators(&input, Var::Z, Some(1)), Err(Error::MaxIters(1))));

        assert!(matches!(clear_denominators(&input, Var::X, None), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn normal_form_ideal() {
        // alpha = (x, y, z + x^-l P(y)), beta = (x, y + x^a (x^l z)^b, z), P in (y^c)
        for (l, a, b, c) in [(3, 1, 1, 2), (4, 2, 2, 1), (5, 1, 1, 3), (6, 4, 1, 2)] {
            let input = FactoredAuto::new(vec![
                elem(Var::Z, &format!("(y^{c} + 2*y^{})/x^{l}", c + 1)),
                elem(Var::Y, &format!("x^{a}*(x^{l}*z)^{b}")),
            ]);
            let r = clear_denominators(&input, Var::Z, None).unwrap();
            assert!(r.correction.in_y_ideal(c), "{l} {a} {b} {c}: {}", r.correction);
            let bound = (0..).find(|r| a * (r + 1) >= l).unwrap() + 1;
            assert!(r.iterations <= bound as usize);
            assert!(r.cleared.is_polynomial_over_kx());
        }
    }

    #[test]
    fn criterion_craighero_three() {
        let e = Embedding::family(3, 4, 5).unwrap();
        let pre = FactoredAuto::new(vec![elem(Var::Y, "-z^2/x^2 + 2"), elem(Var::Z, "x^3*y")]);
        let cert = criterion_rectify(&e, &pre, Var::Z, Var::Y).unwrap();
        assert!(verify_certificate(&cert).is_ok());

        let bad = FactoredAuto::new(vec![elem(Var::Y, "-z^2/x^2 + 2")]);
        assert!(matches!(criterion_rectify(&e, &bad, Var::Z, Var::Y), Err(Error::PullbackNotT { .. })));
    }

    #[test]
    fn criterion_standard_embedding() {
        let cert = criterion_rectify(&Embedding::standard(), &FactoredAuto::identity(), Var::X, Var::Y).unwrap();
        assert!(cert.theta.is_empty());
    }
}
