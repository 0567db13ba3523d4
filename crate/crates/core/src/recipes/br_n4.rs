use super::{elem, identity, t_plus, x_pow};
use crate::auto::{Factor, FactoredAuto};
use crate::embedding::{apply_auto, precompose, rectify_from_coordinate, Embedding, RectificationCertificate, TranscriptEntry};
use crate::error::Error;
use crate::poly::{int, mono, rat, t_pow, LaurentPoly, Var};
use crate::residual::criterion_rectify;

fn embedding(a: u32, m: u32) -> Result<Embedding, Error> {
    Embedding::family(4, 4 * a + 1, m)
}

fn inapplicable(e: Error) -> Error {
    match e {
        Error::VerificationFailed(msg) => Error::RecipeInapplicable(format!("a printed identity does not hold: {msg}")),
        e @ (Error::Stalled { .. } | Error::NonClearable { .. } | Error::MaxIters(_) | Error::PreconditionViolated(_)) => {
            Error::RecipeInapplicable(format!("the clearing step does not apply: {e}"))
        }
        other => other,
    }
}

/// Applies `step` to `current` and checks that it lands on `(t⁴, t^(4a'+1), ·)`.
fn reduce(
    current: &Embedding,
    step: FactoredAuto,
    next_a: u32,
    m: u32,
    reduction: &mut FactoredAuto,
    transcript: &mut Vec<TranscriptEntry>,
) -> Result<Embedding, Error> {
    let next = apply_auto(&step, current)?;
    let expected = embedding(next_a, m)?;
    if next != expected {
        return Err(Error::RecipeInapplicable(format!("reduction of {current} gave {next}, expected {expected}")));
    }
    transcript.push(TranscriptEntry::new("reduction", format!("theta applied to {current}"), &next));
    *reduction = reduction.then(&step);
    Ok(next)
}

/// `A` with `φ*(y + A) = ¼ t^(4a−12k−2)` on `(t⁴, t^(4a+1), t^(4k+2) + t)`.
fn case_two_shift(a: i64, k: i64) -> LaurentPoly {
    let z = LaurentPoly::var(Var::Z);
    let z2 = &(&z * &z) - &x_pow(2 * k + 1);
    let mut out = mono(rat(-1, 2), a - 2 * k - 1, 0, 3, 0);
    out += &mono(rat(1, 2), a, 0, 1, 0);
    out += &mono(rat(3, 2), a - k, 0, 0, 0);
    out += &(&z2 * &x_pow(a - 3 * k - 1)).scale(&rat(1, 4));
    out
}

/// Certificate for `(t⁴, t^(4a+1), tᵐ + t)`, by the residue of `m` mod 4.
pub fn br_n4(a: u32, m: u32) -> Result<RectificationCertificate, Error> {
    if a == 0 || m < 2 {
        return Err(Error::PreconditionViolated(format!("br_n4 needs a >= 1 and m >= 2 (a={a}, m={m})")));
    }
    let original = embedding(a, m)?;
    let k = m / 4;
    let ki = i64::from(k);
    let mut current = original.clone();
    let mut a_cur = a;
    let mut reduction = FactoredAuto::identity();
    let mut transcript = Vec::new();
    let y = LaurentPoly::var(Var::Y);

    let cert = match m % 4 {
        0 => {
            let prefix = FactoredAuto::new(vec![elem(Var::Z, -x_pow(ki))?]);
            rectify_from_coordinate(&current, &prefix, Var::Z)?
        }
        1 => {
            while a_cur > k {
                let step = FactoredAuto::new(vec![
                    Factor::scale(Var::Y, int(-1))?,
                    elem(Var::Y, &x_pow(i64::from(a_cur - k)) * &LaurentPoly::var(Var::Z))?,
                ]);
                a_cur -= k;
                current = reduce(&current, step, a_cur, m, &mut reduction, &mut transcript)?;
            }
            let prefix = FactoredAuto::new(vec![elem(Var::Z, -&(&x_pow(ki - i64::from(a_cur)) * &y))?]);
            rectify_from_coordinate(&current, &prefix, Var::Z)?
        }
        2 => {
            let z2 = &(&LaurentPoly::var(Var::Z) * &LaurentPoly::var(Var::Z)) - &x_pow(2 * ki + 1);
            transcript.push(
                identity(&current, &format!("Z^2 - X^{}", 2 * k + 1), &z2, &(&t_pow(4 * ki + 3).scale(&int(2)) + &t_pow(2)))
                    .map_err(inapplicable)?,
            );
            loop {
                let ai = i64::from(a_cur);
                let shift = case_two_shift(ai, ki);
                transcript.push(
                    identity(&current, "Y + A", &(&y + &shift), &t_pow(4 * ai - 12 * ki - 2).scale(&rat(1, 4)))
                        .map_err(inapplicable)?,
                );
                if a_cur <= 4 * k + 1 {
                    let pre = FactoredAuto::new(vec![
                        elem(Var::Y, shift)?,
                        elem(Var::Z, -&(&x_pow(4 * ki - ai + 1) * &y).scale(&int(4)))?,
                    ]);
                    break criterion_rectify(&current, &pre, Var::Z, Var::Y).map_err(inapplicable)?;
                }
                let step = FactoredAuto::new(vec![
                    elem(Var::Y, shift)?,
                    Factor::scale(Var::Y, int(-4))?,
                    elem(Var::Y, &x_pow(ai - 4 * ki - 1) * &LaurentPoly::var(Var::Z))?,
                ]);
                a_cur -= 4 * k + 1;
                current = reduce(&current, step, a_cur, m, &mut reduction, &mut transcript)?;
            }
        }
        _ => {
            if a_cur > 3 * k + 2 {
                return Err(Error::RecipeInapplicable(format!(
                    "m = {m}: a = {a} > 3k + 2 = {} and the reduction leaves the (t^4, t^(4a+1), .) family",
                    3 * k + 2
                )));
            }
            let ai = i64::from(a_cur);
            let l = 3 * ki + 2 - ai;
            let z = LaurentPoly::var(Var::Z);
            let payload = &(&z.pow(3)? * &x_pow(-l)) - &(&x_pow(ai - 2 * ki - 1) * &z).scale(&int(3));
            let alpha_y = &payload - &y;
            transcript
                .push(identity(&current, "-Y + Z^3/X^L - 3*X^(a-2k-1)*Z", &alpha_y, &t_pow(3 - 4 * l)).map_err(inapplicable)?);
            let beta = -&(&x_pow(ki + l) * &y);
            transcript.push(
                identity(
                    &current,
                    "Z - X^(k+L)*(alpha*(Y))",
                    &(&z + &beta.substitute_var(Var::Y, &alpha_y)?),
                    &LaurentPoly::var(Var::T),
                )
                .map_err(inapplicable)?,
            );
            let pre = FactoredAuto::new(vec![Factor::scale(Var::Y, int(-1))?, elem(Var::Y, payload)?, elem(Var::Z, beta)?]);
            criterion_rectify(&current, &pre, Var::Z, Var::Y).map_err(inapplicable)?
        }
    };
    debug_assert_eq!(current.z(), &t_plus(m.into()));

    let mut cert = if reduction.is_empty() { cert } else { precompose(&reduction, &original, cert)? };
    transcript.append(&mut cert.transcript);
    cert.transcript = transcript;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_certificate;

    #[test]
    fn matches_craighero_four() {
        let cert = br_n4(1, 6).unwrap();
        assert!(verify_certificate(&cert).is_ok());
        assert!(cert.transcript_has(Some("Z^2 - X^3"), "2*t^7 + t^2"));
        assert!(cert.transcript_has(Some("Y + A"), "1/4/t^10"));
    }

    #[test]
    fn residue_zero() {
        let cert = br_n4(1, 8).unwrap();
        assert_eq!(cert.coordinate, "z - x^2".parse().unwrap());
    }

    #[test]
    fn residue_one_reduces() {
        for (a, m) in [(1, 5), (3, 5), (5, 9), (6, 13)] {
            assert!(verify_certificate(&br_n4(a, m).unwrap()).is_ok(), "a={a}, m={m}");
        }
    }

    #[test]
    fn residue_three() {
        let cert = br_n4(2, 7).unwrap();
        assert!(verify_certificate(&cert).is_ok());
        assert!(cert.transcript_has(Some("Z - X^(k+L)*(alpha*(Y))"), "t"));
        assert!(matches!(br_n4(6, 7), Err(Error::RecipeInapplicable(_))));
    }

    #[test]
    fn residue_two_with_reduction() {
        // a = 6 > 4k + 1 = 5 for m = 6
        let cert = br_n4(6, 6).unwrap();
        assert!(verify_certificate(&cert).is_ok());
        assert!(cert.transcript.iter().any(|e| e.label == "reduction"));
    }

    #[test]
    fn preconditions() {
        assert!(br_n4(0, 6).is_err());
        assert!(br_n4(1, 1).is_err());
    }
}
