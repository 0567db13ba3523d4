use super::{elem, identity, parse};
use crate::auto::FactoredAuto;
use crate::embedding::{Embedding, RectificationCertificate};
use crate::error::Error;
use crate::poly::{LaurentPoly, Var};
use crate::residual::criterion_rectify;

/// Certificates for `(t³, t⁴, t⁵ + t)` (`which = 3`) and `(t⁴, t⁵, t⁶ + t)`
/// (`which = 4`).
pub fn craighero(which: u32) -> Result<RectificationCertificate, Error> {
    let (e, alpha, beta, mut transcript) = match which {
        3 => {
            let e = Embedding::family(3, 4, 5)?;
            let alpha_y = parse("y - z^2/x^2 + 2");
            let transcript = vec![identity(&e, "Y - Z^2/X^2 + 2", &alpha_y, &parse("-1/t^4"))?];
            (e, parse("-z^2/x^2 + 2"), parse("x^3*y"), transcript)
        }
        4 => {
            let e = Embedding::family(4, 5, 6)?;
            let base = parse("y - 1/2*z^3/x^2 + 1/2*x*z + 3/2");
            let tail = parse("1/4*(z^2 - x^3)/x^3");
            let transcript = vec![
                identity(&e, "Z^2 - X^3", &parse("z^2 - x^3"), &parse("2*t^7 + t^2"))?,
                identity(&e, "Y - 1/2*Z^3/X^2 + 1/2*X*Z + 3/2", &base, &parse("-1/2/t^5"))?,
                identity(&e, "Y - 1/2*Z^3/X^2 + 1/2*X*Z + 3/2 + 1/4*(Z^2 - X^3)/X^3", &(&base + &tail), &parse("1/4/t^10"))?,
            ];
            (e, &(&base + &tail) - &LaurentPoly::var(Var::Y), parse("-4*x^4*y"), transcript)
        }
        _ => return Err(Error::InvalidArgument(format!("craighero takes 3 or 4, not {which}"))),
    };
    let pre = FactoredAuto::new(vec![elem(Var::Y, alpha)?, elem(Var::Z, beta)?]);
    let mut cert = criterion_rectify(&e, &pre, Var::Z, Var::Y)?;
    transcript.append(&mut cert.transcript);
    cert.transcript = transcript;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_certificate;

    #[test]
    fn three() {
        let cert = craighero(3).unwrap();
        assert!(verify_certificate(&cert).is_ok());
        assert!(cert.transcript_has(Some("Y - Z^2/X^2 + 2"), "-1/t^4"));
    }

    #[test]
    fn four() {
        let cert = craighero(4).unwrap();
        assert!(verify_certificate(&cert).is_ok());
        assert!(cert.transcript_has(Some("Z^2 - X^3"), "2*t^7 + t^2"));
        assert!(cert.transcript_has(None, "1/4/t^10"));
        assert!(cert.transcript_has(None, "-1/2/t^5"));
    }

    #[test]
    fn other_values_rejected() {
        assert!(craighero(5).is_err());
    }
}
