use super::{elem, identity, x_pow};
use crate::auto::FactoredAuto;
use crate::embedding::{rectify_from_coordinate, Embedding, RectificationCertificate, TranscriptEntry};
use crate::error::Error;
use crate::poly::{LaurentPoly, Var};
use crate::residual::clear_denominators;

/// `(tⁿ, t^(an+c), t + t^((an+c)s − ln))` with `cl < a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KurodaParams {
    pub n: u32,
    pub a: u32,
    pub c: u32,
    pub l: u32,
    pub s: u32,
}

impl KurodaParams {
    pub fn new(n: u32, a: u32, c: u32, l: u32, s: u32) -> Result<Self, Error> {
        let p = KurodaParams { n, a, c, l, s };
        p.check()?;
        Ok(p)
    }

    fn check(&self) -> Result<(), Error> {
        let KurodaParams { n, a, c, l, s } = *self;
        if [n, a, c, l, s].contains(&0) {
            return Err(Error::PreconditionViolated(format!("all of n, a, c, l, s must be positive ({self:?})")));
        }
        if c * l >= a {
            return Err(Error::PreconditionViolated(format!("cl = {} is not below a = {a}", c * l)));
        }
        if self.z_exponent() < 1 {
            return Err(Error::PreconditionViolated(format!("z exponent {} is not positive", self.z_exponent())));
        }
        Ok(())
    }

    pub fn m(&self) -> u32 {
        self.a * self.n + self.c
    }

    pub fn z_exponent(&self) -> i64 {
        i64::from(self.m()) * i64::from(self.s) - i64::from(self.l) * i64::from(self.n)
    }

    pub fn embedding(&self) -> Result<Embedding, Error> {
        let l = u32::try_from(self.z_exponent()).map_err(|_| Error::ExponentOverflow)?;
        Embedding::family(self.n, self.m(), l)
    }
}

/// `α = (x, y, z − yˢ/xˡ)`, `β = (x, y − x^(a−cl)(xˡz)ᶜ, z)`; clearing
/// happens in `z`, where every correction lies in `(yˢ)`.
pub fn kuroda_general(p: KurodaParams) -> Result<RectificationCertificate, Error> {
    p.check()?;
    let KurodaParams { a, c, l, s, .. } = p;
    let e = p.embedding()?;
    let (y, z) = (LaurentPoly::var(Var::Y), LaurentPoly::var(Var::Z));
    let li = i64::from(l);
    let alpha = -&(&y.pow(s)? * &x_pow(-li));
    let beta = -&(&x_pow(i64::from(a - c * l)) * &(&x_pow(li) * &z).pow(c)?);
    let pre = FactoredAuto::new(vec![elem(Var::Z, alpha)?, elem(Var::Y, beta)?]);

    let mut transcript = vec![
        identity(&e, "phi*(alpha*(beta*(y)))", &pre.pullback(&y)?, &LaurentPoly::zero())?,
        identity(&e, "phi*(alpha*(beta*(z)))", &pre.pullback(&z)?, &LaurentPoly::var(Var::T))?,
    ];
    let cleared = clear_denominators(&pre, Var::Z, None)?;
    if !cleared.correction.in_y_ideal(s) {
        return Err(Error::VerificationFailed(format!("correction {} is not in (y^{s})", cleared.correction)));
    }
    transcript.push(TranscriptEntry::new(
        "clearing",
        format!("correction in z ({} iterations)", cleared.iterations),
        &cleared.correction,
    ));
    let mut cert = rectify_from_coordinate(&e, &cleared.cleared, Var::Z)?;
    transcript.append(&mut cert.transcript);
    cert.transcript = transcript;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_certificate;

    #[test]
    fn three_n_plus_one() {
        for n in 1..=4 {
            let p = KurodaParams::new(n, 3, 1, 2, 2).unwrap();
            assert_eq!(p.embedding().unwrap(), Embedding::family(n, 3 * n + 1, 4 * n + 2).unwrap());
            let cert = kuroda_general(p).unwrap();
            assert!(verify_certificate(&cert).is_ok());
            assert!(cert.transcript_has(Some("phi*(alpha*(beta*(y)))"), "0"));
        }
    }

    #[test]
    fn five_n_plus_two() {
        for n in 1..=3 {
            let cert = kuroda_general(KurodaParams::new(n, 5, 2, 2, 2).unwrap()).unwrap();
            assert_eq!(cert.embedding, Embedding::family(n, 5 * n + 2, 8 * n + 4).unwrap());
            assert!(verify_certificate(&cert).is_ok());
        }
    }

    #[test]
    fn smallest() {
        let cert = kuroda_general(KurodaParams::new(1, 2, 1, 1, 1).unwrap()).unwrap();
        assert!(verify_certificate(&cert).is_ok());
    }

    #[test]
    fn preconditions() {
        assert!(KurodaParams::new(3, 2, 1, 2, 2).is_err());
        assert!(KurodaParams::new(3, 0, 1, 2, 2).is_err());
    }
}
