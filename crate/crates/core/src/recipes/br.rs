use num_integer::Integer;

use super::{elem, identity, lemma_cd_poly, t_plus, x_pow};
use crate::auto::{Factor, FactoredAuto};
use crate::embedding::{apply_auto, precompose, Embedding, RectificationCertificate, TranscriptEntry};
use crate::error::Error;
use crate::poly::{int, t_pow, LaurentPoly, Var};
use crate::residual::criterion_rectify;

/// Parameters of `(tⁿ, tᵐ, t + t^(bn−1))` with `m = an + c`, `0 < c < n`,
/// `d = n − c`, `λ₁c = μ₁n − 1`, `λ₂d = μ₂n − 1`, `μ₁`, `μ₂` minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BRParams {
    pub n: u32,
    pub m: u32,
    pub b: u32,
    pub a: u32,
    pub c: u32,
    pub d: u32,
    pub lambda1: u32,
    pub mu1: u32,
    pub lambda2: u32,
    pub mu2: u32,
}

/// Minimal `μ ≥ 1` with `r | μn − 1`, and `λ = (μn − 1)/r`.
fn solve(r: u32, n: u32) -> (u32, u32) {
    let mu = (1..=r).find(|mu| (mu * n - 1).is_multiple_of(r)).expect("n is invertible mod r");
    (mu, (mu * n - 1) / r)
}

impl BRParams {
    pub fn new(n: u32, m: u32, b: u32) -> Result<Self, Error> {
        if n < 2 || m == 0 || b == 0 {
            return Err(Error::PreconditionViolated(format!("need n >= 2, m >= 1, b >= 1 (n={n}, m={m}, b={b})")));
        }
        if n.gcd(&m) != 1 {
            return Err(Error::PreconditionViolated(format!("gcd({n}, {m}) != 1")));
        }
        let (a, c) = (m / n, m % n);
        let d = n - c;
        let (mu1, lambda1) = solve(c, n);
        let (mu2, lambda2) = solve(d, n);
        Ok(BRParams { n, m, b, a, c, d, lambda1, mu1, lambda2, mu2 })
    }

    pub fn embedding(&self) -> Result<Embedding, Error> {
        Embedding::family(self.n, self.m, self.b * self.n - 1)
    }
}

/// Certificate for `(tⁿ, tᵐ, t + t^(bn−1))` when `b ≥ 2` and `b > min(μ₁, μ₂)`.
pub fn br_general(n: u32, m: u32, b: u32) -> Result<RectificationCertificate, Error> {
    let mut params = BRParams::new(n, m, b)?;
    if b < 2 {
        return Err(Error::PreconditionViolated(format!("b = {b} < 2")));
    }
    if b <= params.mu1.min(params.mu2) {
        return Err(Error::PreconditionViolated(format!("b = {b} is not above min(mu1, mu2) = {}", params.mu1.min(params.mu2))));
    }
    let original = params.embedding()?;
    let mut current = original.clone();
    let mut reduction = FactoredAuto::identity();
    let mut transcript = Vec::new();
    let bn1 = i64::from(b * n) - 1;

    // (x, −y + x^h p(x, z), z) lowers m to hn + d while a ≥ bd − 1
    while params.a + 1 >= b * params.d {
        let h = params.a + 1 - b * params.d;
        let p = lemma_cd_poly(n, b, params.d)?;
        let d = i64::from(params.d);
        transcript.push(identity(&current, &format!("p_{d}(X, Z)"), &p, &(&t_pow(d) + &t_pow(bn1 * d)))?);
        let step = FactoredAuto::new(vec![Factor::scale(Var::Y, int(-1))?, elem(Var::Y, &x_pow(h.into()) * &p)?]);
        let next_m = h * n + params.d;
        let next = apply_auto(&step, &current)?;
        if next != Embedding::family(n, next_m, b * n - 1)? {
            return Err(Error::VerificationFailed(format!("reduction step gave {next}")));
        }
        transcript.push(TranscriptEntry::new("reduction", format!("theta applied to {current}"), &next));
        reduction = reduction.then(&step);
        current = next;
        params = BRParams::new(n, next_m, b)?;
    }

    let BRParams { a, c, d, lambda1, mu1, lambda2, mu2, .. } = params;
    let (a, c, d) = (i64::from(a), i64::from(c), i64::from(d));
    let bi = i64::from(b);
    let e1 = bi * d - a - 1;
    let p = lemma_cd_poly(n, b, params.d)?;
    transcript.push(identity(&current, &format!("p_{d}(X, Z)"), &p, &(&t_pow(d) + &t_pow(bn1 * d)))?);
    let p_term = &p * &x_pow(-e1);
    let y = LaurentPoly::var(Var::Y);

    let pre = if b > mu2 {
        // z − x^(b−μ₂) (p − x^(bd−a−1) y)^λ₂ after α
        let beta = -&(&x_pow(i64::from(b - mu2)) * &(&x_pow(e1) * &y).scale(&int(-1)).pow(lambda2)?);
        transcript.push(TranscriptEntry::new("case", "b > mu2", format!("lambda2 = {lambda2}, mu2 = {mu2}")));
        FactoredAuto::new(vec![elem(Var::Y, -&p_term)?, elem(Var::Z, beta)?])
    } else if b > mu1 {
        let e2 = bi * i64::from(n) - a - 2;
        let q = lemma_cd_poly(n, b, params.c)?;
        transcript.push(identity(&current, &format!("q_{c}(X, Z)"), &q, &(&t_pow(c) + &t_pow(bn1 * c)))?);
        let alpha = &(-&p_term) + &(&q * &x_pow(-e2));
        let beta = -&(&x_pow(i64::from(b - mu1)) * &(&x_pow(e2) * &y).pow(lambda1)?);
        transcript.push(TranscriptEntry::new("case", "b > mu1", format!("lambda1 = {lambda1}, mu1 = {mu1}")));
        FactoredAuto::new(vec![elem(Var::Y, alpha)?, elem(Var::Z, beta)?])
    } else {
        return Err(Error::RecipeInapplicable(format!("b = {b} is above neither mu1 = {mu1} nor mu2 = {mu2}")));
    };

    let cert = criterion_rectify(&current, &pre, Var::Z, Var::Y)?;
    debug_assert_eq!(current.z(), &t_plus(bn1));
    let mut cert = if reduction.is_empty() { cert } else { precompose(&reduction, &original, cert)? };
    transcript.append(&mut cert.transcript);
    cert.transcript = transcript;
    Ok(cert)
}
