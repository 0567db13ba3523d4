use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::Error;
use crate::poly::{int, LaurentPoly, Rational, Var};

/// Coefficients with
/// `Σ αᵢ sⁱ (1+s)^(m−2i) = 1 + β δ_m s^(m/2) + s^m`, `δ_m = [m even]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombCoeffs {
    pub m: u32,
    pub alphas: Vec<Rational>,
    /// Zero for odd `m`.
    pub beta: Rational,
}

impl CombCoeffs {
    /// `Σ αᵢ sⁱ (1+s)^(m−2i)` with `s` written as `t`.
    pub fn lhs(&self) -> LaurentPoly {
        let s = LaurentPoly::var(Var::T);
        let one_s = &LaurentPoly::one() + &s;
        let mut out = LaurentPoly::zero();
        for (i, a) in self.alphas.iter().enumerate() {
            let i = i as u32;
            let term = s.pow(i).and_then(|si| si.try_mul(&one_s.pow(self.m - 2 * i)?)).expect("small exponents");
            out += &term.scale(a);
        }
        out
    }

    /// `1 + β δ_m s^(m/2) + s^m` with `s` written as `t`.
    pub fn rhs(&self) -> LaurentPoly {
        let mut out = &LaurentPoly::one() + &crate::poly::t_pow(self.m.into());
        if self.m.is_multiple_of(2) {
            out += &crate::poly::t_pow((self.m / 2).into()).scale(&self.beta);
        }
        out
    }
}

fn choose(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Builds the coefficients for `1..=m` bottom-up and checks the identity for `m`.
pub fn combinatorial_coeffs(m: u32) -> Result<CombCoeffs, Error> {
    if m == 0 {
        return Err(Error::PreconditionViolated("m must be at least 1".into()));
    }
    // table[j] holds (alphas, beta) for j; index 0 is unused.
    let mut table: Vec<(Vec<Rational>, Rational)> = vec![(Vec::new(), Rational::zero())];
    for mm in 1..=m {
        let half = mm / 2;
        // (1+s)^mm = 1 + s^mm + C(mm, k) s^k [mm = 2k] + Σ_j C(mm, j) s^j (1 + s^(mm−2j))
        let jmax = if mm % 2 == 0 { half.saturating_sub(1) } else { half };
        let mut alphas = Vec::with_capacity(half as usize + 1);
        for r in 0..=half {
            let mut a = if r == 0 { int(1) } else { Rational::zero() };
            for j in 1..=r.min(jmax) {
                let (sub, _) = &table[(mm - 2 * j) as usize];
                a -= choose(mm, j) * &sub[(r - j) as usize];
            }
            alphas.push(a);
        }
        let beta = if mm % 2 == 0 {
            let mut b = choose(mm, half);
            for j in 1..=jmax {
                b -= choose(mm, j) * &table[(mm - 2 * j) as usize].1;
            }
            b
        } else {
            Rational::zero()
        };
        table.push((alphas, beta));
    }
    let (alphas, beta) = table.pop().expect("m >= 1");
    let cc = CombCoeffs { m, alphas, beta };
    if cc.lhs() != cc.rhs() {
        return Err(Error::VerificationFailed(format!("coefficient identity fails for m = {m}")));
    }
    Ok(cc)
}

/// `p ∈ k[x, z]` with `p(tⁿ, t + t^(bn−1)) = t^r + t^((bn−1)r)`.
pub fn lemma_cd_poly(n: u32, b: u32, r: u32) -> Result<LaurentPoly, Error> {
    if n == 0 || b == 0 || r == 0 || n * b < 2 {
        return Err(Error::PreconditionViolated(format!("lemma_cd_poly needs n, b, r >= 1 and bn >= 2 (n={n}, b={b}, r={r})")));
    }
    let cc = combinatorial_coeffs(r)?;
    let mut p = LaurentPoly::zero();
    for (i, a) in cc.alphas.iter().enumerate() {
        let i = i as u32;
        p += &crate::poly::mono(a.clone(), i64::from(b * i), 0, r - 2 * i, 0);
    }
    if r.is_multiple_of(2) {
        p -= &crate::poly::mono(cc.beta.clone(), i64::from(b * r / 2), 0, 0, 0);
    }

    let t = LaurentPoly::var(Var::T);
    let bn1 = i64::from(b * n) - 1;
    let z = &t + &crate::poly::t_pow(bn1);
    let image = p.substitute(&crate::poly::Substitution::new().with(Var::X, crate::poly::t_pow(n.into())).with(Var::Z, z))?;
    let expected = &crate::poly::t_pow(r.into()) + &crate::poly::t_pow(bn1 * i64::from(r));
    if image != expected {
        return Err(Error::VerificationFailed(format!("p = {p} maps to {image}, expected {expected}")));
    }
    Ok(p)
}
