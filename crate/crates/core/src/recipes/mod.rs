//! Constructive rectifications for the families `(tⁿ, tᵐ, tˡ + t)`.

mod br;
mod br_n4;
mod coeffs;
mod craighero;
mod dispatch;
mod kuroda;

pub use br::{br_general, BRParams};
pub use br_n4::br_n4;
pub use coeffs::{combinatorial_coeffs, lemma_cd_poly, CombCoeffs};
pub use craighero::craighero;
pub use dispatch::{dispatch, run_recipe, DispatchOptions, Recipe, Shape};
pub use kuroda::{kuroda_general, KurodaParams};

use crate::auto::Factor;
use crate::embedding::{pullback_embed, Embedding, TranscriptEntry};
use crate::error::Error;
use crate::poly::{t_pow, LaurentPoly, Var};

/// Checks `φ*(p) = expected` and records it; `lhs` names `p` in the
/// transcript.
pub(crate) fn identity(e: &Embedding, lhs: &str, p: &LaurentPoly, expected: &LaurentPoly) -> Result<TranscriptEntry, Error> {
    let image = pullback_embed(e, p)?;
    if &image != expected {
        return Err(Error::VerificationFailed(format!("{lhs} = {image}, expected {expected}")));
    }
    Ok(TranscriptEntry::new("identity", lhs, image))
}

pub(crate) fn elem(target: Var, add: LaurentPoly) -> Result<Factor, Error> {
    Factor::elem(target, add)
}

pub(crate) fn x_pow(e: i64) -> LaurentPoly {
    crate::poly::x_pow(e)
}

/// `t + t^l`.
pub(crate) fn t_plus(l: i64) -> LaurentPoly {
    &LaurentPoly::var(Var::T) + &t_pow(l)
}

fn parse(s: &str) -> LaurentPoly {
    s.parse().expect("literal polynomial")
}
