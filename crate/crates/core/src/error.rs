use thiserror::Error;

use crate::poly::{ParseError, Var};

/// One recipe tried by the dispatcher and why it did not produce a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attempt {
    pub recipe: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("negative power of a non-monomial or of a non-Laurent variable")]
    NonMonomialPower,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("negative exponent on `{0}`, which is not a Laurent variable")]
    NegativeExponent(Var),
    #[error("`{0}` occurs with a negative exponent but its image is not an invertible monomial")]
    NonMonomialSubstitution(Var),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid factor: {0}")]
    InvalidFactor(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("result is not polynomial: {0}")]
    ResultNotPolynomial(String),
    #[error("first component is not a monomial: {0}")]
    XNotMonomial(String),
    #[error("coordinate {coordinate} pulls back to {image}, not t")]
    CoordinatePullbackNotT { coordinate: String, image: String },
    #[error("translation polynomial is not polynomial in t: {0}")]
    GNotPolynomial(String),
    #[error("pullback of the chosen component is {image}, not t")]
    PullbackNotT { image: String },
    #[error("negative part {residue} involves the clearing target")]
    NonClearable { residue: String },
    #[error("x-valuation did not increase ({before} -> {after})")]
    Stalled { before: i64, after: i64 },
    #[error("clearing did not finish within {0} iterations")]
    MaxIters(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("recipe inapplicable: {0}")]
    RecipeInapplicable(String),
    #[error("no recipe applies{}", format_attempts(.0))]
    NoRecipeApplies(Vec<Attempt>),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

fn format_attempts(attempts: &[Attempt]) -> String {
    let mut out = String::new();
    for a in attempts {
        out.push_str(&format!("\n  {}: {}", a.recipe, a.reason));
    }
    out
}

impl Error {
    /// Errors meaning "this recipe does not cover the input", as opposed to
    /// malformed input or an internal inconsistency.
    pub fn is_inapplicable(&self) -> bool {
        matches!(self, Error::PreconditionViolated(_) | Error::RecipeInapplicable(_) | Error::NoRecipeApplies(_))
    }
}
