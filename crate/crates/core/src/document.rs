//! JSON form of a certificate.
//!
//! Field order is fixed: `version`, `embedding`, `coordinate`, `factors`,
//! `transcript`, `verified`. Polynomials use the canonical text form, so the
//! same certificate always serializes to the same bytes.

use serde::{Deserialize, Serialize};

use crate::auto::{Factor, FactoredAuto, Permutation};
use crate::embedding::{verify_certificate, Embedding, RectificationCertificate, TranscriptEntry};
use crate::error::Error;
use crate::poly::{LaurentPoly, Rational, Var};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDocument {
    /// `elem`, `scale` or `permute`.
    pub kind: String,
    /// A variable, or a permutation word such as `zxy`.
    pub target: String,
    /// Polynomial for `elem`, rational for `scale`, empty for `permute`.
    pub payload: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptDocument {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub version: String,
    pub embedding: [String; 3],
    pub coordinate: String,
    pub factors: Vec<FactorDocument>,
    pub transcript: Vec<TranscriptDocument>,
    /// Informational; readers re-verify.
    pub verified: bool,
}

fn factor_document(f: &Factor) -> FactorDocument {
    let (kind, target, payload) = match f {
        Factor::Elem { target, add } => ("elem", target.to_string(), add.to_string()),
        Factor::Scale { target, unit } => ("scale", target.to_string(), unit.to_string()),
        Factor::Permute(p) => ("permute", p.to_string(), String::new()),
    };
    FactorDocument { kind: kind.into(), target, payload }
}

fn parse_var(s: &str) -> Result<Var, Error> {
    let mut chars = s.trim().chars();
    match (chars.next().and_then(Var::from_char), chars.next()) {
        (Some(v), None) => Ok(v),
        _ => Err(Error::InvalidFactor(format!("bad target `{s}`"))),
    }
}

fn parse_factor(d: &FactorDocument) -> Result<Factor, Error> {
    match d.kind.as_str() {
        "elem" => Factor::elem(parse_var(&d.target)?, d.payload.parse()?),
        "scale" => {
            let unit: Rational =
                d.payload.trim().parse().map_err(|_| Error::InvalidFactor(format!("bad scale `{}`", d.payload)))?;
            Factor::scale(parse_var(&d.target)?, unit)
        }
        "permute" => Ok(Factor::Permute(d.target.parse::<Permutation>()?)),
        other => Err(Error::InvalidFactor(format!("unknown factor kind `{other}`"))),
    }
}

impl CertificateDocument {
    pub fn from_certificate(c: &RectificationCertificate) -> Self {
        let [x, y, z] = c.embedding.components();
        CertificateDocument {
            version: FORMAT_VERSION.into(),
            embedding: [x.to_string(), y.to_string(), z.to_string()],
            coordinate: c.coordinate.to_string(),
            factors: c.theta.factors().iter().map(factor_document).collect(),
            transcript: c
                .transcript
                .iter()
                .map(|e| TranscriptDocument { label: e.label.clone(), lhs: e.lhs.clone(), rhs: e.rhs.clone() })
                .collect(),
            verified: verify_certificate(c).is_ok(),
        }
    }

    /// Rebuilds the certificate without checking it; see [`verify_certificate`].
    pub fn to_certificate(&self) -> Result<RectificationCertificate, Error> {
        if self.version != FORMAT_VERSION {
            return Err(Error::InvalidArgument(format!("unsupported certificate version `{}`", self.version)));
        }
        let [x, y, z] = &self.embedding;
        let embedding = Embedding::new(x.parse()?, y.parse()?, z.parse()?)?;
        let coordinate: LaurentPoly = self.coordinate.parse()?;
        let factors = self.factors.iter().map(parse_factor).collect::<Result<Vec<_>, _>>()?;
        let transcript = self.transcript.iter().map(|e| TranscriptEntry::new(&e.label, &e.lhs, &e.rhs)).collect();
        Ok(RectificationCertificate { embedding, coordinate, theta: FactoredAuto::new(factors), transcript })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate documents serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::InvalidArgument(format!("bad certificate JSON: {e}")))
    }
}
