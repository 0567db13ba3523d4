//! Exact construction and checking of rectifications of embeddings
//! `(tⁿ, tᵐ, tˡ + t)` of the affine line into affine 3-space.

pub mod auto;
pub mod cli;
pub mod document;
pub mod embedding;
pub mod error;
pub mod poly;
pub mod recipes;
pub mod residual;

pub use auto::{Factor, FactoredAuto, Permutation};
pub use document::CertificateDocument;
pub use embedding::{verify_certificate, Embedding, RectificationCertificate, TranscriptEntry};
pub use error::{Attempt, Error};
pub use poly::{LaurentPoly, Rational, Var};
