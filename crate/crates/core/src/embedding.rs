//! Embeddings of the affine line in affine 3-space and rectification
//! certificates for them.

use std::fmt;
use std::str::FromStr;

use crate::auto::{Factor, FactoredAuto};
use crate::error::Error;
use crate::poly::{LaurentPoly, Substitution, Var};

/// `t ↦ (X(t), Y(t), Z(t))` with `X = c·t^n`, `n ≥ 1`, and `Y`, `Z`
/// polynomials in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    comps: [LaurentPoly; 3],
}

impl Embedding {
    pub fn new(x: LaurentPoly, y: LaurentPoly, z: LaurentPoly) -> Result<Self, Error> {
        let comps = [x, y, z];
        for (v, c) in Var::XYZ.iter().zip(&comps) {
            if !c.only_involves(&[Var::T]) {
                return Err(Error::InvalidEmbedding(format!(
                    "{}-component {c} is not a polynomial in t",
                    v.name().to_ascii_uppercase()
                )));
            }
            if !c.is_polynomial() {
                return Err(Error::ResultNotPolynomial(format!("{}-component {c}", v.name().to_ascii_uppercase())));
            }
        }
        match comps[0].as_monomial() {
            Some((e, _)) if e.t >= 1 => {}
            Some(_) => return Err(Error::InvalidEmbedding(format!("X = {} has degree < 1", comps[0]))),
            None => return Err(Error::XNotMonomial(comps[0].to_string())),
        }
        Ok(Embedding { comps })
    }

    /// `(t^n, t^m, t^l + t)`.
    pub fn family(n: u32, m: u32, l: u32) -> Result<Self, Error> {
        let t = |k: u32| LaurentPoly::var_pow(Var::T, i64::from(k));
        Embedding::new(t(n)?, t(m)?, &t(l)? + &LaurentPoly::var(Var::T))
    }

    /// The standard embedding `t ↦ (t, 0, 0)`.
    pub fn standard() -> Self {
        Embedding { comps: [LaurentPoly::var(Var::T), LaurentPoly::zero(), LaurentPoly::zero()] }
    }

    pub fn x(&self) -> &LaurentPoly {
        &self.comps[0]
    }

    pub fn y(&self) -> &LaurentPoly {
        &self.comps[1]
    }

    pub fn z(&self) -> &LaurentPoly {
        &self.comps[2]
    }

    pub fn components(&self) -> &[LaurentPoly; 3] {
        &self.comps
    }

    fn substitution(&self) -> Substitution {
        Substitution::new()
            .with(Var::X, self.comps[0].clone())
            .with(Var::Y, self.comps[1].clone())
            .with(Var::Z, self.comps[2].clone())
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.comps[0], self.comps[1], self.comps[2])
    }
}

impl FromStr for Embedding {
    type Err = Error;

    /// Three comma-separated polynomials in `t`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidArgument(format!(
                "an embedding needs three comma-separated components, got {}",
                parts.len()
            )));
        }
        let mut comps = Vec::with_capacity(3);
        for part in parts {
            comps.push(crate::poly::parse(part)?);
        }
        let [x, y, z]: [LaurentPoly; 3] = comps.try_into().expect("three components");
        Embedding::new(x, y, z)
    }
}

/// `φ*(p)`: substitutes the components of `e` for `x, y, z`.
pub fn pullback_embed(e: &Embedding, p: &LaurentPoly) -> Result<LaurentPoly, Error> {
    if p.involves(Var::T) {
        return Err(Error::InvalidArgument(format!("{p} involves t")));
    }
    p.substitute(&e.substitution())
}

/// Pushes the components of `e` through the factors of `a` one at a time.
/// Intermediate components may carry negative powers of `t`.
pub fn push_point(a: &FactoredAuto, e: &Embedding) -> Result<[LaurentPoly; 3], Error> {
    let mut point = e.comps.clone();
    for f in a.factors() {
        point = f.push_forward(&point)?;
    }
    Ok(point)
}

/// The embedding `a ∘ e`.
pub fn apply_auto(a: &FactoredAuto, e: &Embedding) -> Result<Embedding, Error> {
    let [x, y, z] = push_point(a, e)?;
    Embedding::new(x, y, z)
}

/// One intermediate identity recorded while building a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

impl TranscriptEntry {
    pub fn new(label: impl Into<String>, lhs: impl Into<String>, rhs: impl fmt::Display) -> Self {
        TranscriptEntry { label: label.into(), lhs: lhs.into(), rhs: rhs.to_string() }
    }
}

impl fmt::Display for TranscriptEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.lhs, self.rhs)
    }
}

/// A coordinate `f` with `φ*(f) = t` and a polynomial automorphism `theta`
/// with `theta ∘ φ = (t, 0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectificationCertificate {
    pub embedding: Embedding,
    pub coordinate: LaurentPoly,
    pub theta: FactoredAuto,
    pub transcript: Vec<TranscriptEntry>,
}

impl RectificationCertificate {
    /// Whether the transcript has an entry with this exact right-hand side
    /// (and left-hand side, when given).
    pub fn transcript_has(&self, lhs: Option<&str>, rhs: &str) -> bool {
        self.transcript.iter().any(|e| e.rhs == rhs && lhs.is_none_or(|l| e.lhs == l))
    }
}

impl fmt::Display for RectificationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "embedding:  {}", self.embedding)?;
        writeln!(f, "coordinate: {}", self.coordinate)?;
        writeln!(f, "theta ({} factors, in application order):", self.theta.len())?;
        for (i, factor) in self.theta.factors().iter().enumerate() {
            writeln!(f, "  {:>3}. {factor}", i + 1)?;
        }
        if !self.transcript.is_empty() {
            writeln!(f, "transcript:")?;
            for entry in &self.transcript {
                writeln!(f, "  {entry}")?;
            }
        }
        Ok(())
    }
}

fn t_var() -> LaurentPoly {
    LaurentPoly::var(Var::T)
}

/// Completes a coordinate to a rectifying automorphism.
///
/// `f` is the `component` of `theta_prefix`; it must satisfy `φ*(f) = t`.
/// A permutation brings `f` to the first slot, after which the other two
/// components are polynomials `g₂(t)`, `g₃(t)` on the embedding, removed by
/// `y ↦ y − g₂(x)` and `z ↦ z − g₃(x)`.
pub fn rectify_from_coordinate(
    e: &Embedding,
    theta_prefix: &FactoredAuto,
    component: Var,
) -> Result<RectificationCertificate, Error> {
    if component == Var::T {
        return Err(Error::InvalidArgument("the coordinate component must be x, y or z".into()));
    }
    let prefix = theta_prefix.clone().into_polynomial()?;
    let f = prefix.pullback(&LaurentPoly::var(component))?;
    let image = pullback_embed(e, &f)?;
    if image != t_var() {
        return Err(Error::CoordinatePullbackNotT { coordinate: f.to_string(), image: image.to_string() });
    }

    let mut theta = prefix;
    let mut word = [component; 3];
    let mut rest = Var::XYZ.into_iter().filter(|v| *v != component);
    word[1] = rest.next().expect("two other coordinates");
    word[2] = rest.next().expect("two other coordinates");
    let perm = Factor::permute(word)?;
    if !perm.is_identity() {
        theta.push(perm);
    }

    let point = push_point(&theta, e)?;
    debug_assert_eq!(point[0], t_var());
    let mut transcript = vec![TranscriptEntry::new("coordinate", format!("phi*({f})"), t_var())];
    for (v, g) in [(Var::Y, &point[1]), (Var::Z, &point[2])] {
        if !g.is_polynomial() {
            return Err(Error::GNotPolynomial(g.to_string()));
        }
        transcript.push(TranscriptEntry::new(format!("g_{}", v.index() + 1), format!("g_{}(t)", v.index() + 1), g));
        let gx = g.substitute_var(Var::T, &LaurentPoly::var(Var::X))?;
        let step = Factor::elem(v, -gx)?;
        if !step.is_identity() {
            theta.push(step);
        }
    }

    let cert = RectificationCertificate { embedding: e.clone(), coordinate: f, theta, transcript };
    verify_certificate(&cert).map_err(|r| Error::VerificationFailed(r.join("; ")))?;
    Ok(cert)
}

/// Turns a certificate for `reduction ∘ e` into one for `e`.
pub fn precompose(
    reduction: &FactoredAuto,
    e: &Embedding,
    cert: RectificationCertificate,
) -> Result<RectificationCertificate, Error> {
    let reduction = reduction.clone().into_polynomial()?;
    let reduced = apply_auto(&reduction, e)?;
    if reduced != cert.embedding {
        return Err(Error::VerificationFailed(format!(
            "reduction sends {e} to {reduced}, the certificate is for {}",
            cert.embedding
        )));
    }
    let coordinate = reduction.pullback(&cert.coordinate)?;
    let theta = reduction.then(&cert.theta).into_polynomial()?;
    let mut transcript = vec![TranscriptEntry::new("reduction", format!("reduction applied to {e}"), &reduced)];
    transcript.extend(cert.transcript);
    let out = RectificationCertificate { embedding: e.clone(), coordinate, theta, transcript };
    verify_certificate(&out).map_err(|r| Error::VerificationFailed(r.join("; ")))?;
    Ok(out)
}

/// Re-derives every certificate invariant from scratch. On failure returns
/// the list of violated invariants.
pub fn verify_certificate(c: &RectificationCertificate) -> Result<(), Vec<String>> {
    let mut reasons = Vec::new();
    let e = &c.embedding;
    if let Err(err) = Embedding::new(e.x().clone(), e.y().clone(), e.z().clone()) {
        reasons.push(format!("embedding: {err}"));
        return Err(reasons);
    }

    if !c.coordinate.only_involves(&Var::XYZ) || !c.coordinate.is_polynomial() {
        reasons.push(format!("coordinate {} is not in k[x, y, z]", c.coordinate));
    } else {
        match pullback_embed(e, &c.coordinate) {
            Ok(img) if img == t_var() => {}
            Ok(img) => reasons.push(format!("pullback of the coordinate is {img}, not t")),
            Err(err) => reasons.push(format!("pullback of the coordinate: {err}")),
        }
    }

    match c.theta.components_below(0) {
        Ok(parts) => {
            for (v, p) in Var::XYZ.iter().zip(&parts) {
                if !p.is_zero() {
                    reasons.push(format!("theta*({v}) has negative part {p}"));
                }
            }
        }
        Err(err) => reasons.push(format!("theta: {err}")),
    }

    match push_point(&c.theta, e) {
        Ok(point) => {
            if point != [t_var(), LaurentPoly::zero(), LaurentPoly::zero()] {
                reasons.push(format!("theta sends the embedding to ({}, {}, {}), not (t, 0, 0)", point[0], point[1], point[2]));
            }
        }
        Err(err) => reasons.push(format!("applying theta: {err}")),
    }

    if reasons.is_empty() && !coordinate_in_prefix(c) {
        reasons.push(format!("coordinate {} is not a component of any prefix of theta", c.coordinate));
    }

    if reasons.is_empty() {
        Ok(())
    } else {
        Err(reasons)
    }
}

fn coordinate_in_prefix(c: &RectificationCertificate) -> bool {
    let matches = |prefix: &FactoredAuto, v: Var| prefix.pullback(&LaurentPoly::var(v)).is_ok_and(|p| p == c.coordinate);
    if matches(&c.theta, Var::X) {
        return true;
    }
    // Only components sending the embedding to t can equal the coordinate.
    let mut point = c.embedding.components().clone();
    for k in 0..=c.theta.len() {
        if k > 0 {
            match c.theta.factors()[k - 1].push_forward(&point) {
                Ok(p) => point = p,
                Err(_) => return false,
            }
        }
        for (i, v) in Var::XYZ.iter().enumerate() {
            if point[i] == t_var() && matches(&c.theta.prefix(k), *v) {
                return true;
            }
        }
    }
    false
}
