//! Automorphisms of affine 3-space (or of the plane over `k[x, x⁻¹]`) kept
//! as ordered lists of invertible generators.
//!
//! Lists are in application order: the first factor acts first on a point.
//! For factors `f_1, …, f_k` the composite is `F = f_k ∘ … ∘ f_1`, and its
//! pullback is `F* = f_1* ∘ … ∘ f_k*`.

mod truncated;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::{LaurentPoly, Rational, Substitution, Var};

/// A permutation of the coordinates, stored as the images `(x, y, z) ↦ word`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation([Var; 3]);

impl Permutation {
    pub fn new(word: [Var; 3]) -> Result<Self, Error> {
        let mut seen = [false; 3];
        for v in word {
            if v == Var::T {
                return Err(Error::InvalidFactor("permutations act on x, y, z only".into()));
            }
            if std::mem::replace(&mut seen[v.index()], true) {
                return Err(Error::InvalidFactor(format!("`{}` is not a permutation", word_string(&word))));
            }
        }
        Ok(Permutation(word))
    }

    pub fn identity() -> Self {
        Permutation(Var::XYZ)
    }

    /// Image of the i-th coordinate variable.
    pub fn word(&self) -> [Var; 3] {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Var::XYZ
    }

    pub fn inverse(&self) -> Self {
        let mut inv = Var::XYZ;
        for (i, v) in self.0.iter().enumerate() {
            inv[v.index()] = Var::XYZ[i];
        }
        Permutation(inv)
    }
}

fn word_string(word: &[Var; 3]) -> String {
    word.iter().map(|v| v.name()).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_string(&self.0))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let vars: Vec<Var> = s
            .trim()
            .chars()
            .map(|c| Var::from_char(c).ok_or_else(|| Error::InvalidFactor(format!("bad permutation word `{s}`"))))
            .collect::<Result<_, _>>()?;
        let word: [Var; 3] =
            vars.try_into().map_err(|_| Error::InvalidFactor(format!("permutation word `{s}` must have three letters")))?;
        Permutation::new(word)
    }
}

/// One invertible generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    /// `target ↦ target + add`, the other coordinates fixed.
    Elem {
        target: Var,
        add: LaurentPoly,
    },
    /// `target ↦ unit · target`.
    Scale {
        target: Var,
        unit: Rational,
    },
    Permute(Permutation),
}

impl Factor {
    /// Elementary map; `add` must not involve `target` (or `t`).
    pub fn elem(target: Var, add: LaurentPoly) -> Result<Self, Error> {
        check_coordinate(target)?;
        if add.involves(target) {
            return Err(Error::InvalidFactor(format!("payload {add} involves its target {target}")));
        }
        if add.involves(Var::T) {
            return Err(Error::InvalidFactor(format!("payload {add} involves t")));
        }
        Ok(Factor::Elem { target, add })
    }

    pub fn scale(target: Var, unit: Rational) -> Result<Self, Error> {
        check_coordinate(target)?;
        if unit.is_zero() {
            return Err(Error::InvalidFactor("scaling by zero".into()));
        }
        Ok(Factor::Scale { target, unit })
    }

    pub fn permute(word: [Var; 3]) -> Result<Self, Error> {
        Ok(Factor::Permute(Permutation::new(word)?))
    }

    pub fn inverse(&self) -> Factor {
        match self {
            Factor::Elem { target, add } => Factor::Elem { target: *target, add: -add },
            Factor::Scale { target, unit } => Factor::Scale { target: *target, unit: unit.recip() },
            Factor::Permute(p) => Factor::Permute(p.inverse()),
        }
    }

    /// True when the payload carries a negative power of `x`.
    pub fn is_laurent(&self) -> bool {
        match self {
            Factor::Elem { add, .. } => add.min_degree(Var::X).is_some_and(|e| e < 0),
            _ => false,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Factor::Elem { add, .. } => add.is_zero(),
            Factor::Scale { unit, .. } => unit.is_one(),
            Factor::Permute(p) => p.is_identity(),
        }
    }

    /// The substitution realizing this factor's pullback.
    pub fn substitution(&self) -> Substitution {
        match self {
            Factor::Elem { target, add } => Substitution::new().with(*target, &LaurentPoly::var(*target) + add),
            Factor::Scale { target, unit } => Substitution::new().with(*target, LaurentPoly::var(*target).scale(unit)),
            Factor::Permute(p) => {
                let mut sub = Substitution::new();
                for (i, v) in p.word().iter().enumerate() {
                    sub.set(Var::XYZ[i], LaurentPoly::var(*v));
                }
                sub
            }
        }
    }

    pub fn pullback(&self, p: &LaurentPoly) -> Result<LaurentPoly, Error> {
        p.substitute(&self.substitution())
    }

    /// Applies the point map to a triple of coordinate functions:
    /// `(f ∘ C)*(v) = f*(v)` evaluated at the triple of `C`.
    pub fn push_forward(&self, point: &[LaurentPoly; 3]) -> Result<[LaurentPoly; 3], Error> {
        let mut out = point.clone();
        match self {
            Factor::Elem { target, add } => {
                let sub = Substitution::new()
                    .with(Var::X, point[0].clone())
                    .with(Var::Y, point[1].clone())
                    .with(Var::Z, point[2].clone());
                out[target.index()] += &add.substitute(&sub)?;
            }
            Factor::Scale { target, unit } => {
                out[target.index()] = point[target.index()].scale(unit);
            }
            Factor::Permute(p) => {
                for (i, v) in p.word().iter().enumerate() {
                    out[i] = point[v.index()].clone();
                }
            }
        }
        Ok(out)
    }
}

fn check_coordinate(v: Var) -> Result<(), Error> {
    if v == Var::T {
        Err(Error::InvalidFactor("t is not a coordinate of affine 3-space".into()))
    } else {
        Ok(())
    }
}

/// A composite of factors in application order.
///
/// `laurent` is true until the composite has been checked to have
/// polynomial components; a list built only from polynomial factors starts
/// out non-Laurent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredAuto {
    factors: Vec<Factor>,
    laurent: bool,
}

impl FactoredAuto {
    pub fn new(factors: Vec<Factor>) -> Self {
        let laurent = factors.iter().any(Factor::is_laurent);
        FactoredAuto { factors, laurent }
    }

    pub fn identity() -> Self {
        FactoredAuto::default()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Appends a factor applied after the current composite.
    pub fn push(&mut self, f: Factor) {
        self.laurent |= f.is_laurent();
        self.factors.push(f);
    }

    /// `self` followed by `next`, i.e. the map `next ∘ self`.
    pub fn then(&self, next: &FactoredAuto) -> FactoredAuto {
        let mut factors = self.factors.clone();
        factors.extend(next.factors.iter().cloned());
        FactoredAuto { factors, laurent: self.laurent || next.laurent }
    }

    /// The first `n` factors.
    pub fn prefix(&self, n: usize) -> FactoredAuto {
        FactoredAuto::new(self.factors[..n].to_vec())
    }

    pub fn invert(&self) -> FactoredAuto {
        FactoredAuto { factors: self.factors.iter().rev().map(Factor::inverse).collect(), laurent: self.laurent }
    }

    /// `F*(p) = f_1*(f_2*(… f_k*(p)))`.
    pub fn pullback(&self, p: &LaurentPoly) -> Result<LaurentPoly, Error> {
        let mut acc = p.clone();
        for f in self.factors.iter().rev() {
            acc = f.pullback(&acc)?;
        }
        Ok(acc)
    }

    /// The three coordinate functions `(F*(x), F*(y), F*(z))`.
    pub fn to_triple(&self) -> Result<[LaurentPoly; 3], Error> {
        Ok([
            self.pullback(&LaurentPoly::var(Var::X))?,
            self.pullback(&LaurentPoly::var(Var::Y))?,
            self.pullback(&LaurentPoly::var(Var::Z))?,
        ])
    }

    /// The same triple computed by composing forward through the factors.
    pub fn to_triple_forward(&self) -> Result<[LaurentPoly; 3], Error> {
        let mut point = Var::XYZ.map(LaurentPoly::var);
        for f in &self.factors {
            point = f.push_forward(&point)?;
        }
        Ok(point)
    }

    /// Terms of each component with x-exponent below `bound`, computed
    /// without expanding the components in full.
    pub fn components_below(&self, bound: i64) -> Result<[LaurentPoly; 3], Error> {
        truncated::components_below(&self.factors, bound)
    }

    /// True iff every component lies in `k[x, y, z]`.
    pub fn is_polynomial_over_kx(&self) -> bool {
        // payloads never contain t, so only x can go negative
        match self.components_below(0) {
            Ok(parts) => parts.iter().all(LaurentPoly::is_zero),
            Err(_) => false,
        }
    }

    /// Checks polynomiality and clears the Laurent flag.
    pub fn into_polynomial(mut self) -> Result<FactoredAuto, Error> {
        if !self.laurent {
            return Ok(self);
        }
        let parts = self.components_below(0)?;
        if let Some((i, p)) = parts.iter().enumerate().find(|(_, p)| !p.is_zero()) {
            return Err(Error::ResultNotPolynomial(format!("component {} has negative part {p}", Var::XYZ[i])));
        }
        self.laurent = false;
        Ok(self)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Elem { target, add } => write!(f, "{target} += {add}"),
            Factor::Scale { target, unit } => write!(f, "{target} *= {unit}"),
            Factor::Permute(p) => write!(f, "(x, y, z) -> ({})", p.word().map(|v| v.to_string()).join(", ")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn elem(v: Var, s: &str) -> Factor {
        Factor::elem(v, p(s)).unwrap()
    }

    fn nagata_factors() -> FactoredAuto {
        FactoredAuto::new(vec![elem(Var::Z, "-y^2/x"), elem(Var::Y, "x^2*z"), elem(Var::Z, "y^2/x")])
    }

    fn triple(a: &str, b: &str, c: &str) -> [LaurentPoly; 3] {
        [p(a), p(b), p(c)]
    }

    #[test]
    fn pullback_examples() {
        let a = FactoredAuto::new(vec![elem(Var::Z, "-x^2")]);
        assert_eq!(a.pullback(&p("z")).unwrap(), p("z - x^2"));

        // the z-pullback of the composite only sees the first factor
        let ba = FactoredAuto::new(vec![elem(Var::Z, "-y^2/x"), elem(Var::Y, "x^2*z")]);
        assert_eq!(ba.pullback(&p("z")).unwrap(), p("z - y^2/x"));

        let q = p("x*y + z^3/x");
        assert_eq!(FactoredAuto::identity().pullback(&q).unwrap(), q);
    }

    #[test]
    fn nagata_triple() {
        let expected = triple("x", "y + x*(x*z - y^2)", "z + 2*y*(x*z - y^2) + x*(x*z - y^2)^2");
        assert_eq!(nagata_factors().to_triple().unwrap(), expected);
        assert_eq!(nagata_factors().to_triple_forward().unwrap(), expected);
        assert!(nagata_factors().is_polynomial_over_kx());
    }

    #[test]
    fn triple_examples() {
        assert_eq!(FactoredAuto::identity().to_triple().unwrap(), triple("x", "y", "z"));
        let a = FactoredAuto::new(vec![Factor::scale(Var::Y, int(-1)).unwrap(), elem(Var::Y, "x*z")]);
        assert_eq!(a.to_triple().unwrap(), triple("x", "-y + x*z", "z"));
    }

    #[test]
    fn inversion() {
        let a = FactoredAuto::new(vec![elem(Var::Z, "x^2")]);
        assert_eq!(a.invert().factors(), &[elem(Var::Z, "-x^2")]);
        let s = FactoredAuto::new(vec![Factor::scale(Var::Y, int(-4)).unwrap()]);
        assert_eq!(s.invert().factors(), &[Factor::scale(Var::Y, rat(-1, 4)).unwrap()]);

        let n = nagata_factors();
        let id = triple("x", "y", "z");
        assert_eq!(n.then(&n.invert()).to_triple().unwrap(), id);
        assert_eq!(n.invert().then(&n).to_triple().unwrap(), id);
    }

    #[test]
    fn permutation_inverse_and_pullback() {
        let perm = Factor::permute([Var::Z, Var::X, Var::Y]).unwrap();
        let a = FactoredAuto::new(vec![perm.clone()]);
        assert_eq!(a.to_triple().unwrap(), triple("z", "x", "y"));
        assert_eq!(a.then(&a.invert()).to_triple().unwrap(), triple("x", "y", "z"));
        assert!("xxz".parse::<Permutation>().is_err());
        assert_eq!("zxy".parse::<Permutation>().unwrap().to_string(), "zxy");
    }

    #[test]
    fn polynomiality() {
        assert!(!FactoredAuto::new(vec![elem(Var::Z, "-y^2/x")]).is_polynomial_over_kx());
        let mut conj = FactoredAuto::new(vec![elem(Var::Z, "-y^2/x^2"), elem(Var::Y, "x^3*z"), elem(Var::Z, "y^2/x^2")]);
        // y picks up -x*y^2, which leaves -2y^3/x in the last component
        assert_eq!(
            conj.to_triple().unwrap(),
            triple("x", "y + x^3*z - x*y^2", "z + 2*x*y*z - 2*y^3/x + x^4*z^2 - 2*x^2*y^2*z + y^4")
        );
        assert!(!conj.is_polynomial_over_kx());
        assert_eq!(conj.components_below(0).unwrap()[2], p("-2*y^3/x"));
        assert!(conj.clone().into_polynomial().is_err());

        conj.push(elem(Var::Z, "2*y^3/x"));
        assert!(conj.is_polynomial_over_kx());
        assert!(conj.is_laurent());
        assert!(!conj.into_polynomial().unwrap().is_laurent());
    }

    #[test]
    fn truncated_parts_match_full_expansion() {
        let a = FactoredAuto::new(vec![
            elem(Var::Y, "-z^3/x^2 + 3*x*z"),
            Factor::scale(Var::Y, int(-2)).unwrap(),
            elem(Var::Z, "x^5*y^2 - x*y"),
            Factor::permute([Var::X, Var::Z, Var::Y]).unwrap(),
            elem(Var::Y, "z^2/x^3 + x^2"),
        ]);
        let full = a.to_triple().unwrap();
        for bound in [-6, -1, 0, 2, 7] {
            let parts = a.components_below(bound).unwrap();
            for i in 0..3 {
                assert_eq!(parts[i], full[i].truncate_x(bound), "bound {bound}, component {i}");
            }
        }
    }

    #[test]
    fn elem_must_not_involve_target() {
        assert!(Factor::elem(Var::Y, p("y*x")).is_err());
        assert!(Factor::elem(Var::Y, p("t")).is_err());
        assert!(Factor::elem(Var::T, p("x")).is_err());
        assert!(Factor::scale(Var::X, int(0)).is_err());
    }
}
