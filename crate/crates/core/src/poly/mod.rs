//! Sparse Laurent polynomials over the rationals in the fixed alphabet
//! `x, y, z, t`.
//!
//! `x` and `t` may carry negative exponents, `y` and `z` may not. Every
//! operation returns a normalized polynomial: no stored zero coefficients and
//! one entry per exponent vector, so the empty map is the zero polynomial.

mod format;
mod parse;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use parse::{parse, ParseError};

use crate::error::Error;

/// Exact rational scalar (the ground field).
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The four variables of the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];
    /// The coordinate variables of affine 3-space.
    pub const XYZ: [Var; 3] = [Var::X, Var::Y, Var::Z];

    /// Whether negative exponents are allowed for this variable.
    pub fn is_laurent(self) -> bool {
        matches!(self, Var::X | Var::T)
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
            Var::T => 't',
        }
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.trim().chars();
        match (chars.next().and_then(Var::from_char), chars.next()) {
            (Some(v), None) => Ok(v),
            _ => Err(Error::InvalidArgument(format!("unknown variable `{s}`"))),
        }
    }
}

/// Exponents of a monomial `x^x y^y z^z t^t`.
///
/// Field order is the canonical term order: the derived `Ord` compares
/// `(x, y, z, t)` lexicographically, and polynomials print terms in
/// descending order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    pub x: i64,
    pub y: u32,
    pub z: u32,
    pub t: i64,
}

impl ExponentVector {
    pub const ZERO: ExponentVector = ExponentVector { x: 0, y: 0, z: 0, t: 0 };

    /// Exponent vector with a single variable raised to `e`.
    pub fn single(var: Var, e: i64) -> Result<Self, Error> {
        let mut ev = ExponentVector::ZERO;
        ev.set(var, e)?;
        Ok(ev)
    }

    pub fn get(&self, var: Var) -> i64 {
        match var {
            Var::X => self.x,
            Var::Y => i64::from(self.y),
            Var::Z => i64::from(self.z),
            Var::T => self.t,
        }
    }

    pub fn set(&mut self, var: Var, e: i64) -> Result<(), Error> {
        match var {
            Var::X => self.x = e,
            Var::T => self.t = e,
            Var::Y | Var::Z => {
                let e =
                    u32::try_from(e).map_err(|_| if e < 0 { Error::NegativeExponent(var) } else { Error::ExponentOverflow })?;
                if var == Var::Y {
                    self.y = e;
                } else {
                    self.z = e;
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        *self == ExponentVector::ZERO
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Option<ExponentVector> {
        Some(ExponentVector {
            x: self.x.checked_add(other.x)?,
            y: self.y.checked_add(other.y)?,
            z: self.z.checked_add(other.z)?,
            t: self.t.checked_add(other.t)?,
        })
    }

    pub fn checked_scale(&self, k: i64) -> Option<ExponentVector> {
        let y = i64::from(self.y).checked_mul(k)?;
        let z = i64::from(self.z).checked_mul(k)?;
        Some(ExponentVector {
            x: self.x.checked_mul(k)?,
            y: u32::try_from(y).ok()?,
            z: u32::try_from(z).ok()?,
            t: self.t.checked_mul(k)?,
        })
    }
}

/// A sparse Laurent polynomial with rational coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(c, ExponentVector::ZERO)
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::var_pow(v, 1).expect("exponent 1 is always valid")
    }

    /// `v^e`; negative `e` only for Laurent variables.
    pub fn var_pow(v: Var, e: i64) -> Result<Self, Error> {
        Ok(LaurentPoly::monomial(Rational::one(), ExponentVector::single(v, e)?))
    }

    pub fn monomial(c: Rational, exps: ExponentVector) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { terms }
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * m` in place, keeping the representation normalized.
    pub fn add_term(&mut self, exps: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The single term, if this polynomial is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// The constant value, if this polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&ExponentVector::ZERO).cloned(),
            _ => None,
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e.get(v) != 0)
    }

    /// Largest exponent of `v`, `None` for the zero polynomial.
    pub fn max_degree(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|e| e.get(v)).max()
    }

    /// Smallest exponent of `v`, `None` for the zero polynomial.
    pub fn min_degree(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|e| e.get(v)).min()
    }

    /// Minimum x-exponent over the terms; `None` stands for +∞ (zero polynomial).
    pub fn x_valuation(&self) -> Option<i64> {
        self.min_degree(Var::X)
    }

    /// Splits into the terms with negative x-exponent and the rest.
    pub fn split_by_x_sign(&self) -> (LaurentPoly, LaurentPoly) {
        let (neg, nonneg): (BTreeMap<_, _>, BTreeMap<_, _>) =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).partition(|(e, _)| e.x < 0);
        (LaurentPoly { terms: neg }, LaurentPoly { terms: nonneg })
    }

    /// Terms with x-exponent strictly below `bound`.
    pub fn truncate_x(&self, bound: i64) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().filter(|(e, _)| e.x < bound).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// True when no term has a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.x >= 0 && e.t >= 0)
    }

    /// True when only the listed variables occur.
    pub fn only_involves(&self, vars: &[Var]) -> bool {
        Var::ALL.iter().filter(|v| !vars.contains(v)).all(|v| !self.involves(*v))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// Multiplies by the monomial `c * m`.
    pub fn mul_monomial(&self, m: &ExponentVector, c: &Rational) -> Result<LaurentPoly, Error> {
        if c.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let mut terms = BTreeMap::new();
        for (e, k) in &self.terms {
            let ne = e.checked_add(m).ok_or(Error::ExponentOverflow)?;
            terms.insert(ne, k * c);
        }
        Ok(LaurentPoly { terms })
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.mul_truncated(other, None)
    }

    /// Product keeping only terms with x-exponent below `bound` (all terms
    /// for `None`).
    pub fn mul_truncated(&self, other: &LaurentPoly, bound: Option<i64>) -> Result<LaurentPoly, Error> {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let e = ea.checked_add(eb).ok_or(Error::ExponentOverflow)?;
                if let Some(b) = bound {
                    if e.x >= b {
                        continue;
                    }
                }
                let prod = ca * cb;
                match acc.entry(e) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() += prod;
                    }
                }
            }
        }
        Ok(LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, k: u32) -> Result<LaurentPoly, Error> {
        if let Some((e, c)) = self.as_monomial() {
            let ne = e.checked_scale(i64::from(k)).ok_or(Error::ExponentOverflow)?;
            return Ok(LaurentPoly::monomial(num_traits::pow(c.clone(), k as usize), ne));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Integer power; negative exponents need an invertible monomial.
    pub fn powi(&self, k: i64) -> Result<LaurentPoly, Error> {
        if k >= 0 {
            let k = u32::try_from(k).map_err(|_| Error::ExponentOverflow)?;
            return self.pow(k);
        }
        self.inverse_monomial()?.pow(u32::try_from(-k).map_err(|_| Error::ExponentOverflow)?)
    }

    /// The inverse of a monomial in the Laurent variables `x`, `t`.
    pub fn inverse_monomial(&self) -> Result<LaurentPoly, Error> {
        let (e, c) = self.as_monomial().ok_or(Error::NonMonomialPower)?;
        if e.y != 0 || e.z != 0 {
            return Err(Error::NonMonomialPower);
        }
        let inv = ExponentVector { x: -e.x, y: 0, z: 0, t: -e.t };
        Ok(LaurentPoly::monomial(c.recip(), inv))
    }

    /// Image under the ring homomorphism defined by `sub`.
    pub fn substitute(&self, sub: &Substitution) -> Result<LaurentPoly, Error> {
        if sub.is_identity() || self.is_zero() {
            return Ok(self.clone());
        }
        let mut powers = PowerCache::new(sub);
        let mut out: HashMap<ExponentVector, Rational> = HashMap::new();
        // Terms sharing the mapped part of the exponent share one product.
        let mut groups: BTreeMap<[i64; 4], Vec<(ExponentVector, &Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = [0i64; 4];
            let mut rest = *e;
            for v in Var::ALL {
                if sub.get(v).is_some() {
                    key[v.index()] = e.get(v);
                    rest.set(v, 0)?;
                }
            }
            groups.entry(key).or_default().push((rest, c));
        }
        for (key, members) in groups {
            let mut prod = LaurentPoly::one();
            for v in Var::ALL {
                let k = key[v.index()];
                if k != 0 {
                    prod = prod.try_mul(powers.get(v, k)?)?;
                }
            }
            for (rest, c) in members {
                for (pe, pc) in &prod.terms {
                    let e = pe.checked_add(&rest).ok_or(Error::ExponentOverflow)?;
                    *out.entry(e).or_insert_with(Rational::zero) += pc * c;
                }
            }
        }
        Ok(LaurentPoly { terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Shorthand for substituting a single variable.
    pub fn substitute_var(&self, v: Var, image: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.substitute(&Substitution::new().with(v, image.clone()))
    }

    /// Formal partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let k = e.get(v);
            if k == 0 {
                continue;
            }
            let mut ne = *e;
            // k != 0, so k - 1 >= 0 for the non-Laurent variables
            ne.set(v, k - 1).expect("exponent stays valid");
            out.add_term(ne, c * Rational::from_integer(BigInt::from(k)));
        }
        out
    }

    /// True when every term is divisible by `y^c`.
    pub fn in_y_ideal(&self, c: u32) -> bool {
        self.terms.keys().all(|e| e.y >= c)
    }
}

/// Assignment of images to variables; unmapped variables stay fixed.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    images: [Option<LaurentPoly>; 4],
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn with(mut self, v: Var, image: LaurentPoly) -> Self {
        self.images[v.index()] = Some(image);
        self
    }

    pub fn set(&mut self, v: Var, image: LaurentPoly) {
        self.images[v.index()] = Some(image);
    }

    pub fn get(&self, v: Var) -> Option<&LaurentPoly> {
        self.images[v.index()].as_ref()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().all(Option::is_none)
    }
}

/// Powers of the images of a substitution, computed on demand.
struct PowerCache<'a> {
    sub: &'a Substitution,
    cache: HashMap<(Var, i64), LaurentPoly>,
}

impl<'a> PowerCache<'a> {
    fn new(sub: &'a Substitution) -> Self {
        PowerCache { sub, cache: HashMap::new() }
    }

    fn get(&mut self, v: Var, k: i64) -> Result<&LaurentPoly, Error> {
        if !self.cache.contains_key(&(v, k)) {
            let image = self.sub.get(v).expect("only mapped variables are cached");
            let value = if k < 0 {
                let inv = image.inverse_monomial().map_err(|_| Error::NonMonomialSubstitution(v))?;
                let k = u32::try_from(-k).map_err(|_| Error::ExponentOverflow)?;
                inv.pow(k)?
            } else if k == 1 {
                image.clone()
            } else {
                let prev = self.get(v, k - 1)?.clone();
                prev.try_mul(image)?
            };
            self.cache.insert((v, k), value);
        }
        Ok(&self.cache[&(v, k)])
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

/// Panics on exponent overflow; use [`LaurentPoly::try_mul`] to handle it.
impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("exponent overflow in polynomial product")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::constant(int(n))
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

/// `c * x^ex y^ey z^ez t^et`, for building fixtures and recipe payloads.
pub fn mono(c: Rational, ex: i64, ey: u32, ez: u32, et: i64) -> LaurentPoly {
    LaurentPoly::monomial(c, ExponentVector { x: ex, y: ey, z: ez, t: et })
}

/// `t^e` with coefficient one.
pub fn t_pow(e: i64) -> LaurentPoly {
    mono(Rational::one(), 0, 0, 0, e)
}

/// `x^e` with coefficient one.
pub fn x_pow(e: i64) -> LaurentPoly {
    mono(Rational::one(), e, 0, 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn single_term_product() {
        assert_eq!(&p("y^2") * &p("x^-1"), p("y^2/x"));
        assert_eq!(p("y^2/x").len(), 1);
    }

    #[test]
    fn square_of_nagata_invariant() {
        let q = p("x*z - y^2").pow(2).unwrap();
        assert_eq!(q, p("x^2*z^2 - 2*x*y^2*z + y^4"));
    }

    #[test]
    fn cube_by_binomial_expansion() {
        let cube = p("t + t^5").pow(3).unwrap();
        // binomial coefficients 1, 3, 3, 1 on exponents 3, 7, 11, 15
        let mut expected = LaurentPoly::zero();
        for (i, c) in [1, 3, 3, 1].into_iter().enumerate() {
            let i = i as i64;
            expected += &mono(int(c), 0, 0, 0, 5 * i + (3 - i));
        }
        assert_eq!(cube, expected);
        assert_eq!(cube, p("t^3 + 3*t^7 + 3*t^11 + t^15"));
    }

    #[test]
    fn negative_power_needs_monomial() {
        assert_eq!(p("2*x^3").powi(-2).unwrap(), p("1/4/x^6"));
        assert!(matches!(p("x + 1").powi(-1), Err(Error::NonMonomialPower)));
        assert!(matches!(p("y").powi(-1), Err(Error::NonMonomialPower)));
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let big = x_pow(i64::MAX / 2 + 1);
        assert!(matches!(big.pow(2), Err(Error::ExponentOverflow)));
        assert!(matches!(big.try_mul(&big), Err(Error::ExponentOverflow)));
    }

    #[test]
    fn substitution_examples() {
        let sub = Substitution::new().with(Var::X, p("t^2")).with(Var::Y, p("t^3")).with(Var::Z, p("t^4 + t"));
        assert_eq!(p("z - x^2").substitute(&sub).unwrap(), p("t"));

        let sub = Substitution::new().with(Var::X, p("t^3")).with(Var::Y, p("t^4")).with(Var::Z, p("t^5 + t"));
        assert_eq!(p("y - z^2/x^2 + 2").substitute(&sub).unwrap(), p("-1/t^4"));

        let q = p("x^-3*y + z");
        assert_eq!(q.substitute(&Substitution::new()).unwrap(), q);
    }

    #[test]
    fn negative_exponent_needs_monomial_image() {
        let sub = Substitution::new().with(Var::X, p("t + 1"));
        assert!(matches!(p("y/x").substitute(&sub), Err(Error::NonMonomialSubstitution(Var::X))));
        // a monomial image with a coefficient is inverted exactly
        let sub = Substitution::new().with(Var::X, p("2*t^2"));
        assert_eq!(p("1/x^2").substitute(&sub).unwrap(), p("1/4/t^4"));
    }

    #[test]
    fn split_examples() {
        let (neg, nonneg) = p("z + 2*x*y*z - 2*y^3/x + y^4").split_by_x_sign();
        assert_eq!(neg, p("-2*y^3/x"));
        assert_eq!(nonneg, p("z + 2*x*y*z + y^4"));

        let (neg, nonneg) = LaurentPoly::zero().split_by_x_sign();
        assert!(neg.is_zero() && nonneg.is_zero());

        let all = p("y^2/x^2 + y/x");
        let (neg, nonneg) = all.split_by_x_sign();
        assert_eq!(neg, all);
        assert!(nonneg.is_zero());
    }

    #[test]
    fn x_valuation_examples() {
        assert_eq!(p("-2*y^3/x").x_valuation(), Some(-1));
        assert_eq!(LaurentPoly::zero().x_valuation(), None);
        assert_eq!(p("x^2*z + y/x^3").x_valuation(), Some(-3));
    }

    #[test]
    fn derivative_and_ideal() {
        assert_eq!(p("x*z^3 + y").derivative(Var::Z), p("3*x*z^2"));
        assert!(p("y^2*x + y^3/x").in_y_ideal(2));
        assert!(!p("y^2*x + y").in_y_ideal(2));
    }

    #[test]
    fn negative_y_exponent_rejected() {
        assert!(matches!(ExponentVector::single(Var::Y, -1), Err(Error::NegativeExponent(Var::Y))));
    }
}
