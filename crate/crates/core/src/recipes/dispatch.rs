use std::fmt;
use std::str::FromStr;

use super::{br_general, br_n4, craighero, elem, kuroda_general, x_pow, KurodaParams};
use crate::auto::{Factor, FactoredAuto};
use crate::embedding::{rectify_from_coordinate, Embedding, RectificationCertificate};
use crate::error::{Attempt, Error};
use crate::poly::{rat, LaurentPoly, Var};

/// Exponents of an embedding `(tⁿ, tᵐ, tˡ + t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub n: u32,
    pub m: u32,
    pub l: u32,
}

fn unit_power(p: &LaurentPoly) -> Option<u32> {
    let (ex, c) = p.as_monomial()?;
    if *c != rat(1, 1) || ex.x != 0 || ex.y != 0 || ex.z != 0 {
        return None;
    }
    u32::try_from(ex.t).ok().filter(|e| *e >= 1)
}

impl Shape {
    pub fn of(e: &Embedding) -> Option<Shape> {
        let n = unit_power(e.x())?;
        let m = unit_power(e.y())?;
        let t = LaurentPoly::var(Var::T);
        let l = if e.z() == &t.scale(&rat(2, 1)) { 1 } else { unit_power(&(e.z() - &t)).filter(|l| *l >= 2)? };
        Some(Shape { n, m, l })
    }
}

/// Search bounds for the parametric recipes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DispatchOptions {
    pub max_c: u32,
    pub max_l: u32,
    pub max_s: u32,
}

impl Default for DispatchOptions {
    fn default() -> Self {
        DispatchOptions { max_c: 8, max_l: 8, max_s: 8 }
    }
}

/// A recipe selected by name, as accepted by `--recipe`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    Auto,
    Trivial,
    Craighero3,
    Craighero4,
    BrGeneral(Option<u32>),
    BrN4,
    /// `(a, c, l, s)`; `n` comes from the embedding.
    Kuroda(Option<(u32, u32, u32, u32)>),
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Auto => f.write_str("auto"),
            Recipe::Trivial => f.write_str("trivial"),
            Recipe::Craighero3 => f.write_str("craighero3"),
            Recipe::Craighero4 => f.write_str("craighero4"),
            Recipe::BrGeneral(None) => f.write_str("br-general"),
            Recipe::BrGeneral(Some(b)) => write!(f, "br-general:{b}"),
            Recipe::BrN4 => f.write_str("br-n4"),
            Recipe::Kuroda(None) => f.write_str("kuroda"),
            Recipe::Kuroda(Some((a, c, l, s))) => write!(f, "kuroda:{a},{c},{l},{s}"),
        }
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("unknown recipe `{s}`"));
        let (name, args) = match s.split_once(':') {
            Some((name, args)) => (name, Some(args)),
            None => (s, None),
        };
        let nums =
            |args: &str| -> Result<Vec<u32>, Error> { args.split(',').map(|a| a.trim().parse().map_err(|_| bad())).collect() };
        match (name, args) {
            ("auto", None) => Ok(Recipe::Auto),
            ("trivial", None) => Ok(Recipe::Trivial),
            ("craighero3", None) => Ok(Recipe::Craighero3),
            ("craighero4", None) => Ok(Recipe::Craighero4),
            ("br-n4", None) => Ok(Recipe::BrN4),
            ("br-general", None) => Ok(Recipe::BrGeneral(None)),
            ("br-general", Some(args)) => match nums(args)?[..] {
                [b] => Ok(Recipe::BrGeneral(Some(b))),
                _ => Err(bad()),
            },
            ("kuroda", None) => Ok(Recipe::Kuroda(None)),
            ("kuroda", Some(args)) => match nums(args)?[..] {
                [a, c, l, s] => Ok(Recipe::Kuroda(Some((a, c, l, s)))),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

fn shape(e: &Embedding) -> Result<Shape, Error> {
    Shape::of(e).ok_or_else(|| Error::RecipeInapplicable(format!("{e} is not of the form (t^n, t^m, t^l + t)")))
}

fn trivial(e: &Embedding) -> Result<RectificationCertificate, Error> {
    let Shape { n, m, l } = shape(e)?;
    if n == 1 {
        return rectify_from_coordinate(e, &FactoredAuto::identity(), Var::X);
    }
    if m == 1 {
        return rectify_from_coordinate(e, &FactoredAuto::identity(), Var::Y);
    }
    if l == 1 {
        return rectify_from_coordinate(e, &FactoredAuto::new(vec![Factor::scale(Var::Z, rat(1, 2))?]), Var::Z);
    }
    // z − xⁱyʲ with in + jm = l
    for j in 0..=l / m {
        let rest = l - j * m;
        if rest % n == 0 {
            let payload = &x_pow((rest / n).into()) * &LaurentPoly::var(Var::Y).pow(j)?;
            return rectify_from_coordinate(e, &FactoredAuto::new(vec![elem(Var::Z, -payload)?]), Var::Z);
        }
    }
    Err(Error::RecipeInapplicable(format!("{l} is not a non-negative combination of {n} and {m}")))
}

fn exact(e: &Embedding, which: u32) -> Result<RectificationCertificate, Error> {
    let expected = if which == 3 { Embedding::family(3, 4, 5)? } else { Embedding::family(4, 5, 6)? };
    if e != &expected {
        return Err(Error::RecipeInapplicable(format!("craighero{which} only covers {expected}")));
    }
    craighero(which)
}

fn br(e: &Embedding, b: Option<u32>) -> Result<RectificationCertificate, Error> {
    let Shape { n, m, l } = shape(e)?;
    let b = match b {
        Some(b) => b,
        None if (l + 1) % n == 0 => (l + 1) / n,
        None => return Err(Error::RecipeInapplicable(format!("{l} + 1 is not a multiple of {n}"))),
    };
    if b * n != l + 1 {
        return Err(Error::RecipeInapplicable(format!("l = {l} is not bn - 1 for b = {b}")));
    }
    br_general(n, m, b)
}

fn n4(e: &Embedding) -> Result<RectificationCertificate, Error> {
    let Shape { n, m, l } = shape(e)?;
    if n != 4 || m % 4 != 1 {
        return Err(Error::RecipeInapplicable(format!("needs n = 4 and m = 1 mod 4, got n = {n}, m = {m}")));
    }
    br_n4((m - 1) / 4, l)
}

fn kuroda_params(s: Shape, opts: &DispatchOptions) -> Vec<KurodaParams> {
    let Shape { n, m, l: z } = s;
    let mut out = Vec::new();
    for c in 1..=opts.max_c.max(n - 1).min(m) {
        if (m - c) % n != 0 || m - c < n {
            continue;
        }
        let a = (m - c) / n;
        for s in 1..=opts.max_s {
            let ms = u64::from(m) * u64::from(s);
            if ms <= u64::from(z) || (ms - u64::from(z)) % u64::from(n) != 0 {
                continue;
            }
            let Ok(l) = u32::try_from((ms - u64::from(z)) / u64::from(n)) else { continue };
            if (1..=opts.max_l).contains(&l) && c * l < a {
                out.push(KurodaParams { n, a, c, l, s });
            }
        }
    }
    out
}

fn kuroda(
    e: &Embedding,
    params: Option<(u32, u32, u32, u32)>,
    opts: &DispatchOptions,
) -> Result<RectificationCertificate, Error> {
    let sh = shape(e)?;
    if let Some((a, c, l, s)) = params {
        let p = KurodaParams::new(sh.n, a, c, l, s)?;
        if p.embedding()? != *e {
            return Err(Error::RecipeInapplicable(format!("parameters {p:?} describe {}, not {e}", p.embedding()?)));
        }
        return kuroda_general(p);
    }
    let mut last = None;
    for p in kuroda_params(sh, opts) {
        match kuroda_general(p) {
            Ok(cert) => return Ok(cert),
            Err(err) => last = Some(err),
        }
    }
    Err(last.unwrap_or_else(|| Error::RecipeInapplicable("no (a, c, l, s) within the search bounds".into())))
}

/// Runs one named recipe on `e`; `Recipe::Auto` is [`dispatch`] with default options.
pub fn run_recipe(e: &Embedding, recipe: Recipe) -> Result<RectificationCertificate, Error> {
    let opts = DispatchOptions::default();
    match recipe {
        Recipe::Auto => dispatch(e, &opts),
        Recipe::Trivial => trivial(e),
        Recipe::Craighero3 => exact(e, 3),
        Recipe::Craighero4 => exact(e, 4),
        Recipe::BrGeneral(b) => br(e, b),
        Recipe::BrN4 => n4(e),
        Recipe::Kuroda(p) => kuroda(e, p, &opts),
    }
}

type Attempted<'a> = dyn Fn() -> Result<RectificationCertificate, Error> + 'a;

/// Tries the recipes in a fixed order and returns the first certificate.
pub fn dispatch(e: &Embedding, opts: &DispatchOptions) -> Result<RectificationCertificate, Error> {
    let Some(_) = Shape::of(e) else {
        return Err(Error::NoRecipeApplies(vec![Attempt {
            recipe: "shape".into(),
            reason: format!("{e} is not of the form (t^n, t^m, t^l + t)"),
        }]));
    };
    let tries: [(Recipe, &Attempted); 6] = [
        (Recipe::Trivial, &|| trivial(e)),
        (Recipe::Craighero3, &|| exact(e, 3)),
        (Recipe::Craighero4, &|| exact(e, 4)),
        (Recipe::Kuroda(None), &|| kuroda(e, None, opts)),
        (Recipe::BrGeneral(None), &|| br(e, None)),
        (Recipe::BrN4, &|| n4(e)),
    ];
    let mut attempts = Vec::new();
    for (recipe, run) in tries {
        match run() {
            Ok(cert) => return Ok(cert),
            Err(err) => attempts.push(Attempt { recipe: recipe.to_string(), reason: err.to_string() }),
        }
    }
    Err(Error::NoRecipeApplies(attempts))
}
