use std::fmt::{self, Write};

use num_traits::{One, Signed};

use super::{ExponentVector, LaurentPoly, Rational, Var};

// Canonical text: terms in descending (x, y, z, t) order, `c*m/d` per term
// where `d` collects the negative powers. The parser accepts everything
// printed here.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term(f, e, &c.abs())?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, e: &ExponentVector, c: &Rational) -> fmt::Result {
    let mut numer = Vec::new();
    let mut denom = Vec::new();
    for v in Var::ALL {
        let k = e.get(v);
        if k > 0 {
            numer.push(power(v, k));
        } else if k < 0 {
            denom.push(power(v, -k));
        }
    }
    if numer.is_empty() {
        write!(f, "{c}")?;
    } else {
        if !c.is_one() {
            write!(f, "{c}*")?;
        }
        f.write_str(&numer.join("*"))?;
    }
    for d in denom {
        write!(f, "/{d}")?;
    }
    Ok(())
}

fn power(v: Var, k: i64) -> String {
    if k == 1 {
        v.to_string()
    } else {
        format!("{v}^{k}")
    }
}
