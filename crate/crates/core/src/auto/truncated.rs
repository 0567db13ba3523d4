//! Low-order parts of a composite's components.
//!
//! The components of a long composite can be far larger than their terms of
//! low x-degree. Three passes over the factor list compute exactly the terms
//! with x-exponent below a bound:
//!
//! 1. forward: lower bounds on the x-valuation of every component, and the
//!    exact first component while it is a monomial in `x`;
//! 2. backward: the precision (an x-exponent bound) each component needs
//!    before each factor so that the final bound is met;
//! 3. forward: evaluation with every product truncated to that precision.

use std::collections::{BTreeMap, HashMap};

use super::Factor;
use crate::error::Error;
use crate::poly::{ExponentVector, LaurentPoly, Var};

/// Valuation data of the components before one factor.
#[derive(Clone)]
struct State {
    vals: [i64; 3],
    x_mono: Option<LaurentPoly>,
}

/// One payload grouped by its `(y, z)` exponents: `G(x) * y^a * z^b`.
struct Group {
    ey: u32,
    ez: u32,
    g: LaurentPoly,
}

fn groups(add: &LaurentPoly) -> Vec<Group> {
    let mut by_yz: BTreeMap<(u32, u32), LaurentPoly> = BTreeMap::new();
    for (e, c) in add.terms() {
        let mut xe = ExponentVector::ZERO;
        xe.x = e.x;
        by_yz.entry((e.y, e.z)).or_default().add_term(xe, c.clone());
    }
    by_yz.into_iter().rev().map(|((ey, ez), g)| Group { ey, ez, g }).collect()
}

fn mul_val(k: i64, v: i64) -> i64 {
    k.saturating_mul(v)
}

/// Lower bound on the valuation of `G(C0)`.
fn g_val(g: &LaurentPoly, state: &State) -> Result<i64, Error> {
    let mut best = i64::MAX;
    for (e, _) in g.terms() {
        if e.x < 0 && state.x_mono.is_none() {
            return Err(Error::NonMonomialSubstitution(Var::X));
        }
        best = best.min(mul_val(e.x, state.vals[0]));
    }
    Ok(best)
}

fn forward_states(factors: &[Factor]) -> Result<Vec<State>, Error> {
    let mut state = State { vals: [1, 0, 0], x_mono: Some(LaurentPoly::var(Var::X)) };
    let mut states = Vec::with_capacity(factors.len() + 1);
    for f in factors {
        states.push(state.clone());
        match f {
            Factor::Elem { target, add } => {
                let mut v = i64::MAX;
                for grp in groups(add) {
                    let tv = g_val(&grp.g, &state)?
                        .saturating_add(mul_val(grp.ey.into(), state.vals[1]))
                        .saturating_add(mul_val(grp.ez.into(), state.vals[2]));
                    v = v.min(tv);
                }
                let i = target.index();
                state.vals[i] = state.vals[i].min(v);
                if i == 0 && !add.is_zero() {
                    state.x_mono = None;
                }
            }
            Factor::Scale { target, unit } => {
                if *target == Var::X {
                    state.x_mono = state.x_mono.map(|m| m.scale(unit));
                }
            }
            Factor::Permute(p) => {
                let w = p.word();
                let old = state.vals;
                for i in 0..3 {
                    state.vals[i] = old[w[i].index()];
                }
                if w[0] != Var::X {
                    state.x_mono = None;
                }
            }
        }
    }
    states.push(state);
    Ok(states)
}

/// Precision each component needs before the factor, given what is needed after.
fn needs_before(f: &Factor, state: &State, after: [i64; 3]) -> Result<[i64; 3], Error> {
    let mut need = after;
    match f {
        Factor::Scale { .. } => {}
        Factor::Permute(p) => {
            for (i, v) in p.word().iter().enumerate() {
                need[v.index()] = after[i];
            }
        }
        Factor::Elem { target, add } => {
            let m = after[target.index()];
            for grp in groups(add) {
                let gx = g_val(&grp.g, state)?;
                let (ay, bz) = (mul_val(grp.ey.into(), state.vals[1]), mul_val(grp.ez.into(), state.vals[2]));
                if state.x_mono.is_none() {
                    if let Some(kmax) = grp.g.max_degree(Var::X).filter(|k| *k > 0) {
                        let r = m.saturating_sub(ay).saturating_sub(bz);
                        need[0] = need[0].max(power_need(r, kmax, state.vals[0]));
                    }
                }
                if grp.ey > 0 {
                    let r = m.saturating_sub(gx).saturating_sub(bz);
                    need[1] = need[1].max(power_need(r, grp.ey.into(), state.vals[1]));
                }
                if grp.ez > 0 {
                    let r = m.saturating_sub(gx).saturating_sub(ay);
                    need[2] = need[2].max(power_need(r, grp.ez.into(), state.vals[2]));
                }
            }
        }
    }
    Ok(need)
}

/// Precision of `C` needed for `C^k` modulo `x^r`, when `val(C) >= v`.
fn power_need(r: i64, k: i64, v: i64) -> i64 {
    r.saturating_sub(mul_val(k - 1, v))
}

/// Truncated powers of the current components, keyed by component identity.
#[derive(Default)]
pub(crate) struct PowerCache {
    powers: HashMap<(u64, i64), (i64, LaurentPoly)>,
}

impl PowerCache {
    /// `c^k` modulo `x^bound`, where `c` is known modulo `x^(bound - (k-1)v)`.
    fn power(&mut self, id: u64, c: &LaurentPoly, v: i64, k: i64, bound: i64) -> Result<LaurentPoly, Error> {
        if k == 1 {
            return Ok(c.truncate_x(bound));
        }
        if let Some((b, p)) = self.powers.get(&(id, k)) {
            if *b >= bound {
                return Ok(if *b == bound { p.clone() } else { p.truncate_x(bound) });
            }
        }
        let prev = self.power(id, c, v, k - 1, bound.saturating_sub(v))?;
        let base = c.truncate_x(bound.saturating_sub(mul_val(k - 1, v)));
        let p = prev.mul_truncated(&base, Some(bound))?;
        self.powers.insert((id, k), (bound, p.clone()));
        Ok(p)
    }
}

/// Components of the composite modulo `x^bound`, i.e. their terms with
/// x-exponent below `bound`.
pub(crate) fn components_below(factors: &[Factor], bound: i64) -> Result<[LaurentPoly; 3], Error> {
    let states = forward_states(factors)?;
    let mut needs = vec![[bound; 3]; factors.len() + 1];
    for (j, f) in factors.iter().enumerate().rev() {
        needs[j] = needs_before(f, &states[j], needs[j + 1])?;
    }

    let mut comps: [LaurentPoly; 3] = Var::XYZ.map(LaurentPoly::var);
    for (c, n) in comps.iter_mut().zip(needs[0]) {
        *c = c.truncate_x(n);
    }
    let mut ids = [0u64, 1, 2];
    let mut next_id = 3;
    let mut cache = PowerCache::default();

    for (j, f) in factors.iter().enumerate() {
        let state = &states[j];
        match f {
            Factor::Elem { target, add } => {
                let i = target.index();
                let m = needs[j + 1][i];
                let image = eval_truncated(add, &comps, &ids, state, m, &mut cache)?;
                comps[i] += &image;
                comps[i] = comps[i].truncate_x(m);
                ids[i] = next_id;
                next_id += 1;
            }
            Factor::Scale { target, unit } => {
                let i = target.index();
                comps[i] = comps[i].scale(unit);
                ids[i] = next_id;
                next_id += 1;
            }
            Factor::Permute(p) => {
                let (old, old_ids) = (comps.clone(), ids);
                for (i, v) in p.word().iter().enumerate() {
                    comps[i] = old[v.index()].clone();
                    ids[i] = old_ids[v.index()];
                }
            }
        }
    }
    if let Some(m) = &states[factors.len()].x_mono {
        comps[0] = m.clone();
    }
    Ok(comps.map(|c| c.truncate_x(bound)))
}

/// `add(C0, C1, C2)` modulo `x^m`.
fn eval_truncated(
    add: &LaurentPoly,
    comps: &[LaurentPoly; 3],
    ids: &[u64; 3],
    state: &State,
    m: i64,
    cache: &mut PowerCache,
) -> Result<LaurentPoly, Error> {
    let mut out = LaurentPoly::zero();
    for grp in groups(add) {
        let gx = g_val(&grp.g, state)?;
        let ay = mul_val(grp.ey.into(), state.vals[1]);
        let bz = mul_val(grp.ez.into(), state.vals[2]);
        let g_bound = m.saturating_sub(ay).saturating_sub(bz);
        if gx >= g_bound {
            continue;
        }
        let mut acc = LaurentPoly::zero();
        for (e, c) in grp.g.terms() {
            let xpow = match &state.x_mono {
                Some(mono) => mono.powi(e.x)?,
                None if e.x == 0 => LaurentPoly::one(),
                None => cache.power(ids[0], &comps[0], state.vals[0], e.x, g_bound)?,
            };
            acc += &xpow.scale(c).truncate_x(g_bound);
        }
        let mut bound_so_far = g_bound;
        if grp.ey > 0 {
            bound_so_far = m.saturating_sub(bz);
            let r = m.saturating_sub(gx).saturating_sub(bz);
            let yp = cache.power(ids[1], &comps[1], state.vals[1], grp.ey.into(), r)?;
            acc = acc.mul_truncated(&yp, Some(bound_so_far))?;
        }
        if grp.ez > 0 {
            let r = m.saturating_sub(gx).saturating_sub(ay);
            let zp = cache.power(ids[2], &comps[2], state.vals[2], grp.ez.into(), r)?;
            acc = acc.mul_truncated(&zp, Some(m))?;
        } else if bound_so_far != m {
            acc = acc.truncate_x(m);
        }
        out += &acc;
    }
    Ok(out)
}
