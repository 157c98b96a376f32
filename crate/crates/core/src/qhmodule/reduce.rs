use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{expand_in_basis, peel_key, split_by_q, SchubertCombo};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::permgroup::{FlagShape, Permutation};
use crate::polyring::{Family, Monomial, Poly, PolyBuilder, Var};
use crate::quantize::eq_quantum_schubert;

/// Reducer for position `m` in `Fl(n)`: `Sch^q_w` for the permutation of
/// `S_{n+1}` with code `n + 1 - m` at `m` and zero elsewhere, with
/// `x_{n+1}, t_{n+1}, q_n` set to zero. Its leading monomial is
/// `x_m^{n+1-m}`.
static REDUCERS: Memo<(u32, u32), Vec<(Monomial, Poly)>> = Memo::new();

fn reducer(n: u32, m: u32) -> Result<Arc<Vec<(Monomial, Poly)>>> {
    if let Some(hit) = REDUCERS.get(&(n, m)) {
        return Ok(hit);
    }
    let mut code = vec![0; n as usize + 1];
    code[m as usize - 1] = n + 1 - m;
    let w = Permutation::from_code(&code)?;
    let sch = eq_quantum_schubert(&w, &FlagShape::complete(n + 1))?;
    let restricted = sch.body_x.substitute_with(|v| {
        let outside = match v.family() {
            Family::X | Family::T => v.index() > n,
            Family::Q => v.index() >= n,
            _ => false,
        };
        outside.then(Poly::zero)
    });
    let grouped = restricted.collect_by_family(Family::X);
    let lead = Monomial::power(Var::x(m), n + 1 - m);
    let top = grouped.iter().max_by(|a, b| peel_key(&a.0, n + 1).cmp(&peel_key(&b.0, n + 1)));
    if !top.is_some_and(|(xm, c)| *xm == lead && c.is_one()) {
        return Err(Error::NonzeroResidual(format!("reducer for x{m} in Fl({n}) is not monic at {lead}")));
    }
    Ok(REDUCERS.get_or_insert_with((n, m), || grouped))
}

/// Staircase normal form of `p` modulo the relations of `QH_T^*(Fl(n))`:
/// every `x`-exponent satisfies `exp(x_i) <= n - i` afterwards.
pub fn reduce_mod_relations(p: &Poly, n: u32) -> Result<Poly> {
    for v in p.vars() {
        let ok = match v.family() {
            Family::X | Family::T => v.index() <= n,
            Family::Q => v.index() < n,
            _ => false,
        };
        if !ok {
            return Err(Error::OutOfRange(format!("{v} does not belong to the ring of Fl({n})")));
        }
    }
    let width = n + 1;
    let mut rest: HashMap<Monomial, Poly> = p.collect_by_family(Family::X).into_iter().collect();
    let mut order: BTreeMap<(u32, Vec<u32>), Monomial> =
        rest.keys().map(|m| (peel_key(m, width), m.clone())).collect();
    let mut normal = Vec::new();
    while let Some((_, lead)) = order.pop_last() {
        let Some(c) = rest.remove(&lead) else { continue };
        if c.is_zero() {
            continue;
        }
        let Some(m) = (1..=n).rev().find(|&i| lead.exponent(Var::x(i)) > n - i) else {
            normal.push(c.mul_term(&lead, &1.into()));
            continue;
        };
        let shift = lead.div(&Monomial::power(Var::x(m), n + 1 - m)).expect("leading power divides");
        for (xm, g) in reducer(n, m)?.iter() {
            let target = xm.mul(&shift);
            if target == lead {
                continue;
            }
            let delta = &c * g;
            let slot = rest.entry(target.clone()).or_default();
            *slot = &*slot - &delta;
            if slot.is_zero() {
                rest.remove(&target);
            } else {
                order.insert(peel_key(&target, width), target);
            }
        }
    }
    Ok(normal.into_iter().sum())
}

type Combo = BTreeMap<Permutation, Poly>;

static X_ACTION: Memo<(u32, u32, Permutation), Combo> = Memo::new();

/// `x_i σ_w` in `QH_T^*(Fl(n))`, from the normal form of `x_i Sch^q_w`.
fn x_action(n: u32, i: u32, w: &Permutation) -> Result<Arc<Combo>> {
    let key = (n, i, w.trim());
    if let Some(hit) = X_ACTION.get(&key) {
        return Ok(hit);
    }
    let p = super::product_factor(w)?.mul_term(&Monomial::var(Var::x(i)), &1.into());
    let combo = expand_in_basis(&reduce_mod_relations(&p, n)?, n)?;
    Ok(X_ACTION.get_or_insert_with(key, || combo.terms))
}

fn act(n: u32, i: u32, combo: &Combo) -> Result<Combo> {
    let mut out: BTreeMap<Permutation, PolyBuilder> = BTreeMap::new();
    for (w, a) in combo {
        for (y, b) in x_action(n, i, w)?.iter() {
            out.entry(y.clone()).or_default().add_poly(&(a * b));
        }
    }
    Ok(out.into_iter().map(|(w, b)| (w, b.build())).filter(|(_, p)| !p.is_zero()).collect())
}

/// `c_{u,v}^{w,d}(t)` computed inside `QH_T^*(Fl(n))`: `Sch^q_u` acts on
/// `σ_v` monomial by monomial, each `x_i` through its action on the
/// Schubert basis.
pub fn qproduct_reduced(
    u: &Permutation,
    v: &Permutation,
    n: u32,
) -> Result<BTreeMap<(Permutation, Vec<u32>), Poly>> {
    for w in [u, v] {
        if w.support_window() > n as usize {
            return Err(Error::OutOfRange(format!("{w} does not lie in S_{n}")));
        }
    }
    let mut powers: HashMap<Monomial, Combo> = HashMap::new();
    powers.insert(Monomial::one(), [(v.trim(), Poly::one())].into_iter().collect());
    let mut groups = super::product_factor(u)?.collect_by_family(Family::X);
    groups.sort_by_key(|(m, _)| m.total_degree());
    let mut total: BTreeMap<Permutation, PolyBuilder> = BTreeMap::new();
    for (xm, c) in &groups {
        let image = monomial_image(n, xm, &mut powers)?;
        for (w, a) in image.iter() {
            total.entry(w.clone()).or_default().add_poly(&(c * a));
        }
    }
    let terms = total.into_iter().map(|(w, b)| (w, b.build())).filter(|(_, p)| !p.is_zero()).collect();
    let combo = SchubertCombo { window: n, shape: FlagShape::complete(n), terms };
    Ok(split_by_q(&combo, n))
}

fn monomial_image(n: u32, m: &Monomial, powers: &mut HashMap<Monomial, Combo>) -> Result<Combo> {
    if let Some(hit) = powers.get(m) {
        return Ok(hit.clone());
    }
    let (v, _) = m.factors()[0];
    let parent = m.div(&Monomial::var(v)).expect("variable divides its monomial");
    let below = monomial_image(n, &parent, powers)?;
    let image = act(n, v.index(), &below)?;
    powers.insert(m.clone(), image.clone());
    Ok(image)
}
