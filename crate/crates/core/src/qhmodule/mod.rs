//! Expansion in the equivariant quantum Schubert basis, products and
//! structure constants of `QH_T^*(Fl(n))`, and executable checks of the
//! presentation and straightening identities.

mod reduce;
pub mod suites;
mod table;
mod verify;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub use reduce::{qproduct_reduced, reduce_mod_relations};
pub use table::{multiplication_table, multiplication_table_with, table_for_pairs, ProductRoute, StructureTable, TableEntry};
pub use verify::{
    compare_giambelli, compare_tables, graham_check, verify_associativity, verify_presentation, verify_straightening, GrahamReport,
    GrahamViolation, Report,
};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::permgroup::{FlagShape, Permutation};
use crate::polyring::{Family, Monomial, Poly, PolyBuilder, Var};
use crate::quantize::eq_quantum_schubert;

/// Coefficients `a_w` in `Z[t, q]` of a polynomial written as
/// `sum a_w Sch^q_w(x, t)`. Keys are trimmed permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertCombo {
    pub window: u32,
    pub shape: FlagShape,
    pub terms: BTreeMap<Permutation, Poly>,
}

impl SchubertCombo {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Permutation) -> Poly {
        self.terms.get(&w.trim()).cloned().unwrap_or_default()
    }

    /// `sum a_w Sch^q_w(x, t)`.
    pub fn reconstruct(&self) -> Result<Poly> {
        let mut out = PolyBuilder::new();
        for (w, a) in &self.terms {
            let basis = basis_element(w, &self.shape)?;
            for (xm, c) in basis.iter() {
                out.add_poly(&(a * c).mul_term(xm, &1.into()));
            }
        }
        Ok(out.build())
    }

    /// Terms by decreasing length, then one-line notation, with `w` shown in
    /// the window `width`: `(-t1 + t2)*s[213] + q1*s[123]`.
    pub fn render(&self, width: usize) -> String {
        render_terms(self.terms.iter().map(|(w, a)| (w.embed(width), a.clone())))
    }
}

/// `coeff*s[w]` terms by decreasing length of `w`, then one-line notation.
pub fn render_terms(terms: impl IntoIterator<Item = (Permutation, Poly)>) -> String {
    let mut terms: Vec<(Permutation, Poly)> = terms.into_iter().filter(|(_, a)| !a.is_zero()).collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then_with(|| a.0.values().cmp(b.0.values())));
    let mut s = String::new();
    for (k, (w, a)) in terms.iter().enumerate() {
        let single_negative = a.len() == 1 && a.terms()[0].1.is_negative();
        let shown = if single_negative { -a } else { a.clone() };
        match (k, single_negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if shown.is_one() {
        } else if shown.len() == 1 {
            s.push_str(&format!("{shown}*"));
        } else {
            s.push_str(&format!("({shown})*"));
        }
        s.push_str(&format!("s[{w}]"));
    }
    s
}

type Grouped = Vec<(Monomial, Poly)>;

static GROUPED: Memo<(Permutation, FlagShape), Grouped> = Memo::new();

/// `Sch^q_w` grouped by `x`-monomial. Complete-flag elements are computed in
/// their smallest window; partial shapes use the shape as given.
fn basis_element(w: &Permutation, shape: &FlagShape) -> Result<Arc<Grouped>> {
    let (w, shape) = if shape.is_complete() {
        let w = w.trim();
        let n = w.window().max(2) as u32;
        (w.embed(n as usize), FlagShape::complete(n))
    } else {
        (w.embed(shape.n() as usize), shape.clone())
    };
    if let Some(hit) = GROUPED.get(&(w.clone(), shape.clone())) {
        return Ok(hit);
    }
    let sch = eq_quantum_schubert(&w, &shape)?;
    Ok(GROUPED.get_or_insert_with((w, shape), || sch.body_x.collect_by_family(Family::X)))
}

/// `(x-degree, exponents of x_N, ..., x_1)`: the graded reverse
/// lexicographic key under which `x^{code(w)}` leads `Sch_w(x)`.
pub(crate) fn peel_key(m: &Monomial, window: u32) -> (u32, Vec<u32>) {
    let exps: Vec<u32> = (1..=window).rev().map(|i| m.exponent(Var::x(i))).collect();
    (exps.iter().sum(), exps)
}

fn check_staircase(p: &Poly, window: u32) -> Result<()> {
    for (m, _) in p.terms() {
        for &(v, e) in m.factors() {
            if v.family() == Family::X && (v.index() > window || e > window - v.index()) {
                return Err(Error::NotInSpan(m.to_string()));
            }
            if matches!(v.family(), Family::X | Family::T | Family::Q) {
                continue;
            }
            return Err(Error::NotInSpan(m.to_string()));
        }
    }
    Ok(())
}

fn peel(p: &Poly, shape: &FlagShape) -> Result<SchubertCombo> {
    let window = shape.n();
    check_staircase(p, window)?;
    let mut rest: HashMap<Monomial, Poly> = p.collect_by_family(Family::X).into_iter().collect();
    let mut order: BTreeMap<(u32, Vec<u32>), Monomial> =
        rest.keys().map(|m| (peel_key(m, window), m.clone())).collect();
    let mut terms = BTreeMap::new();
    let mut last: Option<(u32, Vec<u32>)> = None;
    while let Some((key, lead)) = order.pop_last() {
        let Some(a) = rest.remove(&lead) else { continue };
        if a.is_zero() {
            continue;
        }
        if last.as_ref().is_some_and(|prev| &key >= prev) {
            return Err(Error::NonzeroResidual(format!("leading monomial {lead} did not decrease")));
        }
        last = Some(key.clone());
        let code: Vec<u32> = key.1.iter().rev().copied().collect();
        let w = Permutation::from_code(&code).map_err(|_| Error::NotInSpan(lead.to_string()))?;
        if !shape.contains(&w) {
            return Err(Error::NonzeroResidual(format!("leading monomial {lead} indexes {w} outside {shape}")));
        }
        let basis = basis_element(&w, shape)?;
        for (xm, c) in basis.iter() {
            if *xm == lead {
                if !c.is_one() {
                    return Err(Error::NonzeroResidual(format!("Sch^q_{w} is not monic at {lead}")));
                }
                continue;
            }
            let delta = &a * c;
            let slot = rest.entry(xm.clone()).or_default();
            *slot = &*slot - &delta;
            if slot.is_zero() {
                rest.remove(xm);
            } else {
                order.insert(peel_key(xm, window), xm.clone());
            }
        }
        terms.insert(w.trim(), a);
    }
    Ok(SchubertCombo { window, shape: shape.clone(), terms })
}

/// The unique `a_w` in `Z[t, q]`, `w` in `S_N`, with `p = sum a_w Sch^q_w`.
///
/// Repeatedly cancels the leading `x`-monomial `x^{code(w)}` (graded reverse
/// lexicographic order) against `Sch^q_w`, whose top `x`-degree part is the
/// classical `Sch_w(x)`.
pub fn expand_in_basis(p: &Poly, window: u32) -> Result<SchubertCombo> {
    if window == 0 {
        return Err(Error::OutOfRange("window must be positive".into()));
    }
    peel(p, &FlagShape::complete(window.max(1)))
}

/// Expansion in `{Sch^q_w : w in S^nn}` for a block-symmetric polynomial.
pub fn expand_in_shape_basis(p: &Poly, nn: &FlagShape) -> Result<SchubertCombo> {
    peel(p, nn)
}

/// Drops every `w` outside `S_n`; retained coefficients must only involve
/// `t_1..t_n` and `q_1..q_{n-1}`.
pub fn truncate(combo: &SchubertCombo, n: u32) -> Result<SchubertCombo> {
    let mut terms = BTreeMap::new();
    for (w, a) in &combo.terms {
        if w.support_window() > n as usize {
            continue;
        }
        let stray = a.vars().into_iter().any(|v| match v.family() {
            Family::T => v.index() > n,
            Family::Q => v.index() >= n,
            _ => true,
        });
        if stray {
            return Err(Error::StrayVariables { perm: w.to_string(), poly: a.to_string() });
        }
        terms.insert(w.clone(), a.clone());
    }
    let shape = if combo.shape.is_complete() { FlagShape::complete(n.max(1)) } else { combo.shape.clone() };
    Ok(SchubertCombo { window: n, shape, terms })
}

/// `q`-multidegree of a monomial, as a vector of length `n - 1`.
pub(crate) fn q_degree(m: &Monomial, n: u32) -> Vec<u32> {
    (1..n).map(|i| m.exponent(Var::q(i))).collect()
}

/// `c_{u,v}^{w,d}(t)` for all `w` in `S_n` and `q`-degrees `d`: the product
/// `Sch^q_u Sch^q_v` expanded in window `2n - 1`, truncated to `S_n` and split
/// by `q`-monomial. Keys use `w` in the window `n`.
pub fn qproduct(u: &Permutation, v: &Permutation, n: u32) -> Result<BTreeMap<(Permutation, Vec<u32>), Poly>> {
    for w in [u, v] {
        if w.support_window() > n as usize {
            return Err(Error::OutOfRange(format!("{w} does not lie in S_{n}")));
        }
    }
    let pu = product_factor(u)?;
    let pv = product_factor(v)?;
    let combo = expand_in_basis(&(&pu * &pv), 2 * n - 1)?;
    let kept = truncate(&combo, n)?;
    Ok(split_by_q(&kept, n))
}

pub(crate) fn product_factor(w: &Permutation) -> Result<Poly> {
    let w = w.trim();
    let n = w.window().max(2) as u32;
    Ok(eq_quantum_schubert(&w.embed(n as usize), &FlagShape::complete(n))?.body_x.clone())
}

pub(crate) fn split_by_q(combo: &SchubertCombo, n: u32) -> BTreeMap<(Permutation, Vec<u32>), Poly> {
    let mut out = BTreeMap::new();
    for (w, a) in &combo.terms {
        for (qm, c) in a.collect_by_family(Family::Q) {
            out.insert((w.embed(n as usize), q_degree(&qm, n)), c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sch(w: &str) -> Poly {
        (*basis_element(&perm(w), &FlagShape::complete(2)).unwrap())
            .iter()
            .map(|(m, c)| c.mul_term(m, &1.into()))
            .sum()
    }

    #[test]
    fn basis_vectors_expand_to_themselves() {
        for w in Permutation::all(3) {
            let combo = expand_in_basis(&sch(&w.to_string()), 3).unwrap();
            assert_eq!(combo.terms.len(), 1);
            assert!(combo.coefficient(&w).is_one());
        }
    }

    #[test]
    fn zero_expands_to_empty() {
        assert!(expand_in_basis(&Poly::zero(), 4).unwrap().is_zero());
    }

    #[test]
    fn staircase_violation() {
        assert!(matches!(expand_in_basis(&p("x1^3"), 3), Err(Error::NotInSpan(_))));
        assert!(matches!(expand_in_basis(&p("x3"), 3), Err(Error::NotInSpan(_))));
        assert!(matches!(expand_in_basis(&p("y1"), 3), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn leading_code_monomial_on_s5() {
        for w in Permutation::all(5) {
            let grouped = basis_element(&w, &FlagShape::complete(5)).unwrap();
            let lead = grouped.iter().map(|(m, _)| peel_key(m, 5)).max().unwrap();
            let code: Vec<u32> = lead.1.iter().rev().copied().collect();
            assert_eq!(code.as_slice(), w.lehmer_code(), "{w}");
        }
    }

    #[test]
    fn fl2_product() {
        let prod = qproduct(&perm("21"), &perm("21"), 2).unwrap();
        let mut expected = BTreeMap::new();
        expected.insert((perm("21"), vec![0]), p("t2 - t1"));
        expected.insert((perm("12"), vec![1]), Poly::one());
        assert_eq!(prod, expected);
    }

    #[test]
    fn truncation() {
        let combo = SchubertCombo {
            window: 4,
            shape: FlagShape::complete(4),
            terms: [(perm("1243"), p("1")), (perm("21"), p("t1"))].into_iter().collect(),
        };
        let kept = truncate(&combo, 3).unwrap();
        assert_eq!(kept.terms.len(), 1);
        let single = SchubertCombo { terms: [(perm("1243"), p("1"))].into_iter().collect(), ..combo.clone() };
        assert!(truncate(&single, 3).unwrap().is_zero());
        let stray = SchubertCombo { terms: [(perm("21"), p("t4"))].into_iter().collect(), ..combo };
        assert!(matches!(truncate(&stray, 3), Err(Error::StrayVariables { .. })));
    }

    #[test]
    fn round_trip_reconstructs() {
        let src = &sch("231") * &sch("231");
        let combo = expand_in_basis(&src, 5).unwrap();
        assert_eq!(combo.reconstruct().unwrap(), src);
    }
}
