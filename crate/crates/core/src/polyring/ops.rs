use std::collections::HashMap;

use super::integer::Integer;
use super::monomial::Monomial;
use super::poly::{Poly, PolyBuilder};
use super::var::{Family, Var};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn arith(a: &Poly, b: &Poly, kind: ArithKind) -> Poly {
    match kind {
        ArithKind::Add => a + b,
        ArithKind::Sub => a - b,
        ArithKind::Mul => a * b,
    }
}

/// Exact quotient `p / d` by leading-term long division under the canonical
/// order. Fails with [`Error::NotDivisible`] as soon as a leading term of the
/// running remainder is not a multiple of the divisor's leading term.
pub fn exact_divide(p: &Poly, d: &Poly) -> Result<Poly> {
    let (lm, lc) = match d.leading_term() {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Err(Error::NotDivisible),
    };
    let mut rem = p.clone();
    let mut quotient = PolyBuilder::new();
    while let Some((rm, rc)) = rem.leading_term() {
        let qm = rm.div(&lm).ok_or(Error::NotDivisible)?;
        let qc = rc.checked_div_exact(&lc).ok_or(Error::NotDivisible)?;
        rem = &rem - &d.mul_term(&qm, &qc);
        quotient.add_term(qm, &qc);
    }
    Ok(quotient.build())
}

/// The divided difference operator in the variables `v_i, v_{i+1}` of
/// `family`, computed term by term from the closed form
/// `(a^p b^r - a^r b^p) / (a - b) = (ab)^r (a^{p-r-1} + ... + b^{p-r-1})`.
pub fn divided_difference(p: &Poly, i: u32, family: Family) -> Poly {
    assert!(i >= 1, "divided difference index starts at 1");
    let a = Var::of(family, i);
    let b = Var::of(family, i + 1);
    let mut out = PolyBuilder::new();
    for (m, c) in p.terms() {
        let ea = m.exponent(a);
        let eb = m.exponent(b);
        if ea == eb {
            continue;
        }
        let rest = m.without(a).without(b);
        let (hi, lo, coeff) = if ea > eb { (ea, eb, c.clone()) } else { (eb, ea, -c) };
        let span = hi - lo;
        for r in 0..span {
            let mono = rest.mul(&Monomial::from_pairs([(a, lo + span - 1 - r), (b, lo + r)]));
            out.add_term(mono, &coeff);
        }
    }
    out.build()
}

/// The same operator computed literally as `(p - s_i p) / (v_i - v_{i+1})`.
pub fn divided_difference_by_division(p: &Poly, i: u32, family: Family) -> Result<Poly> {
    let a = Var::of(family, i);
    let b = Var::of(family, i + 1);
    let num = p - &p.swap_vars(a, b);
    let den = &Poly::var(a) - &Poly::var(b);
    exact_divide(&num, &den)
}

/// `e_k` of the listed variables.
pub fn elementary_symmetric(k: usize, vars: &[Var]) -> Poly {
    // row[j] = e_j of the prefix processed so far
    let mut row = vec![Poly::one()];
    for &v in vars {
        let xv = Poly::var(v);
        let mut next = row.clone();
        next.push(Poly::zero());
        for j in 1..next.len() {
            next[j] = &row.get(j).cloned().unwrap_or_default() + &(&row[j - 1] * &xv);
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

/// `h_k` of the listed variables.
pub fn complete_symmetric(k: usize, vars: &[Var]) -> Poly {
    if k == 0 {
        return Poly::one();
    }
    // h_k(v_1..v_m) = h_k(v_1..v_{m-1}) + v_m h_{k-1}(v_1..v_m)
    let mut row: Vec<Poly> = (0..=k).map(|j| if j == 0 { Poly::one() } else { Poly::zero() }).collect();
    for &v in vars {
        let xv = Poly::var(v);
        for j in 1..=k {
            let add = &row[j - 1] * &xv;
            row[j] = &row[j] + &add;
        }
    }
    row.swap_remove(k)
}

/// Rewrites a polynomial in `t_1..t_n` in the positive basis
/// `a_i = t_i - t_{i+1}` (`a_n = t_n`), via `t_i = a_i + ... + a_n`.
pub fn alpha_rewrite(p: &Poly, n: u32) -> Poly {
    let images: HashMap<Var, Poly> = (1..=n)
        .map(|i| (Var::t(i), (i..=n).map(|j| Poly::var(Var::alpha(j))).sum()))
        .collect();
    p.substitute(&images)
}

/// Inverse of [`alpha_rewrite`].
pub fn alpha_to_t(p: &Poly, n: u32) -> Poly {
    let images: HashMap<Var, Poly> = (1..=n)
        .map(|i| {
            let img = if i < n {
                &Poly::var(Var::t(i)) - &Poly::var(Var::t(i + 1))
            } else {
                Poly::var(Var::t(n))
            };
            (Var::alpha(i), img)
        })
        .collect();
    p.substitute(&images)
}

/// Coefficients of `p` (in `t_1..t_n`) in the monomial basis of the
/// variables `-a_i`. Graham-positive means all of these are nonnegative.
pub fn neg_alpha_coefficients(p: &Poly, n: u32) -> Vec<(Monomial, Integer)> {
    alpha_rewrite(p, n)
        .terms()
        .iter()
        .map(|(m, c)| {
            let c = if m.total_degree() % 2 == 1 { -c } else { c.clone() };
            (m.clone(), c)
        })
        .collect()
}

pub fn vars_of(family: Family, range: std::ops::RangeInclusive<u32>) -> Vec<Var> {
    range.map(|i| Var::of(family, i)).collect()
}
