use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::linalg::solve_unimodular;
use crate::memo::Memo;
use crate::polyring::{elementary_symmetric, vars_of, Family, Integer, Monomial, Poly, Var};

/// Coefficients `a_{k_1..k_n}` of a polynomial in the standard elementary
/// monomials `e_{k_1}(1) ... e_{k_n}(n)`, `0 <= k_p <= p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemExpansion {
    pub n: usize,
    pub coeffs: BTreeMap<Vec<u32>, Integer>,
}

impl ElemExpansion {
    /// `sum a_k c_{k_1}(1) ... c_{k_n}(n)`.
    pub fn to_c_form(&self) -> Poly {
        Poly::from_terms(self.coeffs.iter().map(|(ks, a)| (c_monomial(ks), a.clone())))
    }

    /// `sum a_k e_{k_1}(1) ... e_{k_n}(n)` in `x`.
    pub fn reconstruct(&self) -> Poly {
        self.coeffs.iter().map(|(ks, a)| elementary_product(ks).scale(a)).sum()
    }
}

fn c_monomial(ks: &[u32]) -> Monomial {
    Monomial::from_pairs(
        ks.iter().enumerate().filter(|&(_, &k)| k > 0).map(|(i, &k)| (Var::c(k, i as u32 + 1), 1)),
    )
}

fn elementary_product(ks: &[u32]) -> Poly {
    ks.iter()
        .enumerate()
        .map(|(i, &k)| elementary_symmetric(k as usize, &vars_of(Family::X, 1..=i as u32 + 1)))
        .product()
}

/// Sequences `(k_1..k_n)` with `k_p <= p` and sum `d`.
fn sequences(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(p: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if p > n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining capacity p + ... + n
        let cap = ((p + n) * (n + 1 - p) / 2) as u32;
        if left > cap {
            return;
        }
        for k in 0..=left.min(p as u32) {
            cur.push(k);
            rec(p + 1, n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, d, &mut Vec::new(), &mut out);
    out
}

/// Staircase monomials `x^a`, `a_i <= n + 1 - i`, of degree `d`.
fn staircase(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        if i > n {
            if left == 0 {
                out.push(Monomial::from_pairs(cur.iter().copied()));
            }
            return;
        }
        for a in 0..=left.min((n + 1 - i) as u32) {
            cur.push((Var::x(i as u32), a));
            rec(i + 1, n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, d, &mut Vec::new(), &mut out);
    out
}

struct DegreeSystem {
    seqs: Vec<Vec<u32>>,
    row_of: HashMap<Monomial, usize>,
    matrix: Vec<Vec<Integer>>,
}

static SYSTEMS: Memo<(usize, u32), DegreeSystem> = Memo::new();

fn degree_system(n: usize, d: u32) -> std::sync::Arc<DegreeSystem> {
    SYSTEMS.get_or_insert_with((n, d), || {
        let seqs = sequences(n, d);
        let monos = staircase(n, d);
        let row_of: HashMap<Monomial, usize> = monos.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut matrix = vec![vec![Integer::ZERO; seqs.len()]; row_of.len()];
        for (col, ks) in seqs.iter().enumerate() {
            for (m, c) in elementary_product(ks).terms() {
                matrix[row_of[m]][col] = c.clone();
            }
        }
        DegreeSystem { seqs, row_of, matrix }
    })
}

/// The unique expansion of `p` in standard elementary monomials, solved one
/// degree at a time by exact integer elimination.
pub fn expand_elementary(p: &Poly, n: usize) -> Result<ElemExpansion> {
    let mut by_degree: BTreeMap<u32, Vec<(Monomial, Integer)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        for &(v, e) in m.factors() {
            let ok = v.family() == Family::X && (v.index() as usize) <= n && e as usize <= n + 1 - v.index() as usize;
            if !ok {
                return Err(Error::NotInSpan(m.to_string()));
            }
        }
        by_degree.entry(m.total_degree()).or_default().push((m.clone(), c.clone()));
    }
    let mut coeffs = BTreeMap::new();
    for (d, terms) in by_degree {
        let sys = degree_system(n, d);
        let mut rhs = vec![Integer::ZERO; sys.row_of.len()];
        for (m, c) in terms {
            rhs[sys.row_of[&m]] = c;
        }
        let sol = solve_unimodular(sys.matrix.clone(), rhs)?;
        for (ks, a) in sys.seqs.iter().zip(sol) {
            if !a.is_zero() {
                coeffs.insert(ks.clone(), a);
            }
        }
    }
    Ok(ElemExpansion { n, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match() {
        for n in 1..=4 {
            let max = (n * (n + 1) / 2) as u32;
            for d in 0..=max {
                assert_eq!(sequences(n, d).len(), staircase(n, d).len());
            }
        }
    }

    #[test]
    fn x1_squared() {
        let e = expand_elementary(&"x1^2".parse().unwrap(), 2).unwrap();
        assert_eq!(e.to_c_form(), "c1_1*c1_2 - c2_2".parse().unwrap());
    }

    #[test]
    fn constant_and_basis_vectors() {
        let one = expand_elementary(&Poly::one(), 3).unwrap();
        assert_eq!(one.coeffs.len(), 1);
        assert_eq!(one.coeffs[&vec![0, 0, 0]], Integer::ONE);
        for n in 1..=3 {
            for d in 0..=(n * (n + 1) / 2) as u32 {
                for ks in sequences(n, d) {
                    let e = expand_elementary(&elementary_product(&ks), n).unwrap();
                    assert_eq!(e.coeffs.len(), 1);
                    assert_eq!(e.coeffs[&ks], Integer::ONE);
                }
            }
        }
    }

    #[test]
    fn outside_staircase() {
        assert!(matches!(expand_elementary(&"x1^3".parse().unwrap(), 2), Err(Error::NotInSpan(_))));
        assert!(matches!(expand_elementary(&"x3".parse().unwrap(), 2), Err(Error::NotInSpan(_))));
    }
}
