use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::FxHashMap;

use super::integer::Integer;
use super::monomial::Monomial;
use super::var::{Family, Var};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over the integers.
///
/// Terms are stored in strictly decreasing graded-lex order with nonzero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Integer)>,
}

/// Accumulator for building polynomials term by term.
#[derive(Default)]
pub struct PolyBuilder {
    acc: FxHashMap<Monomial, Integer>,
}

impl PolyBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Integer) {
        if c.is_zero() {
            return;
        }
        match self.acc.get_mut(&m) {
            Some(v) => *v += c,
            None => {
                self.acc.insert(m, c.clone());
            }
        }
    }

    pub fn add_poly(&mut self, p: &Poly) {
        for (m, c) in &p.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn add_scaled(&mut self, p: &Poly, m: &Monomial, c: &Integer) {
        for (pm, pc) in &p.terms {
            self.add_term(pm.mul(m), &(pc * c));
        }
    }

    pub fn build(self) -> Poly {
        let mut terms: Vec<(Monomial, Integer)> =
            self.acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Integer::ONE)
    }

    pub fn constant(c: impl Into<Integer>) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<Integer>) -> Poly {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Integer)>>(terms: I) -> Poly {
        let mut b = PolyBuilder::new();
        for (m, c) in terms {
            b.add_term(m, &c);
        }
        b.build()
    }

    pub fn terms(&self) -> &[(Monomial, Integer)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Integer)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Integer)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Integer {
        match self.terms.binary_search_by(|probe| m.cmp(&probe.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Integer::ZERO,
        }
    }

    pub fn constant_term(&self) -> Integer {
        self.coefficient(&Monomial::one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.total_degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(|t| t.0.vars()).collect()
    }

    pub fn involves_family(&self, family: Family) -> bool {
        self.terms.iter().any(|t| t.0.vars().any(|v| v.family() == family))
    }

    pub fn scale(&self, c: &Integer) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Integer) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplication by a monomial preserves the term order
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial, &Integer) -> bool) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, c)| keep(m, c)).cloned().collect(),
        }
    }

    /// Renames variables. The map need not be injective.
    pub fn map_vars(&self, mut f: impl FnMut(Var) -> Var) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&mut f), c.clone())))
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        self.map_vars(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Simultaneous substitution; variables without a binding are kept.
    pub fn substitute(&self, bindings: &HashMap<Var, Poly>) -> Poly {
        self.substitute_with(|v| bindings.get(&v).cloned())
    }

    /// Simultaneous substitution that requires every occurring variable to
    /// be bound.
    pub fn substitute_strict(&self, bindings: &HashMap<Var, Poly>) -> Result<Poly> {
        if let Some(v) = self.vars().into_iter().find(|v| !bindings.contains_key(v)) {
            return Err(Error::InvalidVariable(format!("no binding for {v}")));
        }
        Ok(self.substitute(bindings))
    }

    /// Simultaneous substitution driven by a lookup function; `None` keeps
    /// the variable unchanged.
    pub fn substitute_with(&self, mut lookup: impl FnMut(Var) -> Option<Poly>) -> Poly {
        let mut images: FxHashMap<Var, Option<Poly>> = FxHashMap::default();
        let mut powers: FxHashMap<(Var, u32), Poly> = FxHashMap::default();
        let mut out = PolyBuilder::new();
        for (m, c) in &self.terms {
            let mut kept: Vec<(Var, u32)> = Vec::new();
            let mut value = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                let image = images.entry(v).or_insert_with(|| lookup(v));
                match image {
                    None => kept.push((v, e)),
                    Some(p) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| p.pow(e));
                        value = &value * &*pw;
                        if value.is_zero() {
                            break;
                        }
                    }
                }
            }
            if value.is_zero() {
                continue;
            }
            let rest = Monomial::from_pairs(kept);
            for (vm, vc) in value.terms {
                out.add_term(vm.mul(&rest), &vc);
            }
        }
        out.build()
    }

    /// Groups terms by their `family` part: returns pairs (monomial in
    /// `family`, coefficient polynomial in the remaining variables).
    pub fn collect_by_family(&self, family: Family) -> Vec<(Monomial, Poly)> {
        let mut groups: FxHashMap<Monomial, Vec<(Monomial, Integer)>> = FxHashMap::default();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split_family(family);
            groups.entry(inside).or_default().push((outside, c.clone()));
        }
        let mut out: Vec<(Monomial, Poly)> = groups
            .into_iter()
            .map(|(k, mut ts)| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k, Poly { terms: ts })
            })
            .collect();
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        out
    }

    fn merge(&self, other: &Poly, negate_other: bool) -> Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: FxHashMap<Monomial, Integer> =
            FxHashMap::with_capacity_and_hasher(self.len() * other.len() / 2 + 1, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        PolyBuilder { acc }.build()
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Poly {
        Poly::constant(c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.product(rhs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        let mut b = PolyBuilder::new();
        for p in iter {
            b.add_poly(&p);
        }
        b.build()
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}
