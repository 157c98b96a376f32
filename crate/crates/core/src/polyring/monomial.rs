use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::{Family, Var};

/// A power product. Factors are kept sorted by variable with no zero
/// exponents, so the empty product is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(Var, u32); 6]>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Var, exp: u32) -> Monomial {
        let mut m = Monomial::one();
        if exp > 0 {
            m.factors.push((v, exp));
        }
        m
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut factors: SmallVec<[(Var, u32); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        factors.sort_unstable_by_key(|p| p.0);
        let mut merged: SmallVec<[(Var, u32); 6]> = SmallVec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|p| p.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out: SmallVec<[(Var, u32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[(Var, u32); 6]> = SmallVec::with_capacity(self.factors.len());
        let mut j = 0;
        let b = &other.factors;
        for &(v, e) in &self.factors {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                if b[j].1 > e {
                    return None;
                }
                if e > b[j].1 {
                    out.push((v, e - b[j].1));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    /// Splits into the part in `family` and the rest.
    pub fn split_family(&self, family: Family) -> (Monomial, Monomial) {
        let mut inside = Monomial::one();
        let mut outside = Monomial::one();
        for &p in &self.factors {
            if p.0.family() == family {
                inside.factors.push(p);
            } else {
                outside.factors.push(p);
            }
        }
        (inside, outside)
    }

    /// Replaces variables through `f`; the result is re-sorted and merged.
    pub fn map_vars(&self, mut f: impl FnMut(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }

    pub fn without(&self, v: Var) -> Monomial {
        Monomial {
            factors: self.factors.iter().copied().filter(|p| p.0 != v).collect(),
        }
    }

    /// Graded lexicographic order: total degree first, then the exponent of
    /// the smallest variable at which the two monomials differ.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.lex_cmp(other))
    }

    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
