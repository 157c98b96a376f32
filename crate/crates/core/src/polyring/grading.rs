use super::monomial::Monomial;
use super::poly::Poly;
use super::var::{Family, Var};
use crate::permgroup::FlagShape;

/// Degree assignment for homogeneity checks.
///
/// `x, t, y, a` have degree 1, `c_k(l)` and `d_k(l)` degree `k`,
/// `g_i[j]` and `h_i[j]` degree `j + 1`, and `q_i` degree
/// `n_{i+1} - n_{i-1}` for the attached shape (2 for complete flags).
#[derive(Clone, Debug, Default)]
pub struct Grading {
    q_degrees: Vec<u32>,
}

impl Grading {
    /// Complete-flag grading: every `q_i` has degree 2.
    pub fn complete() -> Grading {
        Grading::default()
    }

    pub fn for_shape(shape: &FlagShape) -> Grading {
        let b = shape.bounds_with_ends();
        let q_degrees = (1..b.len() - 1).map(|i| b[i + 1] - b[i - 1]).collect();
        Grading { q_degrees }
    }

    pub fn var_degree(&self, v: Var) -> u32 {
        match v.family() {
            Family::X | Family::T | Family::Y | Family::Alpha => 1,
            Family::Q => self.q_degrees.get(v.index() as usize - 1).copied().unwrap_or(2),
            Family::C | Family::D => v.index(),
            Family::G | Family::H => v.second() + 1,
        }
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.factors().iter().map(|&(v, e)| self.var_degree(v) * e).sum()
    }

    /// The common degree of all terms, or `None` for the zero polynomial or
    /// an inhomogeneous one.
    pub fn homogeneous_degree(&self, p: &Poly) -> Option<u32> {
        let mut it = p.terms().iter().map(|(m, _)| self.monomial_degree(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, p: &Poly, degree: u32) -> bool {
        p.is_zero() || self.homogeneous_degree(p) == Some(degree)
    }
}
