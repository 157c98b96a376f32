//! Exact sparse multivariate polynomials over the integers.

mod grading;
mod integer;
mod monomial;
mod ops;
mod parse;
mod poly;
mod render;
mod var;

pub use grading::Grading;
pub use integer::Integer;
pub use monomial::Monomial;
pub use ops::{
    alpha_rewrite, alpha_to_t, arith, complete_symmetric, divided_difference, divided_difference_by_division,
    elementary_symmetric, exact_divide, neg_alpha_coefficients, vars_of, ArithKind,
};
pub use parse::parse_poly;
pub use poly::{Poly, PolyBuilder};
pub use var::{Family, Var, MAX_INDEX};
