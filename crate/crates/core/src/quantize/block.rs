use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::permgroup::FlagShape;
use crate::polyring::{elementary_symmetric, vars_of, Family, Monomial, Poly, PolyBuilder, Var};

/// `σ_i^j`, the `i`th elementary symmetric polynomial of block `j`, encoded
/// as the variable `c_i(j)`.
pub fn sigma_var(i: u32, j: u32) -> Var {
    Var::c(i, j)
}

/// Substitutes `σ_i^j -> e_i(x_{n_{j-1}+1}, ..., x_{n_j})`.
pub fn sigma_to_x(p: &Poly, nn: &FlagShape) -> Poly {
    let blocks = nn.blocks();
    p.substitute_with(|v| {
        (v.family() == Family::C).then(|| {
            let (a, b) = blocks[v.second() as usize - 1];
            elementary_symmetric(v.index() as usize, &vars_of(Family::X, a..=b))
        })
    })
}

/// Rewrites a polynomial that is symmetric within each block of `nn` in the
/// block generators `σ_i^j`, by repeatedly cancelling the lex-leading
/// `x`-monomial against a product of block elementary polynomials.
pub fn block_rewrite(p: &Poly, nn: &FlagShape) -> Result<Poly> {
    let blocks = nn.blocks();
    let mut rest = p.clone();
    let mut out = PolyBuilder::new();
    loop {
        let groups = rest.collect_by_family(Family::X);
        let Some((lead, coeff)) = groups.into_iter().max_by(|a, b| a.0.lex_cmp(&b.0)) else {
            break;
        };
        let mut sigma = Vec::new();
        let mut product = coeff.clone();
        for (j, &(a, b)) in blocks.iter().enumerate() {
            let exps: Vec<u32> = (a..=b).map(|i| lead.exponent(Var::x(i))).collect();
            if exps.windows(2).any(|w| w[0].cmp(&w[1]) == Ordering::Less) {
                return Err(Error::NotBlockSymmetric(nn.to_string()));
            }
            let vars = vars_of(Family::X, a..=b);
            for (i, &e) in exps.iter().enumerate() {
                let next = exps.get(i + 1).copied().unwrap_or(0);
                let power = e - next;
                if power > 0 {
                    sigma.push((sigma_var(i as u32 + 1, j as u32 + 1), power));
                    product = &product * &elementary_symmetric(i + 1, &vars).pow(power);
                }
            }
        }
        if lead.vars().any(|v| blocks.last().is_some_and(|&(_, b)| v.index() > b)) {
            return Err(Error::NotBlockSymmetric(nn.to_string()));
        }
        let sigma = Monomial::from_pairs(sigma);
        for (m, c) in coeff.terms() {
            out.add_term(m.mul(&sigma), c);
        }
        rest = &rest - &product;
    }
    Ok(out.build())
}
