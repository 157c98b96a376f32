//! Universal single and double Schubert polynomials.
//!
//! Three alphabets appear here. `c_k(l)` are free stand-ins for the
//! elementary symmetric polynomials `e_k(x_1..x_l)` (and `d_k(l)` for the
//! same in `y`); `g_i[j]` are the path variables of the type A Dynkin
//! diagram, with `g_i[0]` written directly as `x_i`. The two alphabets are
//! related by `c_k(l) = E_k^l(g)`.

mod elementary;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub use elementary::{expand_elementary, ElemExpansion};

use crate::error::{Error, Result};
use crate::linalg::det;
use crate::memo::Memo;
use crate::permgroup::{FlagShape, Permutation};
use crate::polyring::{complete_symmetric, divided_difference, elementary_symmetric, vars_of, Family, Poly, Var};

/// `g_i[j]`, with `g_i[0] = x_i`.
pub fn g_var(i: u32, j: u32) -> Var {
    if j == 0 {
        Var::x(i)
    } else {
        Var::g(i, j)
    }
}

/// `c_k(l)` as a polynomial: 1 for `k = 0`, 0 outside `0 <= k <= l`.
pub fn c_poly(k: i64, l: i64) -> Poly {
    if k == 0 && l >= 0 {
        Poly::one()
    } else if k < 0 || k > l {
        Poly::zero()
    } else {
        Poly::var(Var::c(k as u32, l as u32))
    }
}

static E_CACHE: Memo<(u32, u32), Poly> = Memo::new();

/// `E_k^l(g)` from the inductive definition
/// `E_k^l = E_k^{l-1} + sum_{j<k} E_{k-j-1}^{l-j-1} g_{l-j}[j]`.
pub fn e_poly(k: u32, l: u32) -> Arc<Poly> {
    if k == 0 {
        return Arc::new(Poly::one());
    }
    if k > l {
        return Arc::new(Poly::zero());
    }
    E_CACHE.get_or_insert_with((k, l), || {
        let mut acc = (*e_poly(k, l - 1)).clone();
        for j in 0..k {
            let lower = e_poly(k - j - 1, l - j - 1);
            acc += &(&*lower * &Poly::var(g_var(l - j, j)));
        }
        acc
    })
}

/// The path matrix `M_l`: `g_a[b-a]` on and above the diagonal, `-1` just
/// below it.
pub fn path_matrix(l: u32) -> Vec<Vec<Poly>> {
    (1..=l)
        .map(|a| {
            (1..=l)
                .map(|b| {
                    if a <= b {
                        Poly::var(g_var(a, b - a))
                    } else if a == b + 1 {
                        Poly::constant(-1)
                    } else {
                        Poly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Coefficient of `T^e` in `det(M_l + T I)`, i.e. the sum of the principal
/// minors of `M_l` of size `l - e`.
pub fn det_t_coefficient(l: u32, e: u32) -> Poly {
    if e > l {
        return Poly::zero();
    }
    let m = path_matrix(l);
    let size = (l - e) as usize;
    let mut acc = Poly::zero();
    for subset in subsets(l as usize, size) {
        let minor: Vec<Vec<Poly>> =
            subset.iter().map(|&r| subset.iter().map(|&c| m[r][c].clone()).collect()).collect();
        acc += &det(&minor);
    }
    acc
}

/// `E_k^l` through the determinant: the coefficient of `T^{l-k}` in
/// `det(M_l + T I)`.
pub fn e_det_check(k: u32, l: u32) -> Poly {
    if k > l {
        return Poly::zero();
    }
    det_t_coefficient(l, l - k)
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// `H_a^b(g) = det(c_{1+j-i}(b+j-1))_{a x a}` with `c_k(l) = E_k^l(g)`.
pub fn h_poly(a: u32, b: u32) -> Result<Poly> {
    if a == 0 || a > b {
        return Err(Error::OutOfRange(format!("H_{a}^{b} needs 1 <= a <= b")));
    }
    Ok(c_to_g(&jacobi_trudi_c(a, |j| (b + j - 1) as i64)))
}

/// `det(c_{1+j-i}(level(j)))_{k x k}` in the `c` alphabet.
pub fn jacobi_trudi_c(k: u32, level: impl Fn(u32) -> i64) -> Poly {
    let m: Vec<Vec<Poly>> = (1..=k)
        .map(|i| (1..=k).map(|j| c_poly(1 + j as i64 - i as i64, level(j))).collect())
        .collect();
    det(&m)
}

/// Substitutes `c_k(l) = E_k^l(g)`.
pub fn c_to_g(p: &Poly) -> Poly {
    p.substitute_with(|v| (v.family() == Family::C).then(|| (*e_poly(v.index(), v.second())).clone()))
}

/// Solves the inductive relation for the path variables:
/// `g_{l-k+1}[k-1] = c_k(l) - c_k(l-1) - sum_{j<k-1} c_{k-j-1}(l-j-1) g_{l-j}[j]`,
/// for all paths ending at or before `l_max`. The `k = 1` entries are the
/// images of `x_l`.
pub fn invert_e(l_max: u32) -> BTreeMap<Var, Poly> {
    let mut out: BTreeMap<Var, Poly> = BTreeMap::new();
    for l in 1..=l_max {
        for k in 1..=l {
            let mut rhs = &c_poly(k as i64, l as i64) - &c_poly(k as i64, l as i64 - 1);
            for j in 0..k - 1 {
                let g = &out[&g_var(l - j, j)];
                rhs -= &(&c_poly((k - j - 1) as i64, (l - j - 1) as i64) * g);
            }
            out.insert(g_var(l - k + 1, k - 1), rhs);
        }
    }
    out
}

/// Rewrites a polynomial in `x` and `g` into the `c` alphabet.
pub fn g_to_c(p: &Poly) -> Result<Poly> {
    let l_max = p
        .vars()
        .iter()
        .filter(|v| matches!(v.family(), Family::X | Family::G))
        .map(|v| if v.family() == Family::X { v.index() } else { v.index() + v.second() })
        .max()
        .unwrap_or(0);
    let images: HashMap<Var, Poly> = invert_e(l_max).into_iter().collect();
    Ok(p.substitute(&images))
}

/// `d_k(l) = e_k(y_1..y_l)`.
pub fn d_to_y(p: &Poly) -> Poly {
    p.substitute_with(|v| {
        (v.family() == Family::D)
            .then(|| elementary_symmetric(v.index() as usize, &vars_of(Family::Y, 1..=v.second())))
    })
}

/// `c_k(l) = e_k(x_1..x_l)`.
pub fn c_to_x(p: &Poly) -> Poly {
    p.substitute_with(|v| {
        (v.family() == Family::C)
            .then(|| elementary_symmetric(v.index() as usize, &vars_of(Family::X, 1..=v.second())))
    })
}

fn check_window(w: &Permutation, n: usize) -> Result<()> {
    if w.support_window() > n + 1 {
        return Err(Error::OutOfRange(format!("{w} does not lie in S_{}", n + 1)));
    }
    Ok(())
}

/// Universal single Schubert polynomial `Sch_w(c)` for `w` in `S_{n+1}`,
/// from the standard elementary expansion of the classical polynomial.
pub fn univ_single(w: &Permutation, n: usize) -> Result<Poly> {
    check_window(w, n)?;
    let x = crate::quantize::classical_schubert(w, n + 1)?;
    Ok(expand_elementary(&x, n)?.to_c_form())
}

/// `Sch_{w_o}(c, y) = prod_{i=1}^n sum_{j=0}^i c_{i-j}(i) (-y_{n+1-i})^j`
/// for the longest element of `S_{n+1}`.
pub fn top_double(n: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 1..=n as i64 {
        let y = -Poly::var(Var::y((n as i64 + 1 - i) as u32));
        let factor: Poly = (0..=i).map(|j| &c_poly(i - j, i) * &y.pow(j as u32)).sum();
        acc = &acc * &factor;
    }
    acc
}

static DOUBLE_DD: Memo<(Permutation, usize), Poly> = Memo::new();

/// Universal double Schubert polynomial `Sch_w(c, y)` for `w` in `S_{n+1}`,
/// from the top polynomial via `Sch_{s_i w} = -∂^y_i Sch_w`.
///
/// The recursion always raises `w` at its smallest left ascent, so shared
/// intermediate permutations hit the cache.
pub fn univ_double_dd(w: &Permutation, n: usize) -> Result<Arc<Poly>> {
    check_window(w, n)?;
    Ok(double_dd_rec(&w.embed(n + 1).trim().embed(n + 1), n))
}

fn double_dd_rec(w: &Permutation, n: usize) -> Arc<Poly> {
    let top_len = (n * (n + 1) / 2) as u32;
    if w.length() == top_len {
        return DOUBLE_DD.get_or_insert_with((w.clone(), n), || top_double(n));
    }
    if let Some(hit) = DOUBLE_DD.get(&(w.clone(), n)) {
        return hit;
    }
    let inv = w.inverse();
    let i = (1..=n).find(|&i| inv.apply(i) < inv.apply(i + 1)).expect("non-top element has a left ascent");
    let above = double_dd_rec(&w.swap_values(i), n);
    DOUBLE_DD.get_or_insert_with((w.clone(), n), || -divided_difference(&above, i as u32, Family::Y))
}

/// Universal double Schubert polynomial in `c` and `d` from the sum
/// `sum (-1)^{l(v)} Sch_u(c) Sch_v(d)` over `v^{-1} u = w` with
/// `l(u) + l(v) = l(w)`.
pub fn univ_double_sum(w: &Permutation, n: usize) -> Result<Poly> {
    check_window(w, n)?;
    let w = w.embed(n + 1);
    let mut acc = Poly::zero();
    for v in Permutation::all(n + 1) {
        if v.length() > w.length() {
            continue;
        }
        let u = v.compose(&w);
        if u.length() + v.length() != w.length() {
            continue;
        }
        let su = univ_single(&u, n)?;
        let sv = univ_single(&v, n)?.map_vars(|c| Var::d(c.index(), c.second()));
        let term = &su * &sv;
        if v.length() % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

/// `Sch_{α_{k,l}}(c, y) = sum_{k' <= k} (-1)^{k-k'} c_{k'}(l) h_{k-k'}(y_1..y_{l-k+1})`.
pub fn alpha_double_formula(k: u32, l: u32) -> Poly {
    let ys = vars_of(Family::Y, 1..=l + 1 - k);
    (0..=k)
        .map(|kp| {
            let term = &c_poly(kp as i64, l as i64) * &complete_symmetric((k - kp) as usize, &ys);
            if (k - kp).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Whether the path `g_i[j]` survives restriction to `nn`: `j = 0` or the
/// path ends at a bound of `nn` or at `n`.
pub fn path_survives(i: u32, j: u32, nn: &FlagShape) -> bool {
    j == 0 || i + j == nn.n() || nn.contains_bound(i + j)
}

fn restrict_g(p: &Poly, nn: &FlagShape) -> Poly {
    p.substitute_with(|v| {
        (v.family() == Family::G && !path_survives(v.index(), v.second(), nn)).then(Poly::zero)
    })
}

/// `Sch^nn(g, y)` from a `c, y` polynomial: substitute `c = E(g)` and kill
/// the paths that do not end at a bound.
pub fn partial_restrict(p: &Poly, nn: &FlagShape) -> Poly {
    restrict_g(&c_to_g(p), nn)
}

/// The same restriction through the block route: first `c_k(l) -> c_k(n_p)`
/// for `n_p <= l < n_{p+1}`, then `c = E(g)` and the path restriction.
pub fn partial_restrict_via_blocks(p: &Poly, nn: &FlagShape) -> Poly {
    restrict_g(&c_to_g(&collapse_levels(p, nn)), nn)
}

/// `c_k(l) -> c_k(n_p)` for `n_p <= l < n_{p+1}`, with `c_k(0) = 0`.
pub fn collapse_levels(p: &Poly, nn: &FlagShape) -> Poly {
    let ends = nn.bounds_with_ends();
    p.substitute_with(|v| {
        if v.family() != Family::C {
            return None;
        }
        let l = v.second();
        let np = ends.iter().copied().filter(|&b| b <= l).max().unwrap_or(0);
        Some(c_poly(v.index() as i64, np as i64))
    })
}
