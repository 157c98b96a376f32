//! Equivariant quantum Schubert polynomials and their classical limits.

mod block;

use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

pub use block::{block_rewrite, sigma_to_x};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::permgroup::{FlagShape, Permutation};
use crate::polyring::{divided_difference, Family, Monomial, Poly, PolyBuilder, Var};
use crate::universal::{e_poly, univ_double_dd};

static CLASSICAL: Memo<(Permutation, usize), Poly> = Memo::new();

/// Classical Schubert polynomial of `w` in `S_n`: divided differences along
/// the descent chain applied to `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
pub fn classical_schubert(w: &Permutation, n: usize) -> Result<Poly> {
    if w.support_window() > n {
        return Err(Error::OutOfRange(format!("{w} does not lie in S_{n}")));
    }
    let w = w.embed(n);
    let out = CLASSICAL.get_or_insert_with((w.clone(), n), || {
        let top = Monomial::from_pairs((1..n).map(|i| (Var::x(i as u32), (n - i) as u32)));
        let mut p = Poly::term(top, 1);
        for i in w.descent_chain(n) {
            p = divided_difference(&p, i as u32, Family::X);
        }
        p
    });
    Ok((*out).clone())
}

/// Double Schubert polynomial `sum (-1)^{l(v)} Sch_u(x) Sch_v(t)` over
/// `v^{-1} u = w` with `l(u) + l(v) = l(w)`.
pub fn double_schubert(w: &Permutation, n: usize) -> Result<Poly> {
    if w.support_window() > n {
        return Err(Error::OutOfRange(format!("{w} does not lie in S_{n}")));
    }
    let w = w.embed(n);
    let mut acc = Poly::zero();
    for v in Permutation::all(n) {
        if v.length() > w.length() {
            continue;
        }
        let u = v.compose(&w);
        if u.length() + v.length() != w.length() {
            continue;
        }
        let sv = classical_schubert(&v, n)?.map_vars(|x| Var::t(x.index()));
        let term = &classical_schubert(&u, n)? * &sv;
        if v.length() % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

/// Image of a path variable under the quantum specialization for `nn`:
/// `g_{n_{i-1}+1}[n_{i+1}-n_{i-1}-1] -> (-1)^{n_i-n_{i-1}+1} q_i`, every
/// other path of positive length to zero.
pub fn special_path_image(i: u32, j: u32, nn: &FlagShape) -> Poly {
    let b = nn.bounds_with_ends();
    for k in 1..=nn.m() {
        if i == b[k - 1] + 1 && j + 1 == b[k + 1] - b[k - 1] {
            let q = Poly::var(Var::q(k as u32));
            return if (b[k] - b[k - 1]).is_multiple_of(2) { -q } else { q };
        }
    }
    Poly::zero()
}

/// Applies the quantum specialization to a polynomial in `x, g, y, h`:
/// paths as in [`special_path_image`], `y_i, h_i[0] -> t_i`, `h_i[j>0] -> 0`.
pub fn specialize(p: &Poly, nn: &FlagShape) -> Poly {
    p.substitute_with(|v| match v.family() {
        Family::G => Some(special_path_image(v.index(), v.second(), nn)),
        Family::Y => Some(Poly::var(Var::t(v.index()))),
        Family::H if v.second() == 0 => Some(Poly::var(Var::t(v.index()))),
        Family::H => Some(Poly::zero()),
        _ => None,
    })
}

static QUANTUM_E: Memo<(u32, u32, FlagShape), Poly> = Memo::new();

/// `e^q_k(l)`: the quantum specialization of `E_k^l(g)`.
pub fn quantum_elementary(k: u32, l: u32, nn: &FlagShape) -> Result<Arc<Poly>> {
    if k > l || l > nn.n() {
        return Err(Error::OutOfRange(format!("e^q_{k}({l}) needs 0 <= k <= l <= {}", nn.n())));
    }
    Ok(QUANTUM_E.get_or_insert_with((k, l, nn.clone()), || specialize(&e_poly(k, l), nn)))
}

static SPECIALIZED_C: Memo<(Monomial, FlagShape), Poly> = Memo::new();

/// Image of a monomial in `c_k(l)` under `c_k(l) -> e^q_k(l)`.
fn specialized_c_monomial(m: &Monomial, nn: &FlagShape) -> Arc<Poly> {
    if let Some(hit) = SPECIALIZED_C.get(&(m.clone(), nn.clone())) {
        return hit;
    }
    let factors = m.factors();
    let (&(v, e), rest) = factors.split_last().expect("non-unit monomial");
    let head = if e == 1 {
        Monomial::from_pairs(rest.iter().copied())
    } else {
        Monomial::from_pairs(rest.iter().copied().chain([(v, e - 1)]))
    };
    let eq = quantum_elementary(v.index(), v.second(), nn).expect("c index within the window");
    let value = if head.is_one() { (*eq).clone() } else { &*specialized_c_monomial(&head, nn) * &*eq };
    SPECIALIZED_C.get_or_insert_with((m.clone(), nn.clone()), || value)
}

/// Quantum specialization of a polynomial in `c` and `y`, computed through
/// cached images of its `c` monomials.
pub fn specialize_c_form(p: &Poly, nn: &FlagShape) -> Poly {
    let mut out = PolyBuilder::new();
    for (cm, rest) in p.collect_by_family(Family::C) {
        let rest = rest.map_vars(|v| if v.family() == Family::Y { Var::t(v.index()) } else { v });
        if cm.is_one() {
            out.add_poly(&rest);
            continue;
        }
        let image = specialized_c_monomial(&cm, nn);
        out.add_poly(&(&*image * &rest));
    }
    out.build()
}

/// An equivariant quantum Schubert polynomial together with its shape.
#[derive(Clone, Debug)]
pub struct EqQuantumSchubert {
    pub w: Permutation,
    pub shape: FlagShape,
    pub body_x: Poly,
    sigma: OnceLock<Poly>,
}

impl EqQuantumSchubert {
    /// The same polynomial written in the block generators `σ_i^j`, encoded
    /// as `c_i(j)`; computed on first use.
    pub fn body_sigma(&self) -> Result<&Poly> {
        if let Some(p) = self.sigma.get() {
            return Ok(p);
        }
        let p = block_rewrite(&self.body_x, &self.shape)?;
        Ok(self.sigma.get_or_init(|| p))
    }

    pub fn to_latex(&self) -> String {
        self.body_x.to_latex()
    }

    pub fn to_latex_sigma(&self) -> Result<String> {
        Ok(self.body_sigma()?.to_latex_sigma())
    }
}

static EQ_QUANTUM: Memo<(Permutation, FlagShape), EqQuantumSchubert> = Memo::new();

/// `Sch^q_w(x, t)` for `w` in `S^nn`, computed in the window `n` of the shape.
pub fn eq_quantum_schubert(w: &Permutation, nn: &FlagShape) -> Result<Arc<EqQuantumSchubert>> {
    nn.check(w)?;
    let n = nn.n() as usize;
    let w = w.embed(n);
    EQ_QUANTUM.try_get_or_insert_with((w.clone(), nn.clone()), || {
        let body_x = match disk_cache_path(&w, nn) {
            Some(path) => match std::fs::read_to_string(&path).ok().and_then(|s| Poly::from_json_str(&s).ok()) {
                Some(p) => p,
                None => {
                    let p = compute_body(&w, nn)?;
                    // the cache is best effort; a failed write only costs a recomputation
                    let _ = std::fs::write(&path, p.to_json_string());
                    p
                }
            },
            None => compute_body(&w, nn)?,
        };
        Ok(EqQuantumSchubert { w: w.clone(), shape: nn.clone(), body_x, sigma: OnceLock::new() })
    })
}

/// `Sch^q_w(x, t)` for complete flags in the explicit window `n`.
pub fn eq_quantum_schubert_in_window(w: &Permutation, n: u32) -> Result<Arc<EqQuantumSchubert>> {
    eq_quantum_schubert(w, &FlagShape::complete(n))
}

fn compute_body(w: &Permutation, nn: &FlagShape) -> Result<Poly> {
    let n = nn.n() as usize;
    let universal = univ_double_dd(w, n.saturating_sub(1))?;
    Ok(specialize_c_form(&universal, nn))
}

fn disk_cache_path(w: &Permutation, nn: &FlagShape) -> Option<PathBuf> {
    let dir = std::env::var_os("EQSCHUBERT_CACHE_DIR")?;
    let dir = PathBuf::from(dir);
    std::fs::create_dir_all(&dir).ok()?;
    let shape = nn.to_string().replace(',', "-").replace(';', "_");
    let perm = w.to_string().replace(',', "-");
    Some(dir.join(format!("schq_{shape}_{perm}.json")))
}
