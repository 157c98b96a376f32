//! Independent cross-checks of computed values.

use std::collections::BTreeMap;

use eqschubert::permgroup::{FlagShape, Permutation};
use eqschubert::polyring::{divided_difference, Family, Grading, Integer, Poly};
use eqschubert::qhmodule::{multiplication_table, multiplication_table_with, ProductRoute, StructureTable};
use eqschubert::quantize::{classical_schubert, eq_quantum_schubert, eq_quantum_schubert_in_window};
use eqschubert::universal::{alpha_double_formula, c_to_g, expand_elementary, univ_double_dd, univ_single};

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

const FL4_ROWS: &[(&str, &str)] = &[
    ("1234", "1"),
    ("2134", "x1 - t1"),
    ("1324", "x1 + x2 - t1 - t2"),
    ("1243", "x1 + x2 + x3 - t1 - t2 - t3"),
    ("2314", "x1*x2 + q1 - (x1 + x2)*t1 + t1^2"),
    ("3124", "x1^2 - q1 - x1*(t1 + t2) + t1*t2"),
    ("1342", "x1*x2 + x1*x3 + x2*x3 + q2 + q1 - (x1 + x2 + x3)*(t1 + t2) + t1^2 + t2^2 + t1*t2"),
    ("1423", "x1^2 + x1*x2 + x2^2 - q1 - q2 - (x1 + x2)*(t1 + t2 + t3) + t1*t2 + t1*t3 + t2*t3"),
    (
        "2341",
        "x1*x2*x3 + q1*x3 + q2*x1 - (x1*x2 + x1*x3 + x2*x3 + q1 + q2)*t1 + (x1 + x2 + x3)*t1^2 - t1^3",
    ),
    ("3214", "(x1 - t2)*(x1*x2 + q1 - (x1 + x2)*t1 + t1^2)"),
    (
        "2413",
        "x1^2*x2 + x1*x2^2 + q1*x1 + q1*x2 - q2*x1 - (x1 + x2)^2*t1 - x1*x2*(t2 + t3) + x1*t1*t2 + x1*t1^2 \
         + x2*t1^2 + x2*t1*t2 + x2*t1*t3 + x1*t1*t3 - t1^2*(t2 + t3) + q2*t1 - q1*t2 - q1*t3",
    ),
    (
        "4123",
        "x1^3 - 2*q1*x1 - q1*x2 - x1^2*(t1 + t2 + t3) + x1*(t1*t2 + t1*t3 + t2*t3) - t1*t2*t3 + t1*q1 + t2*q1 + t3*q1",
    ),
    (
        "2431",
        "(x1 + x2 - t2 - t3)*(x1*x2*x3 + q1*x3 + q2*x1 - x1*x2*t1 - x1*x3*t1 - x2*x3*t1 - q1*t1 - q2*t1 \
         + x1*t1^2 + x2*t1^2 + x3*t1^2 - t1^3)",
    ),
    (
        "3412",
        "x1^2*x2^2 - q2*x1^2 + 2*q1*x1*x2 + q1^2 + q1*q2 - x1^2*x2*t1 - x1^2*x2*t2 - x1*x2^2*t1 - x1*x2^2*t2 \
         - q1*x1*t1 - q1*x1*t2 - q1*x2*t1 - q1*x2*t2 + q2*x1*t1 + q2*x1*t2 + x1*x2*(t1 + t2)^2 \
         + x1^2*t1*t2 + x2^2*t1*t2 - (x1 + x2)*(t1^2*t2 + t1*t2^2) + t1^2*t2^2 + q1*t1^2 + q1*t2^2 - q2*t1*t2",
    ),
    (
        "3421",
        "(x1*x2 + q1 - x1*t2 - x2*t2 + t2^2)*(x1*x2*x3 + q1*x3 + q2*x1 - x1*x2*t1 - x1*x3*t1 - x2*x3*t1 \
         + x1*t1^2 + x2*t1^2 + x3*t1^2 - t1^3 - q1*t1 - q2*t1)",
    ),
    (
        "4231",
        "(x1^2 - q1 - x1*t2 - x1*t3 + t2*t3)*(x1*x2*x3 + q1*x3 + q2*x1 - x1*x2*t1 - x1*x3*t1 - x2*x3*t1 \
         - q1*t1 - q2*t1 + x1*t1^2 + x2*t1^2 + x3*t1^2 - t1^3)",
    ),
    (
        "4321",
        "(x1 - t3)*(x1*x2 + q1 - (x2 + x1)*t2 + t2^2)*(x1*x2*x3 + x1*q2 + q1*x3 \
         - (x2*x3 + q2 + x1*x3 + x1*x2 + q1)*t1 + (x3 + x2 + x1)*t1^2 - t1^3)",
    ),
];

#[test]
fn fl4_giambelli_rows() {
    for (w, expected) in FL4_ROWS {
        let sch = eq_quantum_schubert_in_window(&perm(w), 4).unwrap();
        assert_eq!(sch.body_x, p(expected), "{w}");
    }
}

/// Coefficient of `Sch_w` in a polynomial in `x`: apply `∂_w` and evaluate
/// at `x = 0`.
fn classical_coefficient(f: &Poly, w: &Permutation) -> Integer {
    let mut g = f.clone();
    let mut v = w.clone();
    while let Some(i) = (1..v.window()).find(|&i| v.apply(i) > v.apply(i + 1)) {
        g = divided_difference(&g, i as u32, Family::X);
        v = v.swap_positions(i);
    }
    g.constant_term()
}

fn at_t_zero(c: &Poly) -> Integer {
    c.constant_term()
}

fn classical_slice_matches(table: &StructureTable) {
    let n = table.n as usize;
    let perms = Permutation::all(n);
    for ((u, v), entry) in &table.entries {
        let f = &classical_schubert(u, n).unwrap() * &classical_schubert(v, n).unwrap();
        let zero_d = vec![0; n - 1];
        for w in &perms {
            let computed = entry.get(&(w.clone(), zero_d.clone())).map(at_t_zero).unwrap_or_default();
            let expected = classical_coefficient(&f, &w.embed(2 * n - 1));
            assert_eq!(computed, expected, "{u} * {v} at {w}");
        }
    }
}

#[test]
fn classical_slice_of_fl3_table() {
    classical_slice_matches(&multiplication_table(3).unwrap());
}

#[test]
fn classical_slice_of_fl4_table() {
    classical_slice_matches(&multiplication_table_with(4, ProductRoute::Reduced).unwrap());
}

#[test]
fn duality_echo() {
    for n in [3u32, 4] {
        let table = multiplication_table_with(n, ProductRoute::Reduced).unwrap();
        let nn = FlagShape::complete(n);
        let w0 = Permutation::longest(n as usize);
        let zero_d = vec![0; n as usize - 1];
        for u in Permutation::all(n as usize) {
            let dual = nn.dual(&u).unwrap();
            for v in Permutation::all(n as usize) {
                if v.length() + u.length() != w0.length() {
                    continue;
                }
                let c = table.get(&u, &v).unwrap().get(&(w0.clone(), zero_d.clone())).cloned().unwrap_or_default();
                let expected = if v == dual { Poly::one() } else { Poly::zero() };
                assert_eq!(c, expected, "{u} * {v}");
            }
        }
    }
}

#[test]
fn routes_agree_on_fl4() {
    let window = multiplication_table_with(4, ProductRoute::Window).unwrap();
    let reduced = multiplication_table_with(4, ProductRoute::Reduced).unwrap();
    assert_eq!(window, reduced);
    assert!(window.invariant_failures().is_empty());
}

#[test]
fn universal_double_is_stable() {
    for w in Permutation::all(3) {
        let base = univ_double_dd(&w, 2).unwrap();
        for n in [3, 4] {
            assert_eq!(*univ_double_dd(&w, n).unwrap(), *base, "{w} in S_{}", n + 1);
        }
    }
}

#[test]
fn universal_double_is_homogeneous() {
    let g = Grading::complete();
    for w in Permutation::all(4) {
        assert!(g.is_homogeneous_of(&univ_double_dd(&w, 3).unwrap(), w.length()), "{w}");
    }
}

#[test]
fn cyclic_permutations_match_closed_form() {
    for n in 1..=4u32 {
        let nn = FlagShape::complete(n + 1);
        for l in 1..=n {
            for k in 1..=l {
                let alpha = nn.cyclic_alpha(k, l as usize).unwrap();
                assert_eq!(*univ_double_dd(&alpha, n as usize).unwrap(), alpha_double_formula(k, l), "k={k} l={l} n={n}");
            }
        }
    }
}

#[test]
fn elementary_expansions_reconstruct() {
    for n in 1..=4usize {
        for w in Permutation::all(n + 1) {
            let x = classical_schubert(&w, n + 1).unwrap();
            let e = expand_elementary(&x, n).unwrap();
            assert_eq!(e.reconstruct(), x, "{w}");
            for ks in e.coeffs.keys() {
                assert_eq!(ks.iter().sum::<u32>(), w.length(), "{w} {ks:?}");
            }
        }
    }
}

#[test]
fn killing_paths_recovers_classical() {
    for w in Permutation::all(4) {
        let g_form = c_to_g(&univ_single(&w, 3).unwrap());
        let killed = g_form.substitute_with(|v| (v.family() == Family::G).then(Poly::zero));
        assert_eq!(killed, classical_schubert(&w, 4).unwrap(), "{w}");
    }
}

#[test]
fn weak_partial_stability() {
    let nn: FlagShape = "2;3".parse().unwrap();
    let wider: FlagShape = "2,3;4".parse().unwrap();
    for w in nn.shape_reps() {
        let small = eq_quantum_schubert(&w, &nn).unwrap();
        let big = eq_quantum_schubert(&w, &wider).unwrap();
        assert_eq!(small.body_sigma().unwrap(), big.body_sigma().unwrap(), "{w}");
    }
}

#[test]
fn bruhat_order_is_a_partial_order() {
    for n in 1..=4 {
        let perms = Permutation::all(n);
        for a in &perms {
            assert!(a.bruhat_leq(a));
            for b in &perms {
                if a.bruhat_leq(b) && b.bruhat_leq(a) {
                    assert_eq!(a, b);
                }
                if a.bruhat_leq(b) {
                    assert!(a.length() <= b.length());
                    for c in &perms {
                        if b.bruhat_leq(c) {
                            assert!(a.bruhat_leq(c), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }
}

fn young_subgroup(nn: &FlagShape) -> Vec<Permutation> {
    let blocks = nn.blocks();
    Permutation::all(nn.n() as usize)
        .into_iter()
        .filter(|u| {
            blocks.iter().all(|&(a, b)| (a..=b).all(|i| (a..=b).contains(&u.apply(i as usize))))
        })
        .collect()
}

#[test]
fn coset_representatives_by_brute_force() {
    for (bounds, n) in [(vec![1, 3], 5), (vec![2], 5), (vec![2, 3], 4), (vec![1], 3)] {
        let nn = FlagShape::new(bounds, n).unwrap();
        let young = young_subgroup(&nn);
        let mut reps: BTreeMap<Permutation, ()> = BTreeMap::new();
        for w in Permutation::all(n as usize) {
            let coset: Vec<Permutation> = young.iter().map(|u| w.compose(u)).collect();
            let shortest = coset.iter().min_by_key(|c| c.length()).unwrap();
            let r = nn.min_coset_rep(&w);
            assert_eq!(&r, shortest, "{w} in {nn}");
            assert_eq!(coset.iter().filter(|c| c.length() == r.length()).count(), 1);
            reps.insert(r, ());
        }
        let listed: Vec<Permutation> = nn.shape_reps();
        assert_eq!(listed.len(), reps.len());
        let bnd = nn.bounds_with_ends();
        let dim: u32 = (1..bnd.len() - 1).map(|i| bnd[i] * (bnd[i + 1] - bnd[i])).sum();
        assert_eq!(listed.iter().map(Permutation::length).max(), Some(dim));
        assert_eq!(nn.longest_element().length(), dim);
    }
}

#[test]
fn specialization_limits() {
    for w in Permutation::all(4) {
        let sch = eq_quantum_schubert_in_window(&w, 4).unwrap();
        let no_q = sch.body_x.substitute_with(|v| (v.family() == Family::Q).then(Poly::zero));
        assert_eq!(no_q, eqschubert::quantize::double_schubert(&w, 4).unwrap(), "{w}");
        let no_t = no_q.substitute_with(|v| (v.family() == Family::T).then(Poly::zero));
        assert_eq!(no_t, classical_schubert(&w, 4).unwrap(), "{w}");
    }
}
