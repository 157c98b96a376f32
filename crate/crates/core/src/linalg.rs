use crate::error::{Error, Result};
use crate::polyring::{Integer, Poly};

/// Solves `A c = b` over the integers for a matrix of full column rank whose
/// column lattice is saturated (every pivot reduces to ±1). Rows are
/// equations; extra rows must reduce to `0 = 0`.
///
/// Elimination uses Euclidean row reduction, so it never leaves the integers.
pub(crate) fn solve_unimodular(mut a: Vec<Vec<Integer>>, mut b: Vec<Integer>) -> Result<Vec<Integer>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        loop {
            // smallest nonzero entry at or below pivot_row becomes the pivot
            let best = (pivot_row..rows)
                .filter(|&r| !a[r][col].is_zero())
                .min_by(|&r, &s| a[r][col].abs().cmp(&a[s][col].abs()));
            let Some(p) = best else {
                return Err(Error::Singular(format!("no pivot in column {col}")));
            };
            a.swap(pivot_row, p);
            b.swap(pivot_row, p);
            let mut done = true;
            for r in pivot_row + 1..rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let (quot, _) = a[r][col].div_mod_floor(&a[pivot_row][col]);
                for c in col..cols {
                    let delta = &quot * &a[pivot_row][c];
                    a[r][c] -= &delta;
                }
                let delta = &quot * &b[pivot_row];
                b[r] -= &delta;
                if !a[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        let piv = &a[pivot_row][col];
        if !piv.abs().is_one() {
            return Err(Error::Singular(format!("pivot {piv} in column {col} is not a unit")));
        }
        pivot_row += 1;
    }
    if let Some(r) = (pivot_row..rows).find(|&r| !b[r].is_zero()) {
        return Err(Error::NonzeroResidual(format!("inconsistent equation in row {r}")));
    }
    let mut x = vec![Integer::ZERO; cols];
    for col in (0..cols).rev() {
        let mut acc = b[col].clone();
        for c in col + 1..cols {
            let delta = &a[col][c] * &x[c];
            acc -= &delta;
        }
        // pivot is ±1
        x[col] = if a[col][col].is_negative() { -&acc } else { acc };
    }
    Ok(x)
}

/// Determinant by cofactor expansion along the first row.
pub(crate) fn det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &det(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn solves_unimodular_system() {
        // columns (1,1,0), (0,1,1), (1,0,0)
        let a = vec![ints(&[1, 0, 1]), ints(&[1, 1, 0]), ints(&[0, 1, 0])];
        let x = solve_unimodular(a, ints(&[4, 5, 2])).unwrap();
        assert_eq!(x, ints(&[3, 2, 1]));
    }

    #[test]
    fn rejects_non_unit_pivot() {
        let a = vec![ints(&[2, 0]), ints(&[0, 1])];
        assert!(matches!(solve_unimodular(a, ints(&[2, 1])), Err(Error::Singular(_))));
    }

    #[test]
    fn reports_inconsistency() {
        let a = vec![ints(&[1]), ints(&[1])];
        assert!(matches!(solve_unimodular(a, ints(&[1, 2])), Err(Error::NonzeroResidual(_))));
    }

    #[test]
    fn det_of_small_matrix() {
        let p = |s: &str| s.parse::<Poly>().unwrap();
        let m = vec![vec![p("x1"), p("1")], vec![p("x2"), p("x3")]];
        assert_eq!(det(&m), p("x1*x3 - x2"));
    }
}
