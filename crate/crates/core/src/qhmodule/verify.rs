use std::collections::BTreeMap;
use std::fmt;

use super::{expand_in_basis, expand_in_shape_basis, truncate, StructureTable};
use crate::error::Result;
use crate::permgroup::{FlagShape, Permutation};
use crate::polyring::{elementary_symmetric, neg_alpha_coefficients, vars_of, Family, Integer, Monomial, Poly, Var};
use crate::quantize::quantum_elementary;

/// Outcome of a verification suite: how many identities were checked and a
/// description of each one that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Report {
        Report { suite: suite.into(), ..Report::default() }
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_clean() { "ok" } else { "FAILED" };
        writeln!(f, "{}: {status} ({} checked, {} failed)", self.suite, self.checked, self.failures.len())?;
        for line in &self.failures {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrahamViolation {
    pub u: Permutation,
    pub v: Permutation,
    pub w: Permutation,
    pub d: Vec<u32>,
    pub monomial: Monomial,
    pub coefficient: Integer,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrahamReport {
    pub checked: usize,
    pub violations: Vec<GrahamViolation>,
}

impl GrahamReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for GrahamReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_clean() { "ok" } else { "FAILED" };
        writeln!(f, "positivity: {status} ({} coefficients checked, {} negative)", self.checked, self.violations.len())?;
        for g in &self.violations {
            writeln!(f, "  {} * {} -> q^{:?} s[{}]: {} on {}", g.u, g.v, g.d, g.w, g.coefficient, g.monomial)?;
        }
        Ok(())
    }
}

/// Rewrites every structure constant in the variables `-a_i`,
/// `a_i = t_i - t_{i+1}`, and reports each negative coefficient.
pub fn graham_check(table: &StructureTable) -> GrahamReport {
    let mut report = GrahamReport::default();
    for ((u, v), entry) in &table.entries {
        for ((w, d), c) in entry {
            report.checked += 1;
            for (m, coefficient) in neg_alpha_coefficients(c, table.n) {
                if coefficient.is_negative() {
                    report.violations.push(GrahamViolation {
                        u: u.clone(),
                        v: v.clone(),
                        w: w.clone(),
                        d: d.clone(),
                        monomial: m,
                        coefficient,
                    });
                }
            }
        }
    }
    report
}

/// Checks that `e^q_k(n) - e_k(t_1..t_n)` vanishes in `QH_T^*(Fl(nn))` for
/// `k = 1..n`: its Schubert expansion has no term indexed by `S^nn`.
///
/// Complete flags expand in window `2n - 1` and truncate to `S_n`. A partial
/// shape is extended by the bound `n` inside `C^{2n-1}`, where the
/// relation is block symmetric, and the coefficients on `S^nn` are read off.
pub fn verify_presentation(nn: &FlagShape) -> Report {
    let mut report = Report::new(&format!("presentation {nn}"));
    let n = nn.n();
    let ts = vars_of(Family::T, 1..=n);
    for k in 1..=n {
        report.checked += 1;
        let outcome = (|| -> Result<Vec<(Permutation, Poly)>> {
            let rel = &*quantum_elementary(k, n, nn)? - &elementary_symmetric(k as usize, &ts);
            if nn.is_complete() {
                let combo = expand_in_basis(&rel, 2 * n - 1)?;
                Ok(truncate(&combo, n)?.terms.into_iter().collect())
            } else {
                let wide = nn.with_appended_block(2 * n - 1)?;
                let combo = expand_in_shape_basis(&rel, &wide)?;
                Ok(combo
                    .terms
                    .into_iter()
                    .filter(|(w, _)| w.support_window() <= n as usize && nn.contains(w))
                    .collect())
            }
        })();
        match outcome {
            Ok(left) if left.is_empty() => {}
            Ok(left) => {
                let terms: Vec<String> = left.iter().map(|(w, a)| format!("({a})*s[{w}]")).collect();
                report.failures.push(format!("k={k}: {}", terms.join(" + ")));
            }
            Err(e) => report.failures.push(format!("k={k}: {e}")),
        }
    }
    report
}

fn eq_or_zero(k: i64, l: i64, nn: &FlagShape) -> Poly {
    if k < 0 || l < 0 || k > l {
        return Poly::zero();
    }
    quantum_elementary(k as u32, l as u32, nn).map(|p| (*p).clone()).unwrap_or_default()
}

/// For `0 <= j, k <= l <= l_max`:
/// `e_j(l) e_{k+1}(l+1) + e_{j+1}(l) e_k(l) + q_l e_{j-1}(l-1) e_k(l)`
/// equals the same expression with `j` and `k` exchanged, for the quantum
/// elementary polynomials `e = e^q` of `Fl(l_max + 1)`.
pub fn verify_straightening(l_max: u32) -> Report {
    let mut report = Report::new(&format!("straightening l <= {l_max}"));
    let nn = FlagShape::complete(l_max + 1);
    let side = |j: i64, k: i64, l: i64| -> Poly {
        let e = |a: i64, b: i64| eq_or_zero(a, b, &nn);
        let mut acc = &e(j, l) * &e(k + 1, l + 1) + &e(j + 1, l) * &e(k, l);
        if l > 0 {
            let q = Poly::var(Var::q(l as u32));
            acc += &(&q * &(&e(j - 1, l - 1) * &e(k, l)));
        }
        acc
    };
    for l in 0..=l_max as i64 {
        for j in 0..=l {
            for k in 0..=l {
                report.checked += 1;
                let (lhs, rhs) = (side(j, k, l), side(k, j, l));
                if lhs != rhs {
                    report.failures.push(format!("(j,k,l)=({j},{k},{l}): {}", &lhs - &rhs));
                }
            }
        }
    }
    report
}

fn contract(
    table: &StructureTable,
    combo: &BTreeMap<Permutation, Poly>,
    w: &Permutation,
    combo_on_left: bool,
) -> Option<BTreeMap<Permutation, Poly>> {
    let mut out: BTreeMap<Permutation, Poly> = BTreeMap::new();
    for (x, a) in combo {
        let prod = if combo_on_left { table.product(x, w)? } else { table.product(w, x)? };
        for (y, b) in prod {
            let slot = out.entry(y).or_default();
            *slot = &*slot + &(a * &b);
        }
    }
    out.retain(|_, p| !p.is_zero());
    Some(out)
}

/// `(σ_u ∘ σ_v) ∘ σ_w = σ_u ∘ (σ_v ∘ σ_w)` for each triple, contracted
/// through the table with coefficients compared exactly in `Z[t, q]`.
pub fn verify_associativity(table: &StructureTable, triples: &[(Permutation, Permutation, Permutation)]) -> Report {
    let mut report = Report::new(&format!("associativity n={}", table.n));
    for (u, v, w) in triples {
        report.checked += 1;
        let left = table.product(u, v).and_then(|uv| contract(table, &uv, w, true));
        let right = table.product(v, w).and_then(|vw| contract(table, &vw, u, false));
        match (left, right) {
            (Some(l), Some(r)) if l == r => {}
            (Some(_), Some(_)) => report.failures.push(format!("({u} * {v}) * {w} differs from {u} * ({v} * {w})")),
            _ => report.failures.push(format!("table lacks a product needed for ({u}, {v}, {w})")),
        }
    }
    report
}

/// Compares each row `{"w", "poly"}` of a Giambelli table against
/// `eq_quantum_schubert` on the table's shape.
pub fn compare_giambelli(golden: &serde_json::Value) -> Report {
    let mut report = Report::new("giambelli table");
    let shape = golden.get("shape").and_then(serde_json::Value::as_str).map(str::parse::<FlagShape>);
    let Some(Ok(shape)) = shape else {
        report.failures.push("missing or invalid `shape`".into());
        return report;
    };
    let rows = golden.get("rows").and_then(serde_json::Value::as_array).cloned().unwrap_or_default();
    for row in rows {
        report.checked += 1;
        let outcome = (|| -> Result<Option<String>> {
            let field = |k: &str| {
                row.get(k)
                    .and_then(serde_json::Value::as_str)
                    .ok_or_else(|| crate::Error::Parse(format!("row lacks `{k}`")))
            };
            let w: Permutation = field("w")?.parse()?;
            let expected: Poly = field("poly")?.parse()?;
            let got = crate::quantize::eq_quantum_schubert(&w, &shape)?.body_x.clone();
            Ok((got != expected).then(|| format!("{w}: expected {expected}, computed {got}")))
        })();
        match outcome {
            Ok(None) => {}
            Ok(Some(diff)) => report.failures.push(diff),
            Err(e) => report.failures.push(e.to_string()),
        }
    }
    report
}

/// Compares every pair present in `golden` with the same pair of
/// `computed`, reporting the terms that differ.
pub fn compare_tables(computed: &StructureTable, golden: &StructureTable) -> Report {
    let mut report = Report::new(&format!("structure table n={}", golden.n));
    for ((u, v), expected) in &golden.entries {
        report.checked += 1;
        let Some(got) = computed.get(u, v) else {
            report.failures.push(format!("{u} * {v}: not computed"));
            continue;
        };
        if got == expected {
            continue;
        }
        let mut diffs = Vec::new();
        let keys: std::collections::BTreeSet<_> = got.keys().chain(expected.keys()).collect();
        for key in keys {
            let (a, b) = (expected.get(key).cloned().unwrap_or_default(), got.get(key).cloned().unwrap_or_default());
            if a != b {
                diffs.push(format!("q^{:?} s[{}]: expected {a}, computed {b}", key.1, key.0));
            }
        }
        report.failures.push(format!("{u} * {v}: {}", diffs.join("; ")));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qhmodule::multiplication_table;

    #[test]
    fn presentation_small() {
        let r = verify_presentation(&FlagShape::complete(2));
        assert!(r.is_clean(), "{r}");
        assert_eq!(r.checked, 2);
    }

    #[test]
    fn straightening_small() {
        let r = verify_straightening(2);
        assert!(r.is_clean(), "{r}");
    }

    #[test]
    fn straightening_detects_a_wrong_sign() {
        // flipping the quantum term breaks the identity at (0,1,1)
        let nn = FlagShape::complete(2);
        let e = |a: i64, b: i64| eq_or_zero(a, b, &nn);
        let q = Poly::var(Var::q(1));
        let lhs = &e(0, 1) * &e(2, 2) + &e(1, 1) * &e(1, 1) - &q * &(&e(-1, 0) * &e(1, 1));
        let rhs = &e(1, 1) * &e(1, 2) + &e(2, 1) * &e(0, 1) - &q * &(&e(0, 0) * &e(0, 1));
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn graham_examples() {
        let mut table = multiplication_table(2).unwrap();
        assert!(graham_check(&table).is_clean());
        let key = table.entries.keys().last().unwrap().clone();
        let entry = table.entries.get_mut(&key).unwrap();
        let (_, c) = entry.iter_mut().find(|(_, c)| c.len() == 2).unwrap();
        *c = -&*c;
        assert_eq!(graham_check(&table).violations.len(), 1);
    }

    #[test]
    fn associativity_fl2() {
        let table = multiplication_table(2).unwrap();
        let perms = Permutation::all(2);
        let mut triples = Vec::new();
        for u in &perms {
            for v in &perms {
                for w in &perms {
                    triples.push((u.clone(), v.clone(), w.clone()));
                }
            }
        }
        let r = verify_associativity(&table, &triples);
        assert!(r.is_clean(), "{r}");
        assert_eq!(r.checked, 8);
    }
}
