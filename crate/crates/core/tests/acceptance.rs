//! End-to-end acceptance run: ten criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines
//! when everything passes.

use std::collections::BTreeMap;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use eqschubert::golden::{TABLE1_JSON, TABLE2_JSON};
use eqschubert::permgroup::{FlagShape, Permutation};
use eqschubert::polyring::{divided_difference, Family, Grading, Monomial, Poly, Var};
use eqschubert::qhmodule::suites::{suite_associativity, suite_positivity, suite_presentation, suite_stability};
use eqschubert::qhmodule::{
    compare_giambelli, compare_tables, expand_in_basis, multiplication_table, truncate, verify_straightening, Report,
    SchubertCombo, StructureTable,
};
use eqschubert::quantize::{classical_schubert, double_schubert, eq_quantum_schubert, eq_quantum_schubert_in_window};
use eqschubert::universal::{d_to_y, univ_double_dd, univ_double_sum, univ_single};

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[Report]) -> Outcome {
    let passed = reports.iter().all(Report::is_clean);
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let detail = if passed {
        format!("{checked} checks")
    } else {
        reports.iter().filter(|r| !r.is_clean()).map(|r| r.to_string().trim_end().to_string()).collect::<Vec<_>>().join("\n")
    };
    Outcome { passed, detail }
}

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let golden: serde_json::Value = serde_json::from_str(TABLE1_JSON).unwrap();
    from_reports(&[compare_giambelli(&golden)])
}

fn criterion_2() -> Outcome {
    let golden = StructureTable::from_json_str(TABLE2_JSON).unwrap();
    let computed = multiplication_table(3).unwrap();
    let mut reports = vec![compare_tables(&computed, &golden)];
    let invariants = computed.invariant_failures();
    reports.push(Report { suite: "table invariants".into(), checked: computed.entries.len(), failures: invariants });
    from_reports(&reports)
}

fn criterion_3() -> Outcome {
    let sch = eq_quantum_schubert_in_window(&perm("231"), 3).unwrap().body_x.clone();
    let combo = expand_in_basis(&(&sch * &sch), 5).unwrap();
    let printed: BTreeMap<Permutation, Poly> = [
        ("21", "q1*(t2 - t1)"),
        ("231", "(t2 - t1)*(t3 - t1)"),
        ("312", "q2"),
        ("2413", "t2 - t1"),
        ("3412", "1"),
    ]
    .into_iter()
    .map(|(w, a)| (perm(w).trim(), p(a)))
    .collect();
    let mut problems = Vec::new();
    for w in printed.keys().chain(combo.terms.keys()).collect::<std::collections::BTreeSet<_>>() {
        let (want, got) = (printed.get(w).cloned().unwrap_or_default(), combo.coefficient(w));
        if want != got {
            problems.push(format!("coefficient of s[{w}]: expected {want}, computed {got}"));
        }
    }
    let truncated = truncate(&combo, 3).unwrap();
    let golden = StructureTable::from_json_str(TABLE2_JSON).unwrap();
    let row: BTreeMap<Permutation, Poly> =
        golden.product(&perm("231"), &perm("231")).unwrap().into_iter().map(|(w, a)| (w.trim(), a)).collect();
    if truncated.terms != row {
        problems.push(format!("truncation {} differs from the row 231 * 231", truncated.render(3)));
    }
    let detail = if problems.is_empty() {
        format!("{} ; truncation matches the table row", combo.render(4))
    } else {
        format!("computed {}\n  {}", combo.render(4), problems.join("\n  "))
    };
    Outcome { passed: problems.is_empty(), detail }
}

fn criterion_4() -> Outcome {
    from_reports(&suite_presentation())
}

fn criterion_5() -> Outcome {
    let mut r = Report { suite: "oracle equivalence".into(), ..Report::default() };
    let y_zero = |q: &Poly| q.substitute_with(|v| (v.family() == Family::Y).then(Poly::zero));
    let d_zero = |q: &Poly| q.substitute_with(|v| (v.family() == Family::D).then(Poly::zero));
    let q_zero = |q: &Poly| q.substitute_with(|v| (v.family() == Family::Q).then(Poly::zero));
    let t_zero = |q: &Poly| q.substitute_with(|v| (v.family() == Family::T).then(Poly::zero));
    for w in Permutation::all(4) {
        r.checked += 1;
        let dd = univ_double_dd(&w, 3).unwrap();
        let sum = univ_double_sum(&w, 3).unwrap();
        let single = univ_single(&w, 3).unwrap();
        if *dd != d_to_y(&sum) {
            r.failures.push(format!("{w}: divided-difference and sum routes differ"));
        }
        if y_zero(&dd) != single || d_zero(&sum) != single {
            r.failures.push(format!("{w}: y = 0 limit differs from the single polynomial"));
        }
        let body = eq_quantum_schubert_in_window(&w, 4).unwrap().body_x.clone();
        let classical_q = q_zero(&body);
        if classical_q != double_schubert(&w, 4).unwrap() {
            r.failures.push(format!("{w}: q = 0 limit differs from the double polynomial"));
        }
        if t_zero(&classical_q) != classical_schubert(&w, 4).unwrap() {
            r.failures.push(format!("{w}: q = t = 0 limit differs from the classical polynomial"));
        }
    }
    from_reports(&[r])
}

fn criterion_6() -> Outcome {
    from_reports(&[verify_straightening(4)])
}

fn criterion_7() -> Outcome {
    from_reports(&suite_positivity(100).unwrap())
}

fn criterion_8() -> Outcome {
    from_reports(&suite_stability().unwrap())
}

fn criterion_9() -> Outcome {
    from_reports(&suite_associativity(50).unwrap())
}

const XTQ: &[Family] = &[Family::X, Family::T, Family::Q];
const TQ: &[Family] = &[Family::T, Family::Q];

fn poly_over(families: &'static [Family], max_index: u32) -> impl Strategy<Value = Poly> {
    let var = (0..families.len(), 1..=max_index).prop_map(move |(f, i)| Var::of(families[f], i));
    let mono = prop::collection::vec((var, 1u32..=2), 0..=3).prop_map(Monomial::from_pairs);
    prop::collection::vec((mono, -4i64..=4), 0..=4)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(m, c)| (m, c.into()))))
}

fn random_perm(n: usize) -> impl Strategy<Value = Permutation> {
    (0..n)
        .map(|i| 0..=(n - 1 - i) as u32)
        .collect::<Vec<_>>()
        .prop_map(|c| Permutation::from_code(&c).unwrap())
}

fn criterion_10() -> Outcome {
    const CASES: u32 = 1000;
    let mut failures = Vec::new();
    let mut runner = TestRunner::new(Config { failure_persistence: None, ..Config::with_cases(CASES) });
    let seen = std::cell::Cell::new(0u32);

    let triple = (poly_over(XTQ, 4), poly_over(XTQ, 4), poly_over(XTQ, 4));
    if let Err(e) = runner.run(&triple, |(a, b, c)| {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        seen.set(seen.get() + 1);
        Ok(())
    }) {
        failures.push(format!("ring axioms: {e}"));
    }

    let dd = |p: &Poly, i: u32| divided_difference(p, i, Family::X);
    if let Err(e) = runner.run(&(poly_over(XTQ, 5), 1u32..=3), |(p, i)| {
        prop_assert!(dd(&dd(&p, i), i).is_zero());
        prop_assert_eq!(dd(&dd(&dd(&p, i), i + 1), i), dd(&dd(&dd(&p, i + 1), i), i + 1));
        prop_assert_eq!(dd(&dd(&p, i), i + 2), dd(&dd(&p, i + 2), i));
        Ok(())
    }) {
        failures.push(format!("braid relations: {e}"));
    }

    let combo = (2u32..=5).prop_flat_map(|n| (Just(n), prop::collection::vec((random_perm(n as usize), poly_over(TQ, n - 1)), 0..=4)));
    if let Err(e) = runner.run(&combo, |(n, terms)| {
        let mut map: BTreeMap<Permutation, Poly> = BTreeMap::new();
        for (w, a) in terms {
            let slot = map.entry(w.trim()).or_default();
            *slot = &*slot + &a;
        }
        map.retain(|_, a| !a.is_zero());
        let c = SchubertCombo { window: n, shape: FlagShape::complete(n), terms: map };
        let back = expand_in_basis(&c.reconstruct().unwrap(), n).unwrap();
        prop_assert_eq!(back.terms, c.terms);
        Ok(())
    }) {
        failures.push(format!("basis round trip: {e}"));
    }

    let mut shapes: Vec<FlagShape> = (2..=4).map(FlagShape::complete).collect();
    for (bounds, n) in [(vec![2], 3), (vec![1], 3), (vec![2], 4), (vec![1, 3], 4), (vec![2], 5), (vec![1, 3], 5)] {
        shapes.push(FlagShape::new(bounds, n).unwrap());
    }
    let pick = prop::sample::select(shapes).prop_flat_map(|nn| {
        let reps = nn.shape_reps();
        (Just(nn), prop::sample::select(reps))
    });
    if let Err(e) = runner.run(&pick, |(nn, w)| {
        let sch = eq_quantum_schubert(&w, &nn).unwrap();
        prop_assert!(Grading::for_shape(&nn).is_homogeneous_of(&sch.body_x, w.length()));
        Ok(())
    }) {
        failures.push(format!("homogeneity: {e}"));
    }

    let passed = failures.is_empty();
    let detail = if passed { format!("4 properties x {CASES} cases ({} ring cases run)", seen.get()) } else { failures.join("\n  ") };
    Outcome { passed, detail }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Fl(3) Giambelli table", criterion_1),
        ("Fl(3) structure table", criterion_2),
        ("worked product 231 * 231 in window 5", criterion_3),
        ("presentation relations", criterion_4),
        ("universal oracle equivalence on S_4", criterion_5),
        ("straightening up to l = 4", criterion_6),
        ("Graham positivity", criterion_7),
        ("stability across windows", criterion_8),
        ("associativity", criterion_9),
        ("randomized property suites", criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {name} [{:.2?}] {}", k + 1, start.elapsed(), outcome.detail);
        if !outcome.passed {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
