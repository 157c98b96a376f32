use std::fmt;
use std::str::FromStr;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{
    compare_giambelli, compare_tables, graham_check, multiplication_table, table_for_pairs, verify_associativity,
    verify_presentation, verify_straightening, GrahamReport, ProductRoute, Report, StructureTable,
};
use crate::error::{Error, Result};
use crate::golden::{TABLE1_JSON, TABLE2_JSON};
use crate::permgroup::{FlagShape, Permutation};
use crate::quantize::eq_quantum_schubert_in_window;

/// Seed for the sampled pairs and triples, so every run checks the same
/// products.
pub const SAMPLE_SEED: u64 = 20_260_101;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Presentation,
    Straightening,
    Positivity,
    Associativity,
    Stability,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Tables,
        Suite::Presentation,
        Suite::Straightening,
        Suite::Positivity,
        Suite::Associativity,
        Suite::Stability,
    ];

    pub fn run(self) -> Result<Vec<Report>> {
        match self {
            Suite::Tables => suite_tables(),
            Suite::Presentation => Ok(suite_presentation()),
            Suite::Straightening => Ok(vec![verify_straightening(4)]),
            Suite::Positivity => suite_positivity(100),
            Suite::Associativity => suite_associativity(50),
            Suite::Stability => suite_stability(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Tables => "tables",
            Suite::Presentation => "presentation",
            Suite::Straightening => "straightening",
            Suite::Positivity => "positivity",
            Suite::Associativity => "associativity",
            Suite::Stability => "stability",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

impl From<GrahamReport> for Report {
    fn from(g: GrahamReport) -> Report {
        let failures = g
            .violations
            .iter()
            .map(|v| format!("{} * {} -> q^{:?} s[{}]: {} on {}", v.u, v.v, v.d, v.w, v.coefficient, v.monomial))
            .collect();
        Report { suite: "positivity".into(), checked: g.checked, failures }
    }
}

/// The golden Giambelli table and the golden `Fl(3)` product table.
pub fn suite_tables() -> Result<Vec<Report>> {
    let giambelli: serde_json::Value = serde_json::from_str(TABLE1_JSON).map_err(|e| Error::Parse(e.to_string()))?;
    let golden = StructureTable::from_json_str(TABLE2_JSON)?;
    let computed = multiplication_table(3)?;
    Ok(vec![compare_giambelli(&giambelli), compare_tables(&computed, &golden)])
}

/// `Fl(2)`, `Fl(3)`, `Fl(4)` and the partial flag `(2) ⊂ C^3`.
pub fn suite_presentation() -> Vec<Report> {
    let partial = FlagShape::new(vec![2], 3).expect("(2) in C^3 is a valid shape");
    let shapes = [FlagShape::complete(2), FlagShape::complete(3), FlagShape::complete(4), partial];
    shapes.iter().map(verify_presentation).collect()
}

/// `samples` pairs `(u, v)` drawn uniformly from `S_n x S_n`.
pub fn sample_pairs(n: usize, samples: usize, seed: u64) -> Vec<(Permutation, Permutation)> {
    let perms = Permutation::all(n);
    let mut rng = StdRng::seed_from_u64(seed);
    (0..samples)
        .map(|_| (perms[rng.gen_range(0..perms.len())].clone(), perms[rng.gen_range(0..perms.len())].clone()))
        .collect()
}

/// `samples` triples drawn uniformly from `S_n^3`.
pub fn sample_triples(n: usize, samples: usize, seed: u64) -> Vec<(Permutation, Permutation, Permutation)> {
    let perms = Permutation::all(n);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pick = || perms[rng.gen_range(0..perms.len())].clone();
    (0..samples).map(|_| (pick(), pick(), pick())).collect()
}

/// Every triple in `S_n^3`.
pub fn all_triples(n: usize) -> Vec<(Permutation, Permutation, Permutation)> {
    let perms = Permutation::all(n);
    let mut out = Vec::with_capacity(perms.len().pow(3));
    for u in &perms {
        for v in &perms {
            for w in &perms {
                out.push((u.clone(), v.clone(), w.clone()));
            }
        }
    }
    out
}

/// Full tables for `n = 3, 4` and `s5_samples` sampled products in `S_5`.
pub fn suite_positivity(s5_samples: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in [3, 4] {
        let mut r: Report = graham_check(&multiplication_table(n)?).into();
        r.suite = format!("positivity n={n}");
        out.push(r);
    }
    let pairs = sample_pairs(5, s5_samples, SAMPLE_SEED);
    let mut r: Report = graham_check(&table_for_pairs(5, &pairs, ProductRoute::Reduced)?).into();
    r.suite = format!("positivity n=5 ({s5_samples} sampled pairs)");
    out.push(r);
    Ok(out)
}

/// Every triple in `S_3` and `s4_samples` sampled triples in `S_4`.
pub fn suite_associativity(s4_samples: usize) -> Result<Vec<Report>> {
    let t3 = multiplication_table(3)?;
    let t4 = multiplication_table(4)?;
    Ok(vec![
        verify_associativity(&t3, &all_triples(3)),
        verify_associativity(&t4, &sample_triples(4, s4_samples, SAMPLE_SEED)),
    ])
}

/// `Sch^q_w` for `w` in `S_3` is the same polynomial in the windows 3, 4, 5.
pub fn suite_stability() -> Result<Vec<Report>> {
    let mut r = Report { suite: "stability".into(), ..Report::default() };
    for w in Permutation::all(3) {
        r.checked += 1;
        let base = eq_quantum_schubert_in_window(&w, 3)?.body_x.clone();
        for n in [4, 5] {
            let wider = eq_quantum_schubert_in_window(&w, n)?.body_x.clone();
            if wider != base {
                r.failures.push(format!("{w}: window {n} gives {wider}, window 3 gives {base}"));
            }
        }
    }
    Ok(vec![r])
}
