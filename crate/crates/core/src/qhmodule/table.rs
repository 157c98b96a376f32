use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{qproduct, qproduct_reduced, render_terms};
use crate::error::{Error, Result};
use crate::permgroup::Permutation;
use crate::polyring::{Grading, Monomial, Poly, Var};

/// `(w, d) -> c_{u,v}^{w,d}(t)`.
pub type TableEntry = BTreeMap<(Permutation, Vec<u32>), Poly>;

/// Equivariant quantum structure constants of `Fl(n)` for unordered pairs
/// `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTable {
    pub n: u32,
    pub entries: BTreeMap<(Permutation, Permutation), TableEntry>,
}

fn pair_key(u: &Permutation, v: &Permutation, n: u32) -> (Permutation, Permutation) {
    let (u, v) = (u.embed(n as usize), v.embed(n as usize));
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

fn q_monomial(d: &[u32]) -> Monomial {
    Monomial::from_pairs(d.iter().enumerate().filter(|&(_, &e)| e > 0).map(|(i, &e)| (Var::q(i as u32 + 1), e)))
}

/// Terms ordered by decreasing length of `w`, then one-line notation, then `d`.
fn ordered_terms(entry: &TableEntry) -> Vec<(&Permutation, &Vec<u32>, &Poly)> {
    let mut terms: Vec<_> = entry.iter().map(|((w, d), p)| (w, d, p)).collect();
    terms.sort_by(|a, b| {
        b.0.length().cmp(&a.0.length()).then_with(|| a.0.values().cmp(b.0.values())).then_with(|| a.1.cmp(b.1))
    });
    terms
}

impl StructureTable {
    pub fn get(&self, u: &Permutation, v: &Permutation) -> Option<&TableEntry> {
        self.entries.get(&pair_key(u, v, self.n))
    }

    /// `σ_u ∘ σ_v = sum_w a_w σ_w` with `a_w = sum_d q^d c_{u,v}^{w,d}`.
    pub fn product(&self, u: &Permutation, v: &Permutation) -> Option<BTreeMap<Permutation, Poly>> {
        let entry = self.get(u, v)?;
        let mut out: BTreeMap<Permutation, Poly> = BTreeMap::new();
        for ((w, d), c) in entry {
            let slot = out.entry(w.clone()).or_default();
            *slot = &*slot + &c.mul_term(&q_monomial(d), &1.into());
        }
        Some(out)
    }

    /// Symmetric-storage, identity-row and degree invariants; returns a
    /// description of every failure.
    pub fn invariant_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let grading = Grading::complete();
        let id = Permutation::identity(self.n as usize);
        for ((u, v), entry) in &self.entries {
            for ((w, d), c) in entry {
                let qdeg: u32 = d.iter().sum::<u32>() * 2;
                let expected = (u.length() + v.length()).checked_sub(w.length() + qdeg);
                let ok = match expected {
                    Some(deg) => grading.is_homogeneous_of(c, deg),
                    None => c.is_zero(),
                };
                if !ok {
                    out.push(format!("{u} * {v}: coefficient of q^{d:?} s[{w}] is not of the expected degree"));
                }
            }
            if *u == id {
                let mut expected = TableEntry::new();
                expected.insert((v.clone(), vec![0; self.n as usize - 1]), Poly::one());
                if *entry != expected {
                    out.push(format!("identity row {u} * {v} is not s[{v}]"));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|((u, v), entry)| {
                let terms: Vec<Value> = ordered_terms(entry)
                    .into_iter()
                    .map(|(w, d, p)| json!({"w": w.to_string(), "d": d, "t_poly": p.to_string()}))
                    .collect();
                json!({"u": u.to_string(), "v": v.to_string(), "terms": terms})
            })
            .collect();
        json!({"n": self.n, "entries": entries})
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("table JSON serializes")
    }

    /// Reads the format of [`StructureTable::to_json`]; unknown top-level
    /// fields such as a caption are ignored.
    pub fn from_json(value: &Value) -> Result<StructureTable> {
        let bad = |what: &str| Error::Parse(format!("structure table: {what}"));
        let n = value.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing `n`"))? as u32;
        let mut entries = BTreeMap::new();
        for e in value.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing `entries`"))? {
            let perm = |key: &str| -> Result<Permutation> {
                e.get(key).and_then(Value::as_str).ok_or_else(|| bad(&format!("missing `{key}`")))?.parse()
            };
            let (u, v) = (perm("u")?, perm("v")?);
            let mut entry = TableEntry::new();
            for t in e.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing `terms`"))? {
                let w: Permutation =
                    t.get("w").and_then(Value::as_str).ok_or_else(|| bad("missing `w`"))?.parse()?;
                let d: Vec<u32> = t
                    .get("d")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("missing `d`"))?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("`d` must hold integers")))
                    .collect::<Result<_>>()?;
                let p: Poly = t.get("t_poly").and_then(Value::as_str).ok_or_else(|| bad("missing `t_poly`"))?.parse()?;
                if d.len() + 1 != n as usize {
                    return Err(bad("`d` must have length n - 1"));
                }
                if !p.is_zero() {
                    entry.insert((w.embed(n as usize), d), p);
                }
            }
            entries.insert(pair_key(&u, &v, n), entry);
        }
        Ok(StructureTable { n, entries })
    }

    pub fn from_json_str(s: &str) -> Result<StructureTable> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        StructureTable::from_json(&v)
    }

    /// One line per pair: `213 213: s[312] + (-t1 + t2)*s[213] + q1*s[123]`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.entries.keys() {
            let product = self.product(u, v).unwrap_or_default();
            writeln!(s, "{u} {v}: {}", render_terms(product)).expect("writing to a String");
        }
        s
    }

    /// A three-column `array` with rows `u & v & σ_u ∘ σ_v`.
    pub fn to_latex(&self) -> String {
        let mut s = String::from("\\begin{array}{|l|l|l|} \\hline\n u & v & \\sigma_u \\circ \\sigma_v \\\\ \\hline\\hline\n");
        for (u, v) in self.entries.keys() {
            let product = self.product(u, v).unwrap_or_default();
            let mut terms: Vec<(Permutation, Poly)> = product.into_iter().collect();
            terms.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then_with(|| a.0.values().cmp(b.0.values())));
            let body: Vec<String> = terms
                .iter()
                .map(|(w, a)| {
                    let sigma = format!("\\sigma_{{{w}}}");
                    if a.is_one() {
                        sigma
                    } else if a.len() == 1 {
                        format!("{}\\,{sigma}", a.to_latex())
                    } else {
                        format!("\\left({}\\right)\\,{sigma}", a.to_latex())
                    }
                })
                .collect();
            let body = if body.is_empty() { "0".to_string() } else { body.join(" + ") };
            writeln!(s, "{u} & {v} & {body} \\\\ \\hline").expect("writing to a String");
        }
        s.push_str("\\end{array}\n");
        s
    }
}

/// How products are expanded: in the window `2n - 1` followed by
/// truncation, or through the staircase normal form modulo the relations
/// of `Fl(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductRoute {
    Window,
    Reduced,
}

impl ProductRoute {
    /// The window route up to `n = 4`, the reduced route beyond.
    pub fn default_for(n: u32) -> ProductRoute {
        if n <= 4 {
            ProductRoute::Window
        } else {
            ProductRoute::Reduced
        }
    }

    pub fn product(self, u: &Permutation, v: &Permutation, n: u32) -> Result<TableEntry> {
        match self {
            ProductRoute::Window => qproduct(u, v, n),
            ProductRoute::Reduced => qproduct_reduced(u, v, n),
        }
    }
}

/// Every unordered pair `u <= v` in `S_n`, computed in parallel and merged
/// in pair order.
pub fn multiplication_table(n: u32) -> Result<StructureTable> {
    multiplication_table_with(n, ProductRoute::default_for(n))
}

pub fn multiplication_table_with(n: u32, route: ProductRoute) -> Result<StructureTable> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("multiplication table needs n >= 2, got {n}")));
    }
    let perms = Permutation::all(n as usize);
    let mut pairs: Vec<(Permutation, Permutation)> = Vec::new();
    for u in &perms {
        for v in &perms {
            if u <= v {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    table_for_pairs(n, &pairs, route)
}

/// A table holding only the given pairs.
pub fn table_for_pairs(n: u32, pairs: &[(Permutation, Permutation)], route: ProductRoute) -> Result<StructureTable> {
    let mut pairs: Vec<(Permutation, Permutation)> = pairs.iter().map(|(u, v)| pair_key(u, v, n)).collect();
    pairs.sort();
    pairs.dedup();
    // cheap products first so shared caches fill bottom-up
    pairs.sort_by_key(|(u, v)| u.length() + v.length());
    let computed: Vec<Result<((Permutation, Permutation), TableEntry)>> =
        pairs.into_par_iter().map(|(u, v)| Ok(((u.clone(), v.clone()), route.product(&u, &v, n)?))).collect();
    let entries = computed.into_iter().collect::<Result<BTreeMap<_, _>>>()?;
    Ok(StructureTable { n, entries })
}
