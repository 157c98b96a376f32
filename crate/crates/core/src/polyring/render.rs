//! Text, JSON and LaTeX renderings of polynomials.

use std::fmt;

use serde_json::{Map, Number, Value};

use super::integer::Integer;
use super::monomial::Monomial;
use super::poly::Poly;
use super::var::{Family, Var};
use crate::error::{Error, Result};

/// Canonical text: terms in decreasing canonical order, explicit `*` and `^`,
/// e.g. `x1*x2 - x1*t1 - x2*t1 + t1^2 + q1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn integer_to_json(c: &Integer) -> Value {
    match c.to_i64() {
        Some(v) => Value::Number(Number::from(v)),
        None => serde_json::from_str::<Value>(&c.to_string()).expect("integer literal is valid JSON"),
    }
}

fn integer_from_json(v: &Value) -> Result<Integer> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<Integer>()
            .map_err(|_| Error::Parse(format!("coefficient `{n}` is not an integer"))),
        other => Err(Error::Parse(format!("expected integer coefficient, got {other}"))),
    }
}

impl Poly {
    /// `{"terms":[{"coeff":..,"monomial":{"x1":2,"t1":1}},..]}` with terms in
    /// canonical order and monomial keys in variable order.
    pub fn to_json(&self) -> Value {
        let terms = self
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut mono = Map::new();
                for &(v, e) in m.factors() {
                    mono.insert(v.to_string(), Value::Number(Number::from(e)));
                }
                let mut t = Map::new();
                t.insert("coeff".into(), integer_to_json(c));
                t.insert("monomial".into(), Value::Object(mono));
                Value::Object(t)
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("terms".into(), Value::Array(terms));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Poly> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `terms` array".into()))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let coeff = integer_from_json(t.get("coeff").ok_or_else(|| Error::Parse("missing `coeff`".into()))?)?;
            let mono = t
                .get("monomial")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::Parse("missing `monomial` object".into()))?;
            let mut pairs = Vec::with_capacity(mono.len());
            for (k, e) in mono {
                let e = e
                    .as_u64()
                    .filter(|&e| e <= u32::MAX as u64)
                    .ok_or_else(|| Error::Parse(format!("bad exponent for {k}")))?;
                pairs.push((Var::parse(k)?, e as u32));
            }
            out.push((Monomial::from_pairs(pairs), coeff));
        }
        Ok(Poly::from_terms(out))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("poly serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Poly> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Poly::from_json(&v)
    }

    /// LaTeX in the display style `x_{1} x_{2} + q_{1} - x_{1} t_{1}`.
    pub fn to_latex(&self) -> String {
        self.latex_with(false)
    }

    /// LaTeX where `c_i(j)` stands for the block generator `\sigma^{j}_{i}`.
    pub fn to_latex_sigma(&self) -> String {
        self.latex_with(true)
    }

    fn latex_with(&self, sigma: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            s.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            if m.is_one() {
                s.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                s.push_str(&mag.to_string());
                s.push(' ');
            }
            let factors: Vec<String> = m
                .factors()
                .iter()
                .map(|&(v, e)| {
                    let base = latex_var(v, sigma);
                    if e == 1 {
                        base
                    } else {
                        format!("{base}^{{{e}}}")
                    }
                })
                .collect();
            s.push_str(&factors.join(" "));
        }
        s
    }
}

fn latex_var(v: Var, sigma: bool) -> String {
    let (i, j) = (v.index(), v.second());
    match v.family() {
        Family::C if sigma => format!("\\sigma^{{{j}}}_{{{i}}}"),
        Family::C => format!("c_{{{i}}}({j})"),
        Family::D => format!("d_{{{i}}}({j})"),
        Family::G => format!("g_{{{i}}}[{j}]"),
        Family::H => format!("h_{{{i}}}[{j}]"),
        Family::Alpha => format!("\\alpha_{{{i}}}"),
        f => format!("{}_{{{i}}}", f.prefix()),
    }
}
