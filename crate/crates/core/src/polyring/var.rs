use std::fmt;

use crate::error::{Error, Result};

/// Variable families, in canonical order.
///
/// `X`, `T`, `Y`, `Q` and `Alpha` carry one index; `C`, `D`, `G` and `H`
/// carry two. The derived order is the family order used by the monomial
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X = 0,
    T = 1,
    Y = 2,
    Q = 3,
    C = 4,
    D = 5,
    G = 6,
    H = 7,
    Alpha = 8,
}

impl Family {
    const ALL: [Family; 9] = [
        Family::X,
        Family::T,
        Family::Y,
        Family::Q,
        Family::C,
        Family::D,
        Family::G,
        Family::H,
        Family::Alpha,
    ];

    pub fn is_double_indexed(self) -> bool {
        matches!(self, Family::C | Family::D | Family::G | Family::H)
    }

    /// Prefix used by the text and JSON renderings.
    pub fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::T => "t",
            Family::Y => "y",
            Family::Q => "q",
            Family::C => "c",
            Family::D => "d",
            Family::G => "g",
            Family::H => "h",
            Family::Alpha => "a",
        }
    }

    fn from_code(code: u32) -> Family {
        Family::ALL[code as usize]
    }
}

/// Largest index accepted in either index slot.
pub const MAX_INDEX: u32 = 4095;

/// A typed polynomial variable, packed into a single word so that the
/// derived integer order coincides with (family, first index, second index).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    /// Single-indexed variable such as `x_3`. Indices start at 1.
    pub fn single(family: Family, index: u32) -> Result<Var> {
        if family.is_double_indexed() {
            return Err(Error::InvalidVariable(format!(
                "{family:?} takes two indices"
            )));
        }
        if index == 0 || index > MAX_INDEX {
            return Err(Error::InvalidVariable(format!(
                "{}{index}: index out of range 1..={MAX_INDEX}",
                family.prefix()
            )));
        }
        Ok(Var(((family as u32) << 24) | (index << 12)))
    }

    /// Double-indexed variable: `c_k(l)`, `d_k(l)`, `g_i[j]`, `h_i[j]`.
    ///
    /// For `C` and `D` the first index is the degree `k >= 1`; for `G` and
    /// `H` the first index is the starting vertex `i >= 1` and the second the
    /// path length `j >= 0`.
    pub fn double(family: Family, a: u32, b: u32) -> Result<Var> {
        if !family.is_double_indexed() {
            return Err(Error::InvalidVariable(format!(
                "{family:?} takes one index"
            )));
        }
        if a == 0 || a > MAX_INDEX || b > MAX_INDEX {
            return Err(Error::InvalidVariable(format!(
                "{}{a}_{b}: index out of range",
                family.prefix()
            )));
        }
        Ok(Var(((family as u32) << 24) | (a << 12) | b))
    }

    pub fn x(i: u32) -> Var {
        Var::single(Family::X, i).expect("x index in range")
    }

    pub fn t(i: u32) -> Var {
        Var::single(Family::T, i).expect("t index in range")
    }

    pub fn y(i: u32) -> Var {
        Var::single(Family::Y, i).expect("y index in range")
    }

    pub fn q(i: u32) -> Var {
        Var::single(Family::Q, i).expect("q index in range")
    }

    pub fn alpha(i: u32) -> Var {
        Var::single(Family::Alpha, i).expect("alpha index in range")
    }

    /// `c_k(l)`.
    pub fn c(k: u32, l: u32) -> Var {
        Var::double(Family::C, k, l).expect("c index in range")
    }

    /// `d_k(l)`.
    pub fn d(k: u32, l: u32) -> Var {
        Var::double(Family::D, k, l).expect("d index in range")
    }

    /// `g_i[j]`.
    pub fn g(i: u32, j: u32) -> Var {
        Var::double(Family::G, i, j).expect("g index in range")
    }

    /// `h_i[j]`.
    pub fn h(i: u32, j: u32) -> Var {
        Var::double(Family::H, i, j).expect("h index in range")
    }

    /// Single-indexed variable of the given family, panicking on bad input.
    pub fn of(family: Family, index: u32) -> Var {
        Var::single(family, index).expect("index in range")
    }

    pub fn family(self) -> Family {
        Family::from_code(self.0 >> 24)
    }

    /// First index (the only index for single-indexed families).
    pub fn index(self) -> u32 {
        (self.0 >> 12) & 0xfff
    }

    /// Second index; zero for single-indexed families.
    pub fn second(self) -> u32 {
        self.0 & 0xfff
    }

    /// Parses the rendering produced by [`fmt::Display`]: `x3`, `c2_4`, `a1`.
    pub fn parse(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("invalid variable `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let family = Family::ALL
            .iter()
            .copied()
            .find(|f| f.prefix().starts_with(head))
            .ok_or_else(bad)?;
        let rest = chars.as_str();
        if family.is_double_indexed() {
            let (a, b) = rest.split_once('_').ok_or_else(bad)?;
            Var::double(family, a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
        } else {
            Var::single(family, rest.parse().map_err(|_| bad())?)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = self.family();
        if fam.is_double_indexed() {
            write!(f, "{}{}_{}", fam.prefix(), self.index(), self.second())
        } else {
            write!(f, "{}{}", fam.prefix(), self.index())
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
