use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation with its Lehmer code and
/// length precomputed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<u32>,
    code: Vec<u32>,
    length: u32,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Permutation> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            let ok = v >= 1 && (v as usize) <= n && !seen[v as usize - 1];
            if !ok {
                return Err(Error::InvalidPermutation(format!("{values:?} is not a bijection on 1..{n}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation::from_valid(values))
    }

    fn from_valid(values: Vec<u32>) -> Permutation {
        let n = values.len();
        let code: Vec<u32> = (0..n)
            .map(|i| values[i + 1..].iter().filter(|&&v| v < values[i]).count() as u32)
            .collect();
        let length = code.iter().sum();
        Permutation { values, code, length }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation::from_valid((1..=n as u32).collect())
    }

    /// `w_o(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Permutation {
        Permutation::from_valid((1..=n as u32).rev().collect())
    }

    /// The adjacent transposition `s_i` in window `n`.
    pub fn simple(i: usize, n: usize) -> Result<Permutation> {
        if i == 0 || i >= n {
            return Err(Error::OutOfRange(format!("s_{i} in S_{n}")));
        }
        let mut v: Vec<u32> = (1..=n as u32).collect();
        v.swap(i - 1, i);
        Ok(Permutation::from_valid(v))
    }

    /// The permutation whose Lehmer code is `code`; the window is the code
    /// length, which must satisfy `code[i] <= n - 1 - i`.
    pub fn from_code(code: &[u32]) -> Result<Permutation> {
        let n = code.len();
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        let mut values = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c as usize > n - 1 - i {
                return Err(Error::InvalidPermutation(format!("code {code:?} exceeds the staircase")));
            }
            values.push(remaining.remove(c as usize));
        }
        Ok(Permutation::from_valid(values))
    }

    pub fn window(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `w(i)` for `1 <= i`; points beyond the window are fixed.
    pub fn apply(&self, i: usize) -> u32 {
        self.values.get(i.wrapping_sub(1)).copied().unwrap_or(i as u32)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// `code_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> &[u32] {
        &self.code
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Appends fixed points up to window `n` (no-op if already at least `n`).
    pub fn embed(&self, n: usize) -> Permutation {
        if n <= self.window() {
            return self.clone();
        }
        let mut values = self.values.clone();
        values.extend(self.window() as u32 + 1..=n as u32);
        let mut code = self.code.clone();
        code.resize(n, 0);
        Permutation { values, code, length: self.length }
    }

    /// Drops trailing fixed points, keeping a window of at least one.
    pub fn trim(&self) -> Permutation {
        let mut n = self.window();
        while n > 1 && self.values[n - 1] == n as u32 {
            n -= 1;
        }
        Permutation::from_valid(self.values[..n].to_vec())
    }

    /// Smallest window containing every moved point.
    pub fn support_window(&self) -> usize {
        self.trim().window()
    }

    /// Functional composition: `(v ∘ w)(i) = v(w(i))`.
    pub fn compose(&self, w: &Permutation) -> Permutation {
        let n = self.window().max(w.window());
        Permutation::from_valid((1..=n).map(|i| self.apply(w.apply(i) as usize)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.window()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation::from_valid(inv)
    }

    /// `r_w(p, q) = #{i <= p : w(i) <= q}`.
    pub fn rank_fn(&self, p: usize, q: usize) -> usize {
        self.values.iter().take(p).filter(|&&v| v as usize <= q).count()
    }

    /// Bruhat order via rank functions; windows are aligned first.
    pub fn bruhat_leq(&self, w: &Permutation) -> bool {
        let n = self.window().max(w.window());
        let (v, w) = (self.embed(n), w.embed(n));
        if v.length > w.length {
            return false;
        }
        // rows of the rank matrices built incrementally
        let mut rv = vec![0usize; n + 1];
        let mut rw = vec![0usize; n + 1];
        for p in 0..n {
            for q in v.values[p] as usize..=n {
                rv[q] += 1;
            }
            for q in w.values[p] as usize..=n {
                rw[q] += 1;
            }
            if (1..=n).any(|q| rv[q] < rw[q]) {
                return false;
            }
        }
        true
    }

    /// Indices `i_1, ..., i_k` with `w = w_o s_{i_1} ... s_{i_k}` and each
    /// prefix product one shorter than the previous.
    pub fn descent_chain(&self, n: usize) -> Vec<usize> {
        let w = self.embed(n);
        // reduced word of w_o ∘ w, read off by stripping right descents
        let mut u = Permutation::longest(n).compose(&w);
        let mut word = Vec::with_capacity(u.length as usize);
        while let Some(i) = (1..n).find(|&i| u.values[i - 1] > u.values[i]) {
            word.push(i);
            u.values.swap(i - 1, i);
        }
        word.reverse();
        word
    }

    /// `w ∘ s_i`: swaps positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut v = self.embed(i + 1).values;
        v.swap(i - 1, i);
        Permutation::from_valid(v)
    }

    /// `s_i ∘ w`: swaps the values `i` and `i + 1`.
    pub fn swap_values(&self, i: usize) -> Permutation {
        let v = self
            .embed(i + 1)
            .values
            .iter()
            .map(|&x| if x as usize == i { x + 1 } else if x as usize == i + 1 { x - 1 } else { x })
            .collect();
        Permutation::from_valid(v)
    }

    /// Every permutation of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation::from_valid(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Compact form for windows up to 9 (`"231"`), comma-separated beyond.
    pub fn to_compact(&self) -> String {
        self.to_string()
    }
}

impl Ord for Permutation {
    /// Length first, then window, then one-line notation.
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.window().cmp(&other.window()))
            .then_with(|| self.values.cmp(&other.values))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"231"`, `"2 3 1"` and `"2,3,1"`.
    fn from_str(s: &str) -> Result<Permutation> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(format!("cannot parse `{s}`"));
        let values: Vec<u32> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths_and_codes() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(p("321").length(), 3);
        assert_eq!(p("312").length(), 2);
        assert_eq!(p("312").lehmer_code(), &[2, 0, 0]);
        assert_eq!(p("321").lehmer_code(), &[2, 1, 0]);
    }

    #[test]
    fn composition_and_inverse() {
        let w = p("312");
        assert_eq!(w.inverse(), p("231"));
        assert_eq!(w.compose(&Permutation::identity(3)), w);
        assert!(w.compose(&w.inverse()).is_identity());
        // s_2 ∘ s_1 = 312 under functional composition
        let s1 = Permutation::simple(1, 3).unwrap();
        let s2 = Permutation::simple(2, 3).unwrap();
        assert_eq!(s2.compose(&s1), p("312"));
    }

    #[test]
    fn rank_function() {
        assert_eq!(p("321").rank_fn(1, 1), 0);
        for w in Permutation::all(3) {
            assert_eq!(w.rank_fn(3, 3), 3);
        }
        let id = Permutation::identity(4);
        for a in 1..=4 {
            for b in 1..=4 {
                assert_eq!(id.rank_fn(a, b), a.min(b));
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        assert!(!p("321").bruhat_leq(&p("312")));
        assert!(p("312").bruhat_leq(&p("321")));
        assert!(!p("231").bruhat_leq(&p("312")));
        for w in Permutation::all(4) {
            assert!(Permutation::identity(4).bruhat_leq(&w));
        }
    }

    #[test]
    fn descent_chain_walks_down() {
        assert!(Permutation::longest(3).descent_chain(3).is_empty());
        assert_eq!(Permutation::identity(3).descent_chain(3).len(), 3);
        for w in Permutation::all(4) {
            let chain = w.descent_chain(4);
            let mut u = Permutation::longest(4);
            for &i in &chain {
                let next = u.swap_positions(i);
                assert_eq!(next.length() + 1, u.length());
                u = next;
            }
            assert_eq!(u, w);
        }
    }

    #[test]
    fn code_round_trip() {
        for w in Permutation::all(5) {
            assert_eq!(Permutation::from_code(w.lehmer_code()).unwrap(), w);
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("2 3 1"), p("231"));
        assert_eq!(p("2,3,1"), p("231"));
        let big = p("11,2,3,4,5,6,7,8,9,10,1");
        assert_eq!(big.to_string(), "11,2,3,4,5,6,7,8,9,10,1");
        assert!("221".parse::<Permutation>().is_err());
        assert!("24".parse::<Permutation>().is_err());
    }

    #[test]
    fn embed_and_trim() {
        let w = p("213");
        assert_eq!(w.embed(5).to_string(), "21345");
        assert_eq!(w.embed(5).length(), 1);
        assert_eq!(w.embed(5).trim(), p("21"));
        assert_eq!(Permutation::identity(4).trim(), p("1"));
    }
}
