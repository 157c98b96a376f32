use std::fmt;
use std::str::FromStr;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A flag shape `0 < n_1 < ... < n_m < n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagShape {
    bounds: Vec<u32>,
    n: u32,
}

impl FlagShape {
    pub fn new(bounds: Vec<u32>, n: u32) -> Result<FlagShape> {
        if n == 0 {
            return Err(Error::InvalidShape("ambient dimension must be positive".into()));
        }
        let increasing = bounds.windows(2).all(|w| w[0] < w[1]);
        let inside = bounds.iter().all(|&b| b > 0 && b < n);
        if !increasing || !inside {
            return Err(Error::InvalidShape(format!("{bounds:?} is not strictly increasing inside (0, {n})")));
        }
        Ok(FlagShape { bounds, n })
    }

    /// `(1, 2, ..., n - 1)`.
    pub fn complete(n: u32) -> FlagShape {
        FlagShape { bounds: (1..n).collect(), n }
    }

    /// The Grassmannian shape `(k)` in `C^n`.
    pub fn grassmannian(k: u32, n: u32) -> Result<FlagShape> {
        FlagShape::new(vec![k], n)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of proper subspaces `m`.
    pub fn m(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// `[0, n_1, ..., n_m, n]`.
    pub fn bounds_with_ends(&self) -> Vec<u32> {
        let mut b = Vec::with_capacity(self.bounds.len() + 2);
        b.push(0);
        b.extend_from_slice(&self.bounds);
        b.push(self.n);
        b
    }

    /// `n_i` with `n_0 = 0` and `n_{m+1} = n`.
    pub fn bound(&self, i: usize) -> u32 {
        match i {
            0 => 0,
            i if i <= self.bounds.len() => self.bounds[i - 1],
            _ => self.n,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.bounds.len() + 1 == self.n as usize
    }

    pub fn contains_bound(&self, k: u32) -> bool {
        self.bounds.binary_search(&k).is_ok()
    }

    /// Position blocks `[n_{i-1} + 1, n_i]` as 1-based inclusive ranges.
    pub fn blocks(&self) -> Vec<(u32, u32)> {
        self.bounds_with_ends().windows(2).map(|w| (w[0] + 1, w[1])).collect()
    }

    /// The same shape with `n` added as a bound inside `C^{n'}`.
    pub fn with_appended_block(&self, n_prime: u32) -> Result<FlagShape> {
        let mut b = self.bounds.clone();
        b.push(self.n);
        FlagShape::new(b, n_prime)
    }

    /// Whether `w` is increasing inside every block.
    pub fn contains(&self, w: &Permutation) -> bool {
        if w.support_window() > self.n as usize {
            return false;
        }
        let w = w.embed(self.n as usize);
        (1..self.n as usize).all(|i| self.contains_bound(i as u32) || w.apply(i) < w.apply(i + 1))
    }

    pub fn check(&self, w: &Permutation) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInShape { perm: w.to_string(), shape: self.to_string() })
        }
    }

    /// Minimal-length coset representatives, ordered by length then one-line
    /// notation.
    pub fn shape_reps(&self) -> Vec<Permutation> {
        let n = self.n as usize;
        let sizes: Vec<usize> = self.blocks().iter().map(|&(a, b)| (b + 1 - a) as usize).collect();
        let mut out = Vec::new();
        let mut assigned = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fill_blocks(&sizes, 0, 0, &mut assigned, &mut used, &mut out);
        let mut perms: Vec<Permutation> =
            out.into_iter().map(|v| Permutation::new(v).expect("block filling is a bijection")).collect();
        perms.sort();
        perms
    }

    /// Sorts each block of `w` ascending.
    pub fn min_coset_rep(&self, w: &Permutation) -> Permutation {
        let mut v = w.embed(self.n as usize).values().to_vec();
        for (a, b) in self.blocks() {
            v[a as usize - 1..b as usize].sort_unstable();
        }
        Permutation::new(v).expect("sorting blocks preserves bijectivity")
    }

    /// The longest element of `S^nn`: each block receives the largest
    /// values not yet used, in increasing order.
    pub fn longest_element(&self) -> Permutation {
        let n = self.n;
        let mut v = Vec::with_capacity(n as usize);
        let mut top = n;
        for (a, b) in self.blocks() {
            let size = b + 1 - a;
            v.extend(top + 1 - size..=top);
            top -= size;
        }
        Permutation::new(v).expect("block layout is a bijection")
    }

    /// `w^∨ = min_coset_rep(w_o ∘ w)`.
    pub fn dual(&self, w: &Permutation) -> Result<Permutation> {
        self.check(w)?;
        let w0 = Permutation::longest(self.n as usize);
        Ok(self.min_coset_rep(&w0.compose(w)))
    }

    /// `α_{k,l} = s_{n_l - k + 1} ∘ ... ∘ s_{n_l}`.
    pub fn cyclic_alpha(&self, k: u32, l: usize) -> Result<Permutation> {
        let nl = self.checked_bound(l)?;
        if k == 0 || k > nl {
            return Err(Error::OutOfRange(format!("alpha_({k},{l}) needs 1 <= k <= {nl}")));
        }
        self.product_of_simples((nl + 1 - k..=nl).collect())
    }

    /// `β_{k,l} = s_{n_l + k - 1} ∘ ... ∘ s_{n_l}`.
    pub fn cyclic_beta(&self, k: u32, l: usize) -> Result<Permutation> {
        let nl = self.checked_bound(l)?;
        if k == 0 || k > self.n - nl {
            return Err(Error::OutOfRange(format!("beta_({k},{l}) needs 1 <= k <= {}", self.n - nl)));
        }
        self.product_of_simples((nl..nl + k).rev().collect())
    }

    fn checked_bound(&self, l: usize) -> Result<u32> {
        if l == 0 || l > self.m() {
            return Err(Error::OutOfRange(format!("block index {l} outside 1..={}", self.m())));
        }
        Ok(self.bound(l))
    }

    fn product_of_simples(&self, indices: Vec<u32>) -> Result<Permutation> {
        let n = self.n as usize;
        let mut acc = Permutation::identity(n);
        for i in indices {
            acc = acc.compose(&Permutation::simple(i as usize, n)?);
        }
        Ok(acc)
    }
}

fn fill_blocks(
    sizes: &[usize],
    block: usize,
    min_next: u32,
    assigned: &mut Vec<u32>,
    used: &mut [bool],
    out: &mut Vec<Vec<u32>>,
) {
    let n = used.len() - 1;
    if block == sizes.len() {
        out.push(assigned.clone());
        return;
    }
    let start = assigned.len();
    let filled = start
        - sizes[..block].iter().sum::<usize>();
    if filled == sizes[block] {
        fill_blocks(sizes, block + 1, 0, assigned, used, out);
        return;
    }
    for v in (min_next + 1) as usize..=n {
        if used[v] {
            continue;
        }
        used[v] = true;
        assigned.push(v as u32);
        fill_blocks(sizes, block, v as u32, assigned, used, out);
        assigned.pop();
        used[v] = false;
    }
}

impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.bounds.iter().map(u32::to_string).collect();
        write!(f, "{};{}", parts.join(","), self.n)
    }
}

impl fmt::Debug for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FlagShape({self})")
    }
}

impl FromStr for FlagShape {
    type Err = Error;

    /// `"1,3;5"` is `nn = (1, 3)` in `C^5`.
    fn from_str(s: &str) -> Result<FlagShape> {
        let bad = || Error::InvalidShape(format!("cannot parse `{s}`, expected e.g. `1,3;5`"));
        let (b, n) = s.trim().split_once(';').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let bounds = b
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<Vec<u32>>>()?;
        FlagShape::new(bounds, n)
    }
}
