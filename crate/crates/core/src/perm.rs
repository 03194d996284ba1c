//! Permutations of `{1..n}` and the block calculus of the associativity operad.
//!
//! Internally a [`Perm`] stores its one-line form 0-indexed; every parser,
//! printer and error message speaks 1-indexed. Composition is
//! `(σ·τ)(i) = σ(τ(i))`, which makes [`to_matrix`] a monoid homomorphism
//! (`M_{στ} = M_σ M_τ`).

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// Builds from 0-indexed images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                let shown: Vec<usize> = images.iter().map(|x| x + 1).collect();
                return Err(Error::InvalidPermutation(format!("{shown:?} is not a bijection of 1..={n}")));
            }
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds from the 1-indexed one-line form `[σ(1), …, σ(n)]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Perm> {
        if one_line.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{one_line:?} contains 0; one-line form is 1-indexed")));
        }
        Perm::from_images(one_line.iter().map(|x| x - 1).collect())
    }

    /// Parses cycle notation such as `(1 2 3)(5 6)`; `()` is the identity.
    /// The degree defaults to the largest point mentioned.
    pub fn from_cycles(s: &str, degree: Option<usize>) -> Result<Perm> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in cycle notation `{s}`")))?;
            let close = body.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{t}` in `{s}`"))))
                .collect::<Result<Vec<_>>>()?;
            if points.contains(&0) {
                return Err(Error::Parse(format!("cycle notation is 1-indexed: `{s}`")));
            }
            cycles.push(points);
            rest = body[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = degree.unwrap_or(max);
        if max > n {
            return Err(Error::InvalidPermutation(format!("point {max} exceeds degree {n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in &cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated in `{s}`")));
                }
                images[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-indexed images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-indexed one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `σ(i)` for 0-indexed `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { what: "compose", expected: self.len(), found: other.len() });
        }
        Ok(Perm { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    /// Disjoint cycles of length at least 2, 1-indexed, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles.iter().map(|c| format!("({})", c.iter().join(" "))).collect()
    }

    /// The standardization of a sequence of distinct values: the permutation with the same relative order.
    pub fn standardize(values: &[usize]) -> Perm {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut images = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            images[i] = rank;
        }
        Perm { images }
    }
}

impl Mul for &Perm {
    type Output = Perm;

    /// Panics on a size mismatch; use [`Perm::compose`] for a checked product.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("permutation sizes differ")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.one_line())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

/// Accepts `[2,3,1]`, `2 3 1`, or cycle notation `(1 2 3)`.
impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let t = s.trim();
        if t.starts_with('(') {
            return Perm::from_cycles(t, None);
        }
        let inner = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t);
        let points = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry `{x}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_one_line(&points)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Perm, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            OneLine(Vec<usize>),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::OneLine(v) => Perm::from_one_line(&v),
            Repr::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// All of `Σ_n` in lexicographic order of one-line form.
pub fn all_perms(n: usize) -> impl Iterator<Item = Perm> {
    (0..n).permutations(n).map(|images| Perm { images })
}

/// `σ⟨k_1,…,k_n⟩`: permutes consecutive blocks of sizes `ks` according to `σ`.
///
/// Block `j` (columns) lands in block-row `σ(j)`. Empty blocks are allowed.
pub fn block_permutation(sigma: &Perm, ks: &[usize]) -> Result<Perm> {
    if ks.len() != sigma.len() {
        return Err(Error::SizeMismatch { what: "block_permutation sizes", expected: sigma.len(), found: ks.len() });
    }
    let n = sigma.len();
    let inv = sigma.inverse();
    // row_start[r] = offset of block-row r, whose occupant is block σ⁻¹(r)
    let mut row_start = vec![0; n];
    let mut acc = 0;
    for r in 0..n {
        row_start[r] = acc;
        acc += ks[inv.apply(r)];
    }
    let mut images = Vec::with_capacity(acc);
    for (j, &k) in ks.iter().enumerate() {
        let base = row_start[sigma.apply(j)];
        images.extend(base..base + k);
    }
    Ok(Perm { images })
}

/// `τ_1 ⊕ ⋯ ⊕ τ_n`, acting by `τ_j` inside the `j`-th block.
pub fn block_sum<'a>(taus: impl IntoIterator<Item = &'a Perm>) -> Perm {
    let mut images = Vec::new();
    for tau in taus {
        let off = images.len();
        images.extend(tau.images.iter().map(|x| x + off));
    }
    Perm { images }
}

/// The skew sum `(1 2)⟨σ, τ⟩`.
pub fn skew_sum(sigma: &Perm, tau: &Perm) -> Perm {
    let (a, b) = (sigma.len(), tau.len());
    let mut images = Vec::with_capacity(a + b);
    images.extend(sigma.images.iter().map(|x| x + b));
    images.extend(tau.images.iter().copied());
    Perm { images }
}

/// `σ⟨τ_1,…,τ_n⟩ = σ⟨|τ_1|,…,|τ_n|⟩ · (τ_1 ⊕ ⋯ ⊕ τ_n)`, the composition of the associativity operad.
pub fn permuted_block_sum(sigma: &Perm, taus: &[Perm]) -> Result<Perm> {
    if taus.len() != sigma.len() {
        return Err(Error::SizeMismatch { what: "permuted_block_sum", expected: sigma.len(), found: taus.len() });
    }
    Ok(permuted_block_sum_refs(sigma, taus.iter()))
}

pub(crate) fn permuted_block_sum_refs<'a>(sigma: &Perm, taus: impl Iterator<Item = &'a Perm> + Clone) -> Perm {
    let n = sigma.len();
    let sizes: Vec<usize> = taus.clone().map(Perm::len).collect();
    debug_assert_eq!(sizes.len(), n);
    let inv = sigma.inverse();
    let mut row_start = vec![0; n];
    let mut acc = 0;
    for r in 0..n {
        row_start[r] = acc;
        acc += sizes[inv.apply(r)];
    }
    let mut images = Vec::with_capacity(acc);
    for (j, tau) in taus.enumerate() {
        let base = row_start[sigma.apply(j)];
        images.extend(tau.images.iter().map(|x| base + x));
    }
    Perm { images }
}

/// No interval of size `2..=n-1` is mapped onto an interval.
///
/// Every permutation of size at most 2 is (vacuously) simple.
pub fn is_simple(sigma: &Perm) -> bool {
    let n = sigma.len();
    for start in 0..n {
        let mut lo = sigma.apply(start);
        let mut hi = lo;
        // size = end - start + 1, must stay in 2..=n-1
        for end in start + 1..n {
            let size = end - start + 1;
            if size > n - 1 {
                break;
            }
            let v = sigma.apply(end);
            lo = lo.min(v);
            hi = hi.max(v);
            if hi - lo + 1 == size {
                return false;
            }
        }
    }
    true
}

/// Decides whether `σ` is built from `1_{Σ_1}` by block and skew sums.
///
/// Searches every prefix split of every window, memoized over windows.
pub fn is_separable(sigma: &Perm) -> Result<bool> {
    let n = sigma.len();
    if n == 0 {
        return Err(Error::InvalidPermutation("separability is defined for n ≥ 1".into()));
    }
    let mut memo = vec![vec![None; n + 1]; n + 1];
    Ok(separable_window(sigma.images(), 0, n, &mut memo))
}

fn separable_window(v: &[usize], a: usize, b: usize, memo: &mut [Vec<Option<bool>>]) -> bool {
    if b - a == 1 {
        return true;
    }
    if let Some(x) = memo[a][b] {
        return x;
    }
    let (lo, hi) = window_bounds(v, a, b);
    let mut result = false;
    let (mut plo, mut phi) = (usize::MAX, 0);
    for s in a + 1..b {
        plo = plo.min(v[s - 1]);
        phi = phi.max(v[s - 1]);
        let len = s - a;
        let prefix_is_interval = phi - plo + 1 == len;
        let direct = prefix_is_interval && plo == lo;
        let skew = prefix_is_interval && phi == hi;
        if (direct || skew) && separable_window(v, a, s, memo) && separable_window(v, s, b, memo) {
            result = true;
            break;
        }
    }
    memo[a][b] = Some(result);
    result
}

fn window_bounds(v: &[usize], a: usize, b: usize) -> (usize, usize) {
    v[a..b].iter().fold((usize::MAX, 0), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

/// `M_σ`, with `entries[i][j] = 1` iff `i = σ(j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PermMatrix {
    entries: Vec<Vec<u8>>,
}

impl PermMatrix {
    pub fn new(entries: Vec<Vec<u8>>) -> Result<PermMatrix> {
        let m = PermMatrix { entries };
        from_matrix(&m)?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn mul(&self, other: &PermMatrix) -> PermMatrix {
        let n = self.size();
        let mut out = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| self.entries[i][k] * other.entries[k][j]).sum();
            }
        }
        PermMatrix { entries: out }
    }
}

impl fmt::Display for PermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

pub fn to_matrix(sigma: &Perm) -> PermMatrix {
    let n = sigma.len();
    let mut entries = vec![vec![0u8; n]; n];
    for j in 0..n {
        entries[sigma.apply(j)][j] = 1;
    }
    PermMatrix { entries }
}

pub fn from_matrix(m: &PermMatrix) -> Result<Perm> {
    let n = m.entries.len();
    let mut images = vec![usize::MAX; n];
    for (i, row) in m.entries.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidMatrix(format!("row {} has length {}, expected {n}", i + 1, row.len())));
        }
        let ones: Vec<usize> = row.iter().positions(|&x| x != 0).collect();
        if row.iter().any(|&x| x > 1) || ones.len() != 1 {
            return Err(Error::InvalidMatrix(format!("row {} must contain exactly one 1", i + 1)));
        }
        let j = ones[0];
        if images[j] != usize::MAX {
            return Err(Error::InvalidMatrix(format!("column {} contains two 1s", j + 1)));
        }
        images[j] = i;
    }
    Ok(Perm { images })
}

/// Deserializes a square 0/1 array of rows and converts it.
pub fn perm_from_rows(rows: Vec<Vec<u8>>) -> Result<Perm> {
    from_matrix(&PermMatrix { entries: rows })
}
