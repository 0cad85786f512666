//! Indices, exponent vectors, and the combinatorial maps on them.
//!
//! An index is a finite tuple of positive integers `(k_1, ..., k_r)` stored
//! left to right; it is *admissible* when it is empty or its last entry is
//! at least 2. The duality transform, the Hoffman dual, the arrow maps and
//! the enumeration helpers here are the combinatorial substrate for every
//! identity checked by this crate.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from index construction and index-level maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexError {
    /// An entry of an index was zero.
    ZeroEntry,
    /// Two vectors that must have equal depth did not.
    DepthMismatch,
    /// An operation requiring an admissible index got a non-admissible one.
    NotAdmissible,
    /// An operation requiring a non-empty index got the empty one.
    EmptyIndex,
    /// Lowering the last entry of an index whose last entry is 1.
    LastEntryOne,
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexError::ZeroEntry => write!(f, "index entries must be positive"),
            IndexError::DepthMismatch => write!(f, "depth mismatch"),
            IndexError::NotAdmissible => write!(f, "index is not admissible"),
            IndexError::EmptyIndex => write!(f, "index is empty"),
            IndexError::LastEntryOne => write!(f, "last entry is 1, cannot lower it"),
        }
    }
}

impl core::error::Error for IndexError {}

/// A finite tuple of positive integers, possibly empty.
///
/// The entries are kept in the order they are written mathematically:
/// `parts()[0]` is `k_1`. Admissibility is a condition on the *last* entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Index(Vec<u32>);

impl Index {
    /// The unique index of depth 0.
    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// Build an index from its parts, rejecting zero entries.
    pub fn new(parts: Vec<u32>) -> Result<Self, IndexError> {
        if parts.iter().any(|&k| k == 0) {
            return Err(IndexError::ZeroEntry);
        }
        Ok(Index(parts))
    }

    /// Single-entry index `(k)`.
    pub fn single(k: u32) -> Self {
        assert!(k >= 1, "index entries must be positive");
        Index(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Empty, or last entry at least 2.
    pub fn is_admissible(&self) -> bool {
        match self.0.last() {
            None => true,
            Some(&k) => k >= 2,
        }
    }

    /// Entrywise sum with an exponent vector of the same depth.
    pub fn oplus(&self, e: &ExpVector) -> Result<Self, IndexError> {
        if self.depth() != e.depth() {
            return Err(IndexError::DepthMismatch);
        }
        Ok(Index(
            self.0
                .iter()
                .zip(e.entries())
                .map(|(&k, &e)| k + e)
                .collect(),
        ))
    }

    /// The duality transform on admissible indices.
    ///
    /// Writing the index as blocks `({1}^{a_p - 1}, b_p + 1)` for
    /// `p = 1, ..., s` with all `a_p, b_q >= 1`, the dual is the reversed
    /// sequence of blocks `({1}^{b_p - 1}, a_p + 1)`. It is an involution,
    /// preserves the weight, and sends depth `r` to `weight - r`.
    pub fn dual(&self) -> Result<Self, IndexError> {
        if !self.is_admissible() {
            return Err(IndexError::NotAdmissible);
        }
        // blocks[p] = (a_p, b_p)
        let mut blocks: Vec<(u32, u32)> = Vec::new();
        let mut ones = 0u32;
        for &k in &self.0 {
            if k == 1 {
                ones += 1;
            } else {
                blocks.push((ones + 1, k - 1));
                ones = 0;
            }
        }
        let mut out = Vec::new();
        for &(a, b) in blocks.iter().rev() {
            for _ in 0..b - 1 {
                out.push(1);
            }
            out.push(a + 1);
        }
        Ok(Index(out))
    }

    /// The Hoffman dual of a non-empty index.
    ///
    /// Expand each entry `k_i` as `1 + 1 + ... + 1` and read the index as a
    /// string of `weight` ones separated by `weight - 1` symbols, each either
    /// a `+` (inside an entry) or a `,` (between entries); the Hoffman dual
    /// swaps the two symbols. It is an involution, preserves the weight, and
    /// sends depth `r` to `weight - r + 1`.
    pub fn hoffman_dual(&self) -> Result<Self, IndexError> {
        if self.is_empty() {
            return Err(IndexError::EmptyIndex);
        }
        // true = "+", false = ","
        let mut gaps: Vec<bool> = Vec::new();
        for (i, &k) in self.0.iter().enumerate() {
            for _ in 0..k - 1 {
                gaps.push(true);
            }
            if i + 1 < self.0.len() {
                gaps.push(false);
            }
        }
        let mut out = Vec::new();
        let mut part = 1u32;
        for plus in gaps {
            // swapped reading: old "+" separates parts, old "," joins
            if plus {
                out.push(part);
                part = 1;
            } else {
                part += 1;
            }
        }
        out.push(part);
        Ok(Index(out))
    }

    /// Raise the last entry by one.
    pub fn arrow_up(&self) -> Result<Self, IndexError> {
        let mut v = self.0.clone();
        match v.last_mut() {
            None => Err(IndexError::EmptyIndex),
            Some(k) => {
                *k += 1;
                Ok(Index(v))
            }
        }
    }

    /// Append a trailing 1.
    pub fn arrow_right(&self) -> Result<Self, IndexError> {
        if self.is_empty() {
            return Err(IndexError::EmptyIndex);
        }
        let mut v = self.0.clone();
        v.push(1);
        Ok(Index(v))
    }

    /// Lower the last entry by one; it must be at least 2.
    pub fn arrow_down(&self) -> Result<Self, IndexError> {
        let mut v = self.0.clone();
        match v.last_mut() {
            None => Err(IndexError::EmptyIndex),
            Some(1) => Err(IndexError::LastEntryOne),
            Some(k) => {
                *k -= 1;
                Ok(Index(v))
            }
        }
    }
}

impl fmt::Display for Index {
    /// Renders as a tuple, e.g. `(2,1,3)`; the empty index is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite tuple of non-negative integers (an exponent vector).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExpVector(Vec<u32>);

impl ExpVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExpVector(entries)
    }

    pub fn empty() -> Self {
        ExpVector(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// All exponent vectors of depth `r` and weight `m`, in ascending
/// lexicographic order. There are `C(m + r - 1, r - 1)` of them.
///
/// For `r = 0` the result is the lone empty vector when `m = 0` and nothing
/// otherwise.
pub fn compositions(m: u32, r: usize) -> Vec<ExpVector> {
    let mut out = Vec::new();
    if r == 0 {
        if m == 0 {
            out.push(ExpVector::empty());
        }
        return out;
    }
    let mut cur = vec![0u32; r];
    fill_compositions(m, 0, &mut cur, &mut out);
    out
}

fn fill_compositions(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<ExpVector>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(ExpVector(cur.clone()));
        return;
    }
    for v in 0..=rest {
        cur[pos] = v;
        fill_compositions(rest - v, pos + 1, cur, out);
    }
}

/// All compositions of `n` into exactly `parts` positive parts, ascending
/// lexicographic order.
pub fn positive_compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if (parts as u32) > n {
        return Vec::new();
    }
    compositions(n - parts as u32, parts)
        .into_iter()
        .map(|e| e.entries().iter().map(|&x| x + 1).collect())
        .collect()
}

/// All admissible indices of the given weight and depth, ascending
/// lexicographic order. Empty unless `weight > depth >= 1`.
pub fn admissible_indices(weight: u32, depth: usize) -> Vec<Index> {
    if depth == 0 || weight <= depth as u32 {
        return Vec::new();
    }
    // ({1}^{depth-1}, 2) oplus e, over e of weight `weight - depth - 1`
    let mut base = vec![1u32; depth];
    base[depth - 1] = 2;
    compositions(weight - depth as u32 - 1, depth)
        .into_iter()
        .map(|e| {
            let parts = base
                .iter()
                .zip(e.entries())
                .map(|(&b, &x)| b + x)
                .collect();
            Index(parts)
        })
        .collect()
}

/// All non-empty indices of the given weight, ascending lexicographic order
/// grouped by increasing depth.
pub fn indices_of_weight(weight: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for depth in 1..=weight as usize {
        for parts in positive_compositions(weight, depth) {
            out.push(Index(parts));
        }
    }
    out
}

/// All non-empty indices with weight between 1 and `max_weight`.
pub fn indices_up_to_weight(max_weight: u32) -> Vec<Index> {
    (1..=max_weight).flat_map(indices_of_weight).collect()
}

/// All non-empty admissible indices with weight at most `max_weight`.
pub fn admissible_up_to_weight(max_weight: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for w in 2..=max_weight {
        for d in 1..w as usize {
            out.extend(admissible_indices(w, d));
        }
    }
    out
}
