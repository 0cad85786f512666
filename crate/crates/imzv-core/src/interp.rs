//! The interpolation map on indices and the interpolation kernels.
//!
//! `interpolate` is the formal map `I^t`: it sends an index to the sum over
//! all ways of replacing each separator by a comma or a plus, weighting a
//! pattern by `t^(number of plusses)` and adding up the merged entries.
//! Evaluating multiple zeta values on `I^t(k)` produces the interpolated
//! value that is the plain MZV at `t = 0` and the star value at `t = 1`.
//!
//! `g_poly` and `h_poly` are the two kernels whose images under a map
//! satisfying the Ohno-type relation produce the interpolated Ohno-type
//! relation: `g_poly` is the defining triple sum over block decompositions
//! with `f_coeff` weights, `h_poly` the expanded double-exponent form, and
//! `g_interp` (the image of `g_poly` under `I^t`) equals `h_poly` exactly.
//! The two are computed by independent routes on purpose: every equality
//! check between them is evidence, not tautology.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::index::{compositions, positive_compositions, ExpVector, Index, IndexError};
use crate::index_sum::IndexSum;
use crate::poly::RatPoly;
use crate::rat::{binom, Rat};

/// `I^t` on a single index.
pub fn interpolate_index(k: &Index) -> IndexSum {
    let r = k.depth();
    let mut out = IndexSum::zero();
    if r == 0 {
        out.add_term(Index::empty(), RatPoly::one());
        return out;
    }
    assert!(r < 32, "interpolation pattern mask overflow");
    let parts = k.parts();
    for mask in 0u32..(1 << (r - 1)) {
        let mut merged = Vec::with_capacity(r);
        merged.push(parts[0]);
        let mut plusses = 0usize;
        for (i, &part) in parts.iter().enumerate().skip(1) {
            if (mask >> (i - 1)) & 1 == 1 {
                *merged.last_mut().expect("non-empty") += part;
                plusses += 1;
            } else {
                merged.push(part);
            }
        }
        let index = Index::new(merged).expect("entries stay positive");
        out.add_term(index, RatPoly::monomial(Rat::one(), plusses));
    }
    out
}

/// `I^t` extended linearly over polynomial coefficients.
pub fn interpolate(s: &IndexSum) -> IndexSum {
    let mut out = IndexSum::zero();
    for (k, c) in s.iter() {
        for (l, pattern_coeff) in interpolate_index(k).iter() {
            out.add_term(l.clone(), c * pattern_coeff);
        }
    }
    out
}

/// The merge-weight polynomial
/// `f_i(k, e) = sum_{j=0}^{e} C(e-j, i) C(k+e-i-2, j) t^j (1-t)^{e-i-j}`,
/// with `f_i(k, -1) = 0`.
///
/// Binomials follow the convention of [`binom`]; whenever `C(e-j, i)` is
/// nonzero the exponent `e-i-j` is non-negative, so no negative powers of
/// `1-t` ever arise.
pub fn f_coeff(i: usize, k: i64, e: i64) -> RatPoly {
    if e < 0 {
        return RatPoly::zero();
    }
    let i = i as i64;
    let mut out = RatPoly::zero();
    for j in 0..=e {
        let b1 = binom(e - j, i);
        if b1.is_zero() {
            continue;
        }
        let b2 = binom(k + e - i - 2, j);
        if b2.is_zero() {
            continue;
        }
        debug_assert!(e - i - j >= 0);
        let c = Rat::from_integer(b1 * b2);
        let term = &RatPoly::monomial(c, j as usize)
            * &RatPoly::one_minus_t().pow((e - i - j) as usize);
        out = &out + &term;
    }
    out
}

/// Memo for [`f_coeff`] inside a kernel evaluation; the same `(i, k, e)`
/// triples recur across block decompositions.
#[derive(Default)]
struct FCache {
    map: BTreeMap<(usize, i64, i64), RatPoly>,
}

impl FCache {
    fn get(&mut self, i: usize, k: i64, e: i64) -> &RatPoly {
        self.map
            .entry((i, k, e))
            .or_insert_with(|| f_coeff(i, k, e))
    }
}

/// Weight and depth of each block of `parts` split into runs of the given
/// lengths.
pub(crate) fn block_shapes(parts: &[u32], lens: &[u32]) -> Vec<(i64, usize)> {
    let mut shapes = Vec::with_capacity(lens.len());
    let mut pos = 0usize;
    for &len in lens {
        let len = len as usize;
        let wt: u32 = parts[pos..pos + len].iter().sum();
        shapes.push((wt as i64, len));
        pos += len;
    }
    debug_assert_eq!(pos, parts.len());
    shapes
}

/// The Ohno kernel `g_m(k; t)`.
///
/// Sum over splittings of `k` into `l` consecutive non-empty blocks and
/// exponent vectors `e` of weight `m`, of
/// `(-t(1-t))^{r-l} * prod f_{dep(b)-1}(wt(b) + [first block], e_b)` times
/// the index of block weights shifted by `e`. Conventions: the kernel is 0
/// for `m = -1`, and on the empty index it is the empty index for `m = 0`
/// and 0 otherwise.
///
/// Every support index has weight `wt(k) + m` and depth at most `dep(k)`.
pub fn g_poly(m: i64, k: &Index) -> IndexSum {
    if m < 0 {
        return IndexSum::zero();
    }
    let m = m as u32;
    if k.is_empty() {
        return if m == 0 {
            IndexSum::from_index(Index::empty())
        } else {
            IndexSum::zero()
        };
    }
    let r = k.depth();
    let parts = k.parts();
    // -t(1-t)
    let outer_base = -&(&RatPoly::t() * &RatPoly::one_minus_t());
    let mut fcache = FCache::default();
    let mut out = IndexSum::zero();
    for l in 1..=r {
        let outer = outer_base.pow(r - l);
        for lens in positive_compositions(r as u32, l) {
            let shapes = block_shapes(parts, &lens);
            for e in compositions(m, l) {
                let mut coeff = outer.clone();
                for (j, &(wt, dep)) in shapes.iter().enumerate() {
                    let first = if j == 0 { 1 } else { 0 };
                    let fc = fcache.get(dep - 1, wt + first, e.entries()[j] as i64);
                    if fc.is_zero() {
                        coeff = RatPoly::zero();
                        break;
                    }
                    coeff = &coeff * fc;
                }
                if coeff.is_zero() {
                    continue;
                }
                let index = Index::new(
                    shapes
                        .iter()
                        .zip(e.entries())
                        .map(|(&(wt, _), &ei)| wt as u32 + ei)
                        .collect(),
                )
                .expect("block weights are positive");
                out.add_term(index, coeff);
            }
        }
    }
    out
}

/// The expanded kernel `h_m(k; t)`, defined for non-empty `k`.
///
/// Sum over splittings into `l` blocks and *two* exponent vectors `e, e'`
/// with `wt(e) + wt(e') = m`, of `t^{r - l + wt(e)}` times a product of
/// binomial weights in `e` times the index of block weights shifted by both
/// vectors. Returns 0 for `m = -1`. Equals [`g_interp`] for every `m >= 0`.
pub fn h_poly(m: i64, k: &Index) -> IndexSum {
    assert!(!k.is_empty(), "the expanded kernel needs a non-empty index");
    if m < 0 {
        return IndexSum::zero();
    }
    let m = m as u32;
    let r = k.depth();
    let parts = k.parts();
    let mut out = IndexSum::zero();
    for l in 1..=r {
        for lens in positive_compositions(r as u32, l) {
            let shapes = block_shapes(parts, &lens);
            for m1 in 0..=m {
                for e in compositions(m1, l) {
                    let mut prod = BigInt::one();
                    for (j, &(wt, dep)) in shapes.iter().enumerate() {
                        let first = if j == 0 { 1 } else { 0 };
                        let ej = e.entries()[j] as i64;
                        let b = binom(wt - dep as i64 + ej + first - 2, ej);
                        if b.is_zero() {
                            prod = BigInt::zero();
                            break;
                        }
                        prod *= b;
                    }
                    if prod.is_zero() {
                        continue;
                    }
                    let coeff = RatPoly::monomial(
                        Rat::from_integer(prod),
                        r - l + m1 as usize,
                    );
                    for e2 in compositions(m - m1, l) {
                        let index = Index::new(
                            shapes
                                .iter()
                                .zip(e.entries().iter().zip(e2.entries()))
                                .map(|(&(wt, _), (&a, &b))| wt as u32 + a + b)
                                .collect(),
                        )
                        .expect("block weights are positive");
                        out.add_term(index, coeff.clone());
                    }
                }
            }
        }
    }
    out
}

/// `I^t` applied to the Ohno kernel; the form the interpolated Ohno-type
/// relation evaluates on the left-hand side.
pub fn g_interp(m: i64, k: &Index) -> IndexSum {
    interpolate(&g_poly(m, k))
}

/// Right-hand side of the Ohno-type relation for an admissible index:
/// the sum of `(dual(k) oplus e) dualized` over exponent vectors `e` of
/// weight `m` and depth `dep(dual(k))`, optionally pushed through `I^t`.
pub fn ohno_rhs(k: &Index, m: u32, interpolated: bool) -> Result<IndexSum, IndexError> {
    let kd = k.dual()?;
    let mut out = IndexSum::zero();
    for e in compositions(m, kd.depth()) {
        let shifted = kd.oplus(&e)?;
        out.add_term(shifted.dual()?, RatPoly::one());
    }
    Ok(if interpolated { interpolate(&out) } else { out })
}

/// First-kind shift coefficient: `prod_i C(k_i + e_i + [i=1] - 2, e_i)`,
/// the weight of `k oplus e` in the star-side Ohno sum. Equals 1 on the
/// empty pair.
pub fn c1_coeff(k: &Index, e: &ExpVector) -> Result<Rat, IndexError> {
    if k.depth() != e.depth() {
        return Err(IndexError::DepthMismatch);
    }
    let mut prod = BigInt::one();
    for (i, (&ki, &ei)) in k.parts().iter().zip(e.entries()).enumerate() {
        let first = if i == 0 { 1 } else { 0 };
        prod *= binom(ki as i64 + ei as i64 + first - 2, ei as i64);
        if prod.is_zero() {
            break;
        }
    }
    Ok(Rat::from_integer(prod))
}

/// Second-kind shift coefficient:
/// `prod_i C(k_i + e_i + [i=1] + [i=r] - 2, e_i)`, the weight appearing in
/// the star-side Ohno sum for the finite realization.
pub fn c2_coeff(k: &Index, e: &ExpVector) -> Result<Rat, IndexError> {
    if k.depth() != e.depth() {
        return Err(IndexError::DepthMismatch);
    }
    let r = k.depth();
    let mut prod = BigInt::one();
    for (i, (&ki, &ei)) in k.parts().iter().zip(e.entries()).enumerate() {
        let mut delta = 0i64;
        if i == 0 {
            delta += 1;
        }
        if i + 1 == r {
            delta += 1;
        }
        prod *= binom(ki as i64 + ei as i64 + delta - 2, ei as i64);
        if prod.is_zero() {
            break;
        }
    }
    Ok(Rat::from_integer(prod))
}
