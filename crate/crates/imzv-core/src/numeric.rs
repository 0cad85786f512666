//! Floating-point evaluation of real multiple zeta values by truncated
//! harmonic sums.
//!
//! Exactness lives in the symbolic and mod-p layers; this module only
//! supplies consistency evidence at a documented tolerance. The truncation
//! tail is estimated by the heuristic `2 (ln N)^{r-1} / N^{k_r - 1}`, which
//! is validated empirically by the monotone-refinement test rather than
//! proved; tolerances downstream are sized so the constant cannot flip a
//! verdict.

use alloc::collections::BTreeMap;
use alloc::vec;
use core::fmt;

use num_traits::{Float, ToPrimitive};

use crate::index::{Index, IndexError};
use crate::index_sum::IndexSum;
use crate::interp::interpolate_index;
use crate::rat::{binom_rat, Rat};

/// Errors from the numeric evaluator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumericError {
    /// The series of a non-admissible index diverges.
    NotAdmissible,
    /// Truncation point too small to mean anything.
    TruncationTooSmall,
    /// An index-level precondition failed.
    Index(IndexError),
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::NotAdmissible => {
                write!(f, "non-admissible index: the series diverges")
            }
            NumericError::TruncationTooSmall => write!(f, "truncation must be at least 10"),
            NumericError::Index(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for NumericError {}

impl From<IndexError> for NumericError {
    fn from(e: IndexError) -> Self {
        NumericError::Index(e)
    }
}

/// A floating-point value with a truncation-tail estimate. Two values are
/// considered to agree at tolerance `tol` when
/// `|lhs - rhs| <= tol + lhs.err_bound + rhs.err_bound`.
///
/// The bound covers truncation only; plain summation also carries
/// floating-point accumulation noise (about 1e-10 at 10^6 terms), which is
/// orders of magnitude below every tolerance used downstream.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericValue {
    pub value: f64,
    pub err_bound: f64,
}

impl NumericValue {
    pub fn exact(value: f64) -> Self {
        NumericValue {
            value,
            err_bound: 0.0,
        }
    }

    pub fn agrees(&self, other: &NumericValue, tol: f64) -> bool {
        (self.value - other.value).abs() <= tol + self.err_bound + other.err_bound
    }
}

/// Heuristic tail estimate `2 (ln N)^{r-1} / N^{k_r - 1}` for the strict
/// sum truncated at `N`.
fn tail_bound(k: &Index, n: usize) -> f64 {
    let r = k.depth();
    let last = *k.parts().last().expect("non-empty index") as i32;
    let n = n as f64;
    2.0 * n.ln().powi(r as i32 - 1) / n.powi(last - 1)
}

/// Prefix-DP truncated harmonic sum: strict inequalities by default, weak
/// in star mode; `O(depth * n)`. With `compensated` set, each per-depth
/// accumulator uses Kahan summation.
fn harmonic_dp(k: &Index, n: usize, star: bool, compensated: bool) -> f64 {
    let r = k.depth();
    let parts = k.parts();
    let mut dp = vec![0.0f64; r + 1];
    let mut comp = vec![0.0f64; r + 1];
    dp[0] = 1.0;
    for v in 1..=n {
        let x = v as f64;
        let add = |dp: &mut [f64], comp: &mut [f64], d: usize, term: f64| {
            if compensated {
                let y = term - comp[d];
                let t = dp[d] + y;
                comp[d] = (t - dp[d]) - y;
                dp[d] = t;
            } else {
                dp[d] += term;
            }
        };
        if star {
            for d in 1..=r {
                let term = dp[d - 1] * x.powi(-(parts[d - 1] as i32));
                add(&mut dp, &mut comp, d, term);
            }
        } else {
            for d in (1..=r).rev() {
                let term = dp[d - 1] * x.powi(-(parts[d - 1] as i32));
                add(&mut dp, &mut comp, d, term);
            }
        }
    }
    dp[r]
}

/// Truncated multiple zeta value of an admissible index, summed up to `n`,
/// with the heuristic tail bound attached. The empty index evaluates to
/// exactly 1.
pub fn mzv_numeric(k: &Index, n: usize) -> Result<NumericValue, NumericError> {
    mzv_numeric_with(k, n, false)
}

/// [`mzv_numeric`] with optional compensated summation in the inner loop.
pub fn mzv_numeric_with(
    k: &Index,
    n: usize,
    compensated: bool,
) -> Result<NumericValue, NumericError> {
    if !k.is_admissible() {
        return Err(NumericError::NotAdmissible);
    }
    if n < 10 {
        return Err(NumericError::TruncationTooSmall);
    }
    if k.is_empty() {
        return Ok(NumericValue::exact(1.0));
    }
    Ok(NumericValue {
        value: harmonic_dp(k, n, false, compensated),
        err_bound: tail_bound(k, n),
    })
}

/// Truncated multiple zeta-star value (weak inequalities). Independent of
/// the interpolation machinery; used as the `t = 1` oracle. The tail bound
/// is only meaningful for admissible indices.
pub fn mzsv_numeric(k: &Index, n: usize) -> Result<NumericValue, NumericError> {
    if n < 10 {
        return Err(NumericError::TruncationTooSmall);
    }
    if k.is_empty() {
        return Ok(NumericValue::exact(1.0));
    }
    let bound = if k.is_admissible() {
        // every merge pattern of the star sum ends at weight >= k_r
        (1 << (k.depth() - 1)) as f64 * tail_bound(k, n)
    } else {
        f64::infinity()
    };
    Ok(NumericValue {
        value: harmonic_dp(k, n, true, false),
        err_bound: bound,
    })
}

/// Memoized strict evaluations at one fixed truncation point. Sweeps share
/// a cache because the same shifted indices recur across instances.
pub struct MzvCache {
    n: usize,
    values: BTreeMap<Index, NumericValue>,
}

impl MzvCache {
    pub fn new(n: usize) -> Self {
        MzvCache {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn get(&mut self, k: &Index) -> Result<NumericValue, NumericError> {
        if let Some(v) = self.values.get(k) {
            return Ok(*v);
        }
        let v = mzv_numeric(k, self.n)?;
        self.values.insert(k.clone(), v);
        Ok(v)
    }
}

/// Evaluate an index sum at an exact rational `t`, weighting each truncated
/// zeta value by its coefficient; error bounds add with absolute
/// coefficient weights. Every support index must be admissible.
pub fn eval_indexsum_numeric(
    s: &IndexSum,
    t_value: &Rat,
    cache: &mut MzvCache,
) -> Result<NumericValue, NumericError> {
    let mut value = 0.0f64;
    let mut err = 0.0f64;
    for (k, coeff) in s.iter() {
        let c = coeff
            .eval(t_value)
            .to_f64()
            .expect("coefficient fits in f64");
        if c == 0.0 {
            continue;
        }
        let zeta = cache.get(k)?;
        value += c * zeta.value;
        err += c.abs() * zeta.err_bound;
    }
    Ok(NumericValue {
        value,
        err_bound: err,
    })
}

/// Outcome of a numeric comparison.
#[derive(Clone, Copy, Debug)]
pub struct NumericCheck {
    pub lhs: NumericValue,
    pub rhs: NumericValue,
    pub tol: f64,
}

impl NumericCheck {
    pub fn holds(&self) -> bool {
        self.lhs.agrees(&self.rhs, self.tol)
    }
}

/// Numeric instance of the interpolated Ohno-type relation at an exact
/// rational `t`: the interpolated kernel image against the interpolated
/// dual-side sum. At `t = 0` this is the plain relation, at `t = 1` the
/// star relation.
pub fn check_ohno_numeric(
    k: &Index,
    m: u32,
    t_value: &Rat,
    cache: &mut MzvCache,
    tol: f64,
) -> Result<NumericCheck, NumericError> {
    if !k.is_admissible() || k.is_empty() {
        return Err(NumericError::NotAdmissible);
    }
    let lhs_sum = crate::interp::g_interp(m as i64, k);
    let rhs_sum = crate::interp::ohno_rhs(k, m, true)?;
    Ok(NumericCheck {
        lhs: eval_indexsum_numeric(&lhs_sum, t_value, cache)?,
        rhs: eval_indexsum_numeric(&rhs_sum, t_value, cache)?,
        tol,
    })
}

/// Numeric instance of the sum formula for interpolated values: the sum of
/// interpolated zeta values over admissible indices of weight `k` and
/// depth `r` against `{ sum_j C(k-1, j) t^j (1-t)^{r-1-j} } zeta(k)`.
pub fn check_sum_formula_numeric(
    k: u32,
    r: u32,
    t_value: &Rat,
    cache: &mut MzvCache,
    tol: f64,
) -> Result<NumericCheck, NumericError> {
    if r < 1 || k <= r {
        return Err(NumericError::Index(IndexError::NotAdmissible));
    }
    let mut lhs = NumericValue::exact(0.0);
    for idx in crate::index::admissible_indices(k, r as usize) {
        let v = eval_indexsum_numeric(&interpolate_index(&idx), t_value, cache)?;
        lhs.value += v.value;
        lhs.err_bound += v.err_bound;
    }

    let t = t_value.to_f64().expect("t fits in f64");
    let mut coeff = 0.0f64;
    for j in 0..r {
        let b = binom_rat(k as i64 - 1, j as i64)
            .to_f64()
            .expect("binomial fits in f64");
        coeff += b * t.powi(j as i32) * (1.0 - t).powi((r - 1 - j) as i32);
    }
    let zk = cache.get(&Index::single(k))?;
    let rhs = NumericValue {
        value: coeff * zk.value,
        err_bound: coeff.abs() * zk.err_bound,
    };
    Ok(NumericCheck { lhs, rhs, tol })
}

/// The star sum at truncation `n` equals the `t = 1` interpolated
/// evaluation of the strict sums; exact term rearrangement, so agreement is
/// at floating-point accuracy, far inside the tail bounds.
pub fn star_decomposition_check(
    k: &Index,
    cache: &mut MzvCache,
) -> Result<NumericCheck, NumericError> {
    let star = mzsv_numeric(k, cache.truncation())?;
    let merged = eval_indexsum_numeric(
        &interpolate_index(k),
        &crate::rat::rat_int(1),
        cache,
    )?;
    Ok(NumericCheck {
        lhs: NumericValue {
            value: star.value,
            err_bound: 0.0,
        },
        rhs: NumericValue {
            value: merged.value,
            err_bound: 0.0,
        },
        // pure floating-point rearrangement noise
        tol: 1e-9 * (1.0 + star.value.abs()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::admissible_up_to_weight;
    use crate::rat::{rat, rat_int};

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    const PI_SQUARED_OVER_6: f64 = 1.6449340668482264;
    const APERY: f64 = 1.2020569031595943;

    #[test]
    fn zeta_two_and_three() {
        let n = 1_000_000;
        let z2 = mzv_numeric(&idx(&[2]), n).unwrap();
        assert!((z2.value - PI_SQUARED_OVER_6).abs() <= z2.err_bound);
        // the tail of the weight-3 sum (about 5e-13) is below plain f64
        // accumulation noise, so the tight comparison needs the
        // compensated path
        let z3 = mzv_numeric_with(&idx(&[3]), n, true).unwrap();
        assert!((z3.value - APERY).abs() <= z3.err_bound);
        let plain = mzv_numeric(&idx(&[3]), n).unwrap();
        assert!((plain.value - APERY).abs() <= plain.err_bound + 1e-9);
    }

    #[test]
    fn euler_identity() {
        // zeta(1,2) = zeta(3)
        let n = 1_000_000;
        let lhs = mzv_numeric(&idx(&[1, 2]), n).unwrap();
        let rhs = mzv_numeric(&idx(&[3]), n).unwrap();
        assert!(lhs.agrees(&rhs, 1e-4));
    }

    #[test]
    fn rejects_divergent_and_tiny() {
        assert_eq!(
            mzv_numeric(&idx(&[2, 1]), 1000),
            Err(NumericError::NotAdmissible)
        );
        assert_eq!(
            mzv_numeric(&idx(&[2]), 5),
            Err(NumericError::TruncationTooSmall)
        );
        assert_eq!(mzv_numeric(&Index::empty(), 100).unwrap().value, 1.0);
    }

    #[test]
    fn compensated_matches_plain() {
        let n = 100_000;
        for k in [idx(&[2]), idx(&[1, 2]), idx(&[1, 1, 2])] {
            let plain = mzv_numeric_with(&k, n, false).unwrap();
            let comp = mzv_numeric_with(&k, n, true).unwrap();
            assert!((plain.value - comp.value).abs() < 1e-12);
        }
    }

    #[test]
    fn monotone_refinement() {
        // doubling the truncation moves the value by less than the bound
        let n = 20_000;
        for k in admissible_up_to_weight(5) {
            let coarse = mzv_numeric(&k, n).unwrap();
            let fine = mzv_numeric(&k, 2 * n).unwrap();
            assert!(
                (fine.value - coarse.value).abs() <= coarse.err_bound,
                "k = {k}"
            );
        }
    }

    #[test]
    fn duality_numeric_small() {
        let mut cache = MzvCache::new(200_000);
        for k in admissible_up_to_weight(5) {
            let lhs = cache.get(&k).unwrap();
            let rhs = cache.get(&k.dual().unwrap()).unwrap();
            assert!(lhs.agrees(&rhs, 1e-3), "k = {k}");
        }
    }

    #[test]
    fn eval_indexsum_examples() {
        let mut cache = MzvCache::new(500_000);
        // (1,2) + t(3) at t = 1 is about 2 zeta(3)
        let mut s = IndexSum::from_index(idx(&[1, 2]));
        s.add_term(idx(&[3]), crate::poly::RatPoly::t());
        let v = eval_indexsum_numeric(&s, &rat_int(1), &mut cache).unwrap();
        assert!((v.value - 2.0 * APERY).abs() < 1e-3);

        let zero = eval_indexsum_numeric(&IndexSum::zero(), &rat_int(1), &mut cache).unwrap();
        assert_eq!(zero.value, 0.0);
        assert_eq!(zero.err_bound, 0.0);

        // (1+t)(3) at t = 0 is zeta(3)
        let one_plus_t =
            crate::poly::RatPoly::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let s = IndexSum::from_index(idx(&[3])).scale(&one_plus_t);
        let v = eval_indexsum_numeric(&s, &rat_int(0), &mut cache).unwrap();
        assert!((v.value - APERY).abs() < 1e-4);
    }

    #[test]
    fn ohno_numeric_examples() {
        let mut cache = MzvCache::new(500_000);
        // k = (2), m = 1 at t = 0: zeta(3) vs zeta(1,2)
        let check = check_ohno_numeric(&idx(&[2]), 1, &rat_int(0), &mut cache, 1e-3).unwrap();
        assert!(check.holds());
        // m = 0: identical sums at any t
        let check = check_ohno_numeric(&idx(&[2]), 0, &rat(1, 2), &mut cache, 1e-9).unwrap();
        assert!(check.holds());
        // k = (3), m = 1, t = 1/2
        let check = check_ohno_numeric(&idx(&[3]), 1, &rat(1, 2), &mut cache, 1e-3).unwrap();
        assert!(check.holds());
        // depth two at an interior t exercises the interpolated kernel
        let check = check_ohno_numeric(&idx(&[1, 2]), 1, &rat(1, 2), &mut cache, 1e-3).unwrap();
        assert!(check.holds());
        assert!(check_ohno_numeric(&idx(&[1, 1]), 1, &rat_int(0), &mut cache, 1e-3).is_err());
    }

    #[test]
    fn sum_formula_numeric_examples() {
        let mut cache = MzvCache::new(500_000);
        // k=3, r=2: both sides are (1+t) zeta(3)
        for t in [rat_int(0), rat(1, 2), rat_int(1)] {
            let check = check_sum_formula_numeric(3, 2, &t, &mut cache, 1e-3).unwrap();
            assert!(check.holds(), "t = {t}");
        }
        // k=2, r=1: zeta(2) on both sides
        let check = check_sum_formula_numeric(2, 1, &rat_int(0), &mut cache, 1e-9).unwrap();
        assert!(check.holds());
        assert!(check_sum_formula_numeric(2, 2, &rat_int(0), &mut cache, 1e-3).is_err());
    }

    #[test]
    fn star_decomposition_small() {
        let mut cache = MzvCache::new(50_000);
        for k in admissible_up_to_weight(5) {
            let check = star_decomposition_check(&k, &mut cache).unwrap();
            assert!(check.holds(), "k = {k}");
        }
    }
}
