//! The per-prime realization: multiple harmonic sums modulo `p` and the
//! finite Ohno-type and sum-formula checks.
//!
//! A finite multiple zeta value is the tuple over primes of the truncated
//! harmonic sums below, taken modulo almost-everywhere equality; checking
//! an identity for every prime in a range is exactly what verifying such a
//! statement on finitely many components means. The interpolation variable
//! `t` is kept formal throughout: each check compares polynomials over
//! `Z/pZ` coefficient by coefficient, never sampled values.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::bernoulli::BernoulliTable;
use crate::index::{admissible_indices, compositions, Index, IndexError};
use crate::index_sum::IndexSum;
use crate::interp::{c2_coeff, g_poly, interpolate_index};
use crate::poly::{reduce_mod_p, ModPPoly, NonPIntegral, RatPoly};
use crate::rat::{binom, mul_mod, pow_mod, rat_mod_p, sign, Rat};

/// Deterministic trial-division primality, plenty for the sweep ranges.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in the inclusive range `lo..=hi`.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Errors from the finite realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteError {
    /// The modulus is not an odd prime.
    NotPrime(u64),
    /// A coefficient with denominator divisible by `p` was reduced.
    NonPIntegral(u64),
    /// A parameter outside the documented range, e.g. a Bernoulli index
    /// whose value is not p-integral.
    OutOfRange(&'static str),
    /// An index-level precondition failed.
    Index(IndexError),
}

impl fmt::Display for FiniteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteError::NotPrime(p) => write!(f, "{p} is not an odd prime"),
            FiniteError::NonPIntegral(p) => {
                write!(f, "non-p-integral coefficient (p = {p})")
            }
            FiniteError::OutOfRange(what) => write!(f, "{what}"),
            FiniteError::Index(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FiniteError {}

impl From<IndexError> for FiniteError {
    fn from(e: IndexError) -> Self {
        FiniteError::Index(e)
    }
}

impl From<NonPIntegral> for FiniteError {
    fn from(e: NonPIntegral) -> Self {
        FiniteError::NonPIntegral(e.prime)
    }
}

/// Arithmetic context for one prime: the modulus and the table of inverses
/// of `1..p`, built once and then shared read-only.
pub struct Fp {
    p: u64,
    inv: Vec<u64>,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, FiniteError> {
        if p < 3 || !is_prime(p) {
            return Err(FiniteError::NotPrime(p));
        }
        // inv[i] for i in 1..p by the standard linear recurrence
        let mut inv = vec![0u64; p as usize];
        if p > 1 {
            inv[1] = 1;
        }
        for i in 2..p as usize {
            inv[i] = mul_mod(p - p / i as u64, inv[(p % i as u64) as usize], p);
        }
        Ok(Fp { p, inv })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Inverse of `n mod p` for `n` not divisible by `p`.
    pub fn inv(&self, n: u64) -> u64 {
        let r = n % self.p;
        debug_assert!(r != 0, "inverse of zero mod {}", self.p);
        self.inv[r as usize]
    }

    /// Multiple harmonic sum modulo `p`: strict bounds
    /// `0 < n_1 < ... < n_r < p` by default, weak bounds
    /// `1 <= n_1 <= ... <= n_r <= p-1` in star mode. The empty index sums
    /// to 1. Prefix dynamic programming, O(depth * p).
    pub fn mhs(&self, k: &Index, star: bool) -> u64 {
        let r = k.depth();
        let parts = k.parts();
        let mut dp = vec![0u64; r + 1];
        dp[0] = 1;
        for n in 1..self.p {
            let inv_n = self.inv[n as usize];
            if star {
                // ascending: dp[d-1] already includes n_{d-1} = n
                for d in 1..=r {
                    let w = pow_mod(inv_n, parts[d - 1] as u64, self.p);
                    dp[d] = (dp[d] + mul_mod(dp[d - 1], w, self.p)) % self.p;
                }
            } else {
                // descending: dp[d-1] still excludes n
                for d in (1..=r).rev() {
                    let w = pow_mod(inv_n, parts[d - 1] as u64, self.p);
                    dp[d] = (dp[d] + mul_mod(dp[d - 1], w, self.p)) % self.p;
                }
            }
        }
        dp[r]
    }

    /// The interpolated harmonic sum as a polynomial in `t` over `Z/pZ`:
    /// the image of `I^t(k)` under the strict sum, term by term. Its degree
    /// is below the depth of `k`.
    pub fn zeta_t(&self, k: &Index) -> ModPPoly {
        let out = self
            .eval_index_sum(&interpolate_index(k))
            .expect("interpolation coefficients are integral");
        debug_assert!(k.is_empty() || out.degree().is_none() || out.degree() < Some(k.depth()));
        out
    }

    /// Linear extension of the strict harmonic sum to index sums with
    /// polynomial coefficients; fails if a coefficient is not p-integral.
    pub fn eval_index_sum(&self, s: &IndexSum) -> Result<ModPPoly, FiniteError> {
        let mut acc = ModPPoly::zero(self.p);
        for (k, c) in s.iter() {
            let scalar = self.mhs(k, false);
            if scalar == 0 {
                // still need the reduction to fail loudly on bad input
                reduce_mod_p(c, self.p)?;
                continue;
            }
            acc = acc.add(&reduce_mod_p(c, self.p)?.scale(scalar));
        }
        Ok(acc)
    }

    /// The finite analogue of a single zeta value:
    /// `B_{p-k} / k mod p`, defined for `2 <= k <= p-2`.
    pub fn frak_z(&self, k: u32, bern: &BernoulliTable) -> Result<u64, FiniteError> {
        if k < 2 || k as u64 > self.p - 2 {
            return Err(FiniteError::OutOfRange(
                "the finite zeta analogue needs 2 <= k <= p-2",
            ));
        }
        let b = bern.get((self.p - k as u64) as usize);
        let value = b / Rat::from_integer(k.into());
        rat_mod_p(&value, self.p).ok_or(FiniteError::NonPIntegral(self.p))
    }
}

/// Two residues claimed equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalarSides {
    pub lhs: u64,
    pub rhs: u64,
}

impl ScalarSides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Two polynomials over `Z/pZ` claimed equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySides {
    pub lhs: ModPPoly,
    pub rhs: ModPPoly,
}

impl PolySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The Hoffman-dual Ohno-type relation for finite multiple zeta values:
/// `sum_e zeta_p(k oplus e) = sum_e zeta_p(hd(hd(k) oplus e))` with the
/// exponent vectors of weight `m` and matching depths.
pub fn oyama_sides(fp: &Fp, k: &Index, m: u32) -> Result<ScalarSides, FiniteError> {
    if k.is_empty() {
        return Err(IndexError::EmptyIndex.into());
    }
    let mut lhs = 0u64;
    for e in compositions(m, k.depth()) {
        lhs = (lhs + fp.mhs(&k.oplus(&e)?, false)) % fp.p;
    }
    let hd = k.hoffman_dual()?;
    let mut rhs = 0u64;
    for e in compositions(m, hd.depth()) {
        rhs = (rhs + fp.mhs(&hd.oplus(&e)?.hoffman_dual()?, false)) % fp.p;
    }
    Ok(ScalarSides { lhs, rhs })
}

/// The star-value Ohno-type relation for finite multiple zeta values:
/// `sum_e c2(k, e) zeta*_p(k oplus e) = sum_e zeta*_p(hd(hd(k) oplus e))`.
pub fn star_ohno_sides(fp: &Fp, k: &Index, m: u32) -> Result<ScalarSides, FiniteError> {
    if k.is_empty() {
        return Err(IndexError::EmptyIndex.into());
    }
    let mut lhs = 0u64;
    for e in compositions(m, k.depth()) {
        let c = c2_coeff(k, &e)?;
        if c.is_zero() {
            continue;
        }
        let c = rat_mod_p(&c, fp.p).ok_or(FiniteError::NonPIntegral(fp.p))?;
        lhs = (lhs + mul_mod(c, fp.mhs(&k.oplus(&e)?, true), fp.p)) % fp.p;
    }
    let hd = k.hoffman_dual()?;
    let mut rhs = 0u64;
    for e in compositions(m, hd.depth()) {
        rhs = (rhs + fp.mhs(&hd.oplus(&e)?.hoffman_dual()?, true)) % fp.p;
    }
    Ok(ScalarSides { lhs, rhs })
}

/// Outcome of the interpolated Ohno-type check for finite multiple zeta
/// values, with its two specializations cross-checked against independent
/// routes: `t = 0` against the plain relation and `t = 1` against the
/// star relation.
#[derive(Clone, Debug)]
pub struct InterpOhnoCheck {
    pub sides: PolySides,
    pub plain: ScalarSides,
    pub star: ScalarSides,
}

impl InterpOhnoCheck {
    pub fn holds(&self) -> bool {
        self.sides.holds()
            && self.plain.holds()
            && self.sides.lhs.eval(0) == self.plain.lhs
            && self.star.holds()
            && self.sides.lhs.eval(1) == self.star.lhs
    }
}

/// The interpolated Ohno-type relation for finite multiple zeta values:
/// the image of `down(g_m(up(k); t))` under the interpolated harmonic sum
/// equals `sum_e zeta^t_p(hd(hd(k) oplus e))`, as a polynomial identity in
/// `t` over `Z/pZ`.
pub fn interp_ohno_check(fp: &Fp, k: &Index, m: u32) -> Result<InterpOhnoCheck, FiniteError> {
    if k.is_empty() {
        return Err(IndexError::EmptyIndex.into());
    }
    let kernel = g_poly(m as i64, &k.arrow_up()?);
    // the kernel of a raised index has admissible support, so lowering
    // never hits a trailing 1
    let lowered = kernel
        .arrow_down()
        .expect("kernel support of a raised index is admissible");
    let lhs = fp.eval_index_sum(&lowered)?;

    let hd = k.hoffman_dual()?;
    let mut rhs = ModPPoly::zero(fp.p);
    for e in compositions(m, hd.depth()) {
        rhs = rhs.add(&fp.zeta_t(&hd.oplus(&e)?.hoffman_dual()?));
    }

    Ok(InterpOhnoCheck {
        sides: PolySides { lhs, rhs },
        plain: oyama_sides(fp, k, m)?,
        star: star_ohno_sides(fp, k, m)?,
    })
}

/// The common sum-formula coefficient
/// `sum_{j=0}^{r-1} { C(k-1, j) + (-1)^r C(k-1, r-1-j) } t^j (1-t)^{r-1-j}`.
pub fn sum_formula_coeff_finite(k: u32, r: u32) -> RatPoly {
    let mut out = RatPoly::zero();
    for j in 0..r {
        let c = Rat::from_integer(binom(k as i64 - 1, j as i64))
            + sign(r) * Rat::from_integer(binom(k as i64 - 1, (r - 1 - j) as i64));
        if c.is_zero() {
            continue;
        }
        let term = &RatPoly::monomial(c, j as usize)
            * &RatPoly::one_minus_t().pow((r - 1 - j) as usize);
        out = &out + &term;
    }
    out
}

/// The sum formula for interpolated finite multiple zeta values: the sum of
/// `zeta^t_p` over admissible indices of weight `k` and depth `r` equals
/// the closed coefficient polynomial times the finite zeta analogue of `k`.
pub fn sum_formula_sides(
    fp: &Fp,
    k: u32,
    r: u32,
    bern: &BernoulliTable,
) -> Result<PolySides, FiniteError> {
    if r < 1 || k <= r {
        return Err(FiniteError::OutOfRange("the sum formula needs k > r >= 1"));
    }
    let mut lhs = ModPPoly::zero(fp.p);
    for idx in admissible_indices(k, r as usize) {
        lhs = lhs.add(&fp.zeta_t(&idx));
    }
    let rhs = reduce_mod_p(&sum_formula_coeff_finite(k, r), fp.p)?.scale(fp.frak_z(k, bern)?);
    Ok(PolySides { lhs, rhs })
}

/// Depth-two closed form:
/// `zeta_p(a, b) = (-1)^b C(a+b, a) * frak_z(a+b)` for `2 <= a+b <= p-2`.
pub fn depth2_closed_form_sides(
    fp: &Fp,
    a: u32,
    b: u32,
    bern: &BernoulliTable,
) -> Result<ScalarSides, FiniteError> {
    if a < 1 || b < 1 || (a + b) as u64 > fp.p - 2 {
        return Err(FiniteError::OutOfRange(
            "the depth-two closed form needs a, b >= 1 and a + b <= p - 2",
        ));
    }
    let idx = Index::new(vec![a, b])?;
    let lhs = fp.mhs(&idx, false);
    let c = sign(b) * Rat::from_integer(binom((a + b) as i64, a as i64));
    let c = rat_mod_p(&c, fp.p).ok_or(FiniteError::NonPIntegral(fp.p))?;
    let rhs = mul_mod(c, fp.frak_z(a + b, bern)?, fp.p);
    Ok(ScalarSides { lhs, rhs })
}

/// The two sides of the binomial-coefficient identity behind the finite sum
/// formula, as exact polynomials over the rationals (no prime involved):
/// `sum_{e=0}^{r-2} (-1)^{r-e} { sum_{j=0}^{e} C(k-r+e, j) t^j (1-t)^{e-j} }
///  C(k, r-e-1)` against the closed coefficient of
/// [`sum_formula_coeff_finite`]. Needs `k > r >= 2`.
pub fn claim_identity_sides(k: u32, r: u32) -> (RatPoly, RatPoly) {
    assert!(r >= 2 && k > r, "the coefficient identity needs k > r >= 2");
    let mut lhs = RatPoly::zero();
    for e in 0..=r - 2 {
        let mut inner = RatPoly::zero();
        for j in 0..=e {
            let c = Rat::from_integer(binom((k - r + e) as i64, j as i64));
            if c.is_zero() {
                continue;
            }
            let term = &RatPoly::monomial(c, j as usize)
                * &RatPoly::one_minus_t().pow((e - j) as usize);
            inner = &inner + &term;
        }
        let outer = sign(r - e) * Rat::from_integer(binom(k as i64, (r - e - 1) as i64));
        lhs = &lhs + &inner.scale(&outer);
    }
    (lhs, sum_formula_coeff_finite(k, r))
}

/// Body of the `t = 1` oracle: the interpolated sum collapsed at `t = 1`
/// equals the independently computed star sum, prime by prime.
pub fn star_oracle_holds(fp: &Fp, k: &Index) -> bool {
    fp.zeta_t(k).eval(1) == fp.mhs(k, true)
}
