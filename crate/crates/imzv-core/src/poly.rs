//! Dense univariate polynomials in the interpolation variable `t`.
//!
//! `RatPoly` has exact rational coefficients; `ModPPoly` has coefficients in
//! `Z/pZ` and is the shape of a per-prime interpolated harmonic sum. Both
//! keep the canonical form "no trailing zeros", so structural equality is
//! polynomial equality.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::rat::{self, rat_int, Rat};

/// Polynomial in `t` over the rationals, coefficients in ascending degree,
/// no trailing zeros (the zero polynomial is the empty list).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(rat_int(1))
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly { coeffs: vec![c] }.normalized()
    }

    /// The variable `t`.
    pub fn t() -> Self {
        RatPoly {
            coeffs: vec![rat_int(0), rat_int(1)],
        }
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        RatPoly {
            coeffs: vec![rat_int(1), rat_int(-1)],
        }
    }

    /// `c * t^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![rat_int(0); deg + 1];
        coeffs[deg] = c;
        RatPoly { coeffs }
    }

    /// From ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        RatPoly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the zero polynomial is `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat_int(0))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, v: &Rat) -> Rat {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Horner evaluation with coefficients converted to `f64`.
    pub fn eval_f64(&self, v: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c.to_f64().expect("rational fits in f64");
        }
        acc
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = RatPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Error reducing a rational polynomial modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPIntegral {
    pub prime: u64,
}

impl fmt::Display for NonPIntegral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "non-p-integral coefficient (p = {})", self.prime)
    }
}

impl core::error::Error for NonPIntegral {}

/// Polynomial in `t` over `Z/pZ`, coefficients in `[0, p)` ascending, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ModPPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPPoly {
    pub fn zero(p: u64) -> Self {
        ModPPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        ModPPoly {
            p,
            coeffs: vec![c % p],
        }
        .normalized()
    }

    pub fn from_coeffs(p: u64, coeffs: Vec<u64>) -> Self {
        ModPPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &ModPPoly) -> ModPPoly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            coeffs.push((a + b) % self.p);
        }
        ModPPoly { p: self.p, coeffs }.normalized()
    }

    pub fn sub(&self, rhs: &ModPPoly) -> ModPPoly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            coeffs.push((a + self.p - b) % self.p);
        }
        ModPPoly { p: self.p, coeffs }.normalized()
    }

    pub fn mul(&self, rhs: &ModPPoly) -> ModPPoly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        if self.is_zero() || rhs.is_zero() {
            return ModPPoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + rat::mul_mod(a, b, self.p)) % self.p;
            }
        }
        ModPPoly { p: self.p, coeffs }.normalized()
    }

    pub fn scale(&self, c: u64) -> ModPPoly {
        let c = c % self.p;
        ModPPoly {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| rat::mul_mod(a, c, self.p))
                .collect(),
        }
        .normalized()
    }

    /// Horner evaluation at `v` in `Z/pZ`.
    pub fn eval(&self, v: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (rat::mul_mod(acc, v, self.p) + c) % self.p;
        }
        acc
    }
}

impl fmt::Debug for ModPPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mod {}: {:?}", self.p, self.coeffs)
    }
}

/// Coefficientwise reduction of a rational polynomial modulo the prime `p`.
///
/// Fails when some coefficient has a denominator divisible by `p`.
pub fn reduce_mod_p(poly: &RatPoly, p: u64) -> Result<ModPPoly, NonPIntegral> {
    let mut coeffs = Vec::with_capacity(poly.coeffs().len());
    for c in poly.coeffs() {
        coeffs.push(rat::rat_mod_p(c, p).ok_or(NonPIntegral { prime: p })?);
    }
    Ok(ModPPoly::from_coeffs(p, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        let one_minus_t = RatPoly::one_minus_t();
        let two_t = RatPoly::monomial(rat_int(2), 1);
        let sum = &one_minus_t + &two_t;
        assert_eq!(sum, RatPoly::from_coeffs(vec![rat_int(1), rat_int(1)]));

        let one_plus_t = RatPoly::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let prod = &one_minus_t * &one_plus_t;
        assert_eq!(
            prod,
            RatPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(-1)])
        );

        assert!((&prod * &RatPoly::zero()).is_zero());
    }

    #[test]
    fn eval_examples() {
        let one_plus_t = RatPoly::from_coeffs(vec![rat_int(1), rat_int(1)]);
        assert_eq!(one_plus_t.eval(&rat_int(0)), rat_int(1));
        assert_eq!(one_plus_t.eval(&rat_int(1)), rat_int(2));
        let one_minus_t2 = RatPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(-1)]);
        assert_eq!(one_minus_t2.eval(&rat(1, 2)), rat(3, 4));
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(
            reduce_mod_p(&RatPoly::constant(rat(1, 6)), 7).unwrap(),
            ModPPoly::constant(7, 6)
        );
        // t - 1 mod 5 = t + 4
        let t_minus_1 = RatPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        assert_eq!(
            reduce_mod_p(&t_minus_1, 5).unwrap(),
            ModPPoly::from_coeffs(5, vec![4, 1])
        );
        assert_eq!(
            reduce_mod_p(&RatPoly::constant(rat(1, 5)), 5),
            Err(NonPIntegral { prime: 5 })
        );
    }

    #[test]
    fn mod_poly_ops() {
        let p = 7;
        let a = ModPPoly::from_coeffs(p, vec![3, 5]);
        let b = ModPPoly::from_coeffs(p, vec![6, 2]);
        assert_eq!(a.add(&b), ModPPoly::from_coeffs(p, vec![2]));
        assert_eq!(a.sub(&a), ModPPoly::zero(p));
        assert_eq!(a.mul(&b).eval(3), rat::mul_mod(a.eval(3), b.eval(3), p));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(small_rat(), 0..5).prop_map(RatPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, RatPoly::zero());
        }

        #[test]
        fn eval_is_homomorphism(a in small_poly(), b in small_poly(), v in small_rat()) {
            prop_assert_eq!((&a * &b).eval(&v), a.eval(&v) * b.eval(&v));
            prop_assert_eq!((&a + &b).eval(&v), a.eval(&v) + b.eval(&v));
        }

        #[test]
        fn reduction_is_ring_homomorphism(a in small_poly(), b in small_poly()) {
            // denominators up to 9 are coprime to 11
            let p = 11;
            let ra = reduce_mod_p(&a, p).unwrap();
            let rb = reduce_mod_p(&b, p).unwrap();
            prop_assert_eq!(reduce_mod_p(&(&a + &b), p).unwrap(), ra.add(&rb));
            prop_assert_eq!(reduce_mod_p(&(&a * &b), p).unwrap(), ra.mul(&rb));
        }
    }
}
