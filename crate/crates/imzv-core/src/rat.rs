//! Arbitrary-precision rationals and the binomial coefficient convention.
//!
//! `Rat` is `num_rational::BigRational`, which already keeps values in the
//! canonical form this crate relies on (gcd 1, positive denominator). The
//! helpers here cover construction, the `"num/den"` string form used by the
//! JSON encodings, and the generalized binomial coefficient.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational number in canonical form.
pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` as a rational, reduced.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render as `"num/den"` with the denominator always written, e.g. `"1/1"`.
pub fn rat_to_string(x: &Rat) -> String {
    let mut s = x.numer().to_string();
    s.push('/');
    s.push_str(&x.denom().to_string());
    s
}

/// Error from [`parse_rat`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRatError;

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expected an integer or \"num/den\"")
    }
}

impl core::error::Error for ParseRatError {}

/// Parse `"num/den"` or a bare integer into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| ParseRatError)?;
    let den: BigInt = den.trim().parse().map_err(|_| ParseRatError)?;
    if den.is_zero() {
        return Err(ParseRatError);
    }
    Ok(Rat::new(num, den))
}

/// Generalized binomial coefficient `C(a, b)` for integer `a` and `b`.
///
/// Defined as the product of the `b` descending factors of `a` divided by
/// `b!`, and 0 for `b < 0`. For `a >= 0` this is the ordinary binomial
/// coefficient (0 when `b > a`); in particular `C(n-1, n)` is 1 for `n = 0`
/// and 0 for `n >= 1`, the convention the interpolation coefficients rely
/// on. For `a < 0` it extrapolates to the usual generalized value, e.g.
/// `C(-1, 1) = -1`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// [`binom`] as a rational.
pub fn binom_rat(a: i64, b: i64) -> Rat {
    Rat::from_integer(binom(a, b))
}

/// `(-1)^n` as a rational.
pub fn sign(n: u32) -> Rat {
    if n % 2 == 0 {
        rat_int(1)
    } else {
        rat_int(-1)
    }
}

/// True when the denominator is not divisible by `p`.
pub fn is_p_integral(x: &Rat, p: u64) -> bool {
    !(x.denom() % BigInt::from(p)).is_zero()
}

/// Reduce a p-integral rational modulo the prime `p`, mapping `n/d` to
/// `n * d^{-1} mod p`. Returns `None` when `p` divides the denominator.
pub fn rat_mod_p(x: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = ((x.denom() % &pb) + &pb) % &pb;
    let den_u = u64::try_from(&den).ok()?;
    if den_u == 0 {
        return None;
    }
    let num = ((x.numer() % &pb) + &pb) % &pb;
    let num_u = u64::try_from(&num).expect("reduced residue fits in u64");
    Some(mul_mod(num_u, inv_mod(den_u, p), p))
}

/// `a * b mod p` without overflow for `p < 2^32`.
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(p < (1 << 32));
    (a % p) * (b % p) % p
}

/// `a^e mod p` by binary exponentiation.
pub fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p` (Fermat).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        assert_eq!(rat_to_string(&rat_int(1)), "1/1");
        assert_eq!(rat_to_string(&rat(-2, 4)), "-1/2");
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn binom_ordinary_cases() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(4, 0), BigInt::from(1));
        assert_eq!(binom(3, 5), BigInt::from(0));
        assert_eq!(binom(3, -1), BigInt::from(0));
    }

    #[test]
    fn binom_pinned_convention() {
        // C(n-1, n) = 1 iff n = 0
        assert_eq!(binom(-1, 0), BigInt::from(1));
        for n in 1..8 {
            assert_eq!(binom(n - 1, n), BigInt::from(0), "n = {n}");
        }
    }

    #[test]
    fn binom_negative_upper() {
        // documented extrapolation: C(-1, e) = (-1)^e, C(-2, 1) = -2
        assert_eq!(binom(-1, 1), BigInt::from(-1));
        assert_eq!(binom(-1, 2), BigInt::from(1));
        assert_eq!(binom(-2, 1), BigInt::from(-2));
    }

    #[test]
    fn modular_reduction() {
        // 1/6 mod 7: 6 * 6 = 36 = 1 mod 7
        assert_eq!(rat_mod_p(&rat(1, 6), 7), Some(6));
        assert_eq!(rat_mod_p(&rat(1, 5), 5), None);
        assert_eq!(rat_mod_p(&rat(-1, 3), 5), Some(3));
    }

    #[test]
    fn modular_inverse() {
        for p in [5u64, 7, 11, 13] {
            for a in 1..p {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }
}
