//! Bernoulli numbers as exact rationals.
//!
//! Computed from the defining recurrence
//! `sum_{k=0}^{n} C(n+1, k) B_k = 0` with `B_0 = 1`, so `B_1 = -1/2`.
//! Only `B_0` and the even-indexed values are ever consumed downstream
//! (the finite zeta analogue reaches `B_{p-k}` with `p - k` even); the odd
//! values beyond `B_1` are zero.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::rat::{binom_rat, rat_int, Rat};

/// Bernoulli numbers `B_0 ..= B_n`, precomputed once and then shared
/// read-only across any number of workers.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rat>,
}

impl BernoulliTable {
    /// Precompute `B_0, ..., B_n`.
    pub fn up_to(n: usize) -> Self {
        let mut values = Vec::with_capacity(n + 1);
        values.push(rat_int(1));
        for m in 1..=n {
            if m > 1 && m % 2 == 1 {
                values.push(rat_int(0));
                continue;
            }
            // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k
            let mut acc = rat_int(0);
            for (k, b) in values.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc += binom_rat(m as i64 + 1, k as i64) * b;
            }
            values.push(-acc / rat_int(m as i64 + 1));
        }
        BernoulliTable { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `B_n`; panics when `n` is beyond the precomputed range.
    pub fn get(&self, n: usize) -> &Rat {
        &self.values[n]
    }
}

/// `B_n` computed on the fly. For repeated queries build a
/// [`BernoulliTable`] instead.
pub fn bernoulli(n: usize) -> Rat {
    BernoulliTable::up_to(n).get(n).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::One;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        let table = BernoulliTable::up_to(50);
        for n in (3..=49).step_by(2) {
            assert!(table.get(n).is_zero(), "B_{n} should vanish");
        }
    }

    #[test]
    fn von_staudt_clausen_denominators() {
        // denominator of B_{2m} is the product of the primes p with
        // (p - 1) | 2m; an independent description of the recurrence output
        let table = BernoulliTable::up_to(50);
        let primes: Vec<u64> = (2..=53).filter(|&n| crate::finite::is_prime(n)).collect();
        for m in 1..=25usize {
            let want: BigInt = primes
                .iter()
                .filter(|&&p| (2 * m) % (p as usize - 1) == 0)
                .fold(BigInt::one(), |acc, &p| acc * BigInt::from(p));
            assert_eq!(table.get(2 * m).denom(), &want, "B_{}", 2 * m);
        }
    }

    #[test]
    fn denominators_are_squarefree() {
        let table = BernoulliTable::up_to(50);
        for m in 1..=25usize {
            let den = table.get(2 * m).denom().clone();
            for p in 2u64..=60 {
                let p2 = BigInt::from(p) * BigInt::from(p);
                assert!(!den.is_multiple_of(&p2), "B_{} denominator", 2 * m);
            }
        }
    }
}
