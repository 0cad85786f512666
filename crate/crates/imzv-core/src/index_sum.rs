//! Finite formal sums of indices with polynomial coefficients.
//!
//! An `IndexSum` is a canonical map from indices to nonzero `RatPoly`
//! coefficients, so `==` on two sums is exactly equality of formal linear
//! combinations. Every identity check in this crate bottoms out in such an
//! equality.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::index::{Index, IndexError};
use crate::poly::RatPoly;
use crate::rat::Rat;

/// Formal linear combination of indices over the polynomial ring in `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IndexSum {
    terms: BTreeMap<Index, RatPoly>,
}

impl IndexSum {
    pub fn zero() -> Self {
        IndexSum {
            terms: BTreeMap::new(),
        }
    }

    /// The single term `1 * k`.
    pub fn from_index(k: Index) -> Self {
        let mut s = IndexSum::zero();
        s.add_term(k, RatPoly::one());
        s
    }

    /// Add `c * k` into the sum, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, k: Index, c: RatPoly) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of indices with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `k` (zero when absent).
    pub fn coeff(&self, k: &Index) -> RatPoly {
        self.terms.get(k).cloned().unwrap_or_else(RatPoly::zero)
    }

    /// Terms in ascending lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (&Index, &RatPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &RatPoly) -> IndexSum {
        if c.is_zero() {
            return IndexSum::zero();
        }
        let mut out = IndexSum::zero();
        for (k, a) in &self.terms {
            out.add_term(k.clone(), a * c);
        }
        out
    }

    /// Apply a map to every support index, multiplying coefficients into the
    /// image. The map must be injective-or-merging; merges are added.
    fn map_indices<F>(&self, f: F) -> Result<IndexSum, IndexError>
    where
        F: Fn(&Index) -> Result<Index, IndexError>,
    {
        let mut out = IndexSum::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k)?, c.clone());
        }
        Ok(out)
    }

    /// Raise the last entry of every support index.
    pub fn arrow_up(&self) -> Result<IndexSum, IndexError> {
        self.map_indices(Index::arrow_up)
    }

    /// Append a trailing 1 to every support index.
    pub fn arrow_right(&self) -> Result<IndexSum, IndexError> {
        self.map_indices(Index::arrow_right)
    }

    /// Lower the last entry of every support index; every support index must
    /// be admissible and non-empty.
    pub fn arrow_down(&self) -> Result<IndexSum, IndexError> {
        self.map_indices(Index::arrow_down)
    }

    /// Evaluate every coefficient at `v`, dropping terms that vanish.
    pub fn specialize(&self, v: &Rat) -> BTreeMap<Index, Rat> {
        use num_traits::Zero;
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let val = c.eval(v);
            if !val.is_zero() {
                out.insert(k.clone(), val);
            }
        }
        out
    }

    /// The distinct (weight, depth) pairs over the support.
    pub fn support_shapes(&self) -> Vec<(u32, usize)> {
        let mut shapes: Vec<(u32, usize)> = self
            .terms
            .keys()
            .map(|k| (k.weight(), k.depth()))
            .collect();
        shapes.sort_unstable();
        shapes.dedup();
        shapes
    }
}

impl Add for &IndexSum {
    type Output = IndexSum;
    fn add(self, rhs: &IndexSum) -> IndexSum {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IndexSum {
    type Output = IndexSum;
    fn sub(self, rhs: &IndexSum) -> IndexSum {
        self + &(-rhs)
    }
}

impl Neg for &IndexSum {
    type Output = IndexSum;
    fn neg(self) -> IndexSum {
        let mut out = IndexSum::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl FromIterator<(Index, RatPoly)> for IndexSum {
    fn from_iter<T: IntoIterator<Item = (Index, RatPoly)>>(iter: T) -> Self {
        let mut out = IndexSum::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl fmt::Debug for IndexSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use alloc::vec;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut s = IndexSum::from_index(idx(&[2]));
        s.add_term(idx(&[2]), RatPoly::constant(rat_int(-1)));
        assert!(s.is_zero());
        s.add_term(idx(&[3]), RatPoly::zero());
        assert!(s.is_zero());
    }

    #[test]
    fn specialize_examples() {
        // (1,1) + t*(2)
        let mut s = IndexSum::from_index(idx(&[1, 1]));
        s.add_term(idx(&[2]), RatPoly::t());

        let at0 = s.specialize(&rat_int(0));
        assert_eq!(at0.len(), 1);
        assert_eq!(at0[&idx(&[1, 1])], rat_int(1));

        let at1 = s.specialize(&rat_int(1));
        assert_eq!(at1.len(), 2);
        assert_eq!(at1[&idx(&[2])], rat_int(1));

        // (1+t)*(3) at t = 1/2
        let s = IndexSum::from_index(idx(&[3])).scale(&RatPoly::from_coeffs(vec![
            rat_int(1),
            rat_int(1),
        ]));
        let at_half = s.specialize(&crate::rat::rat(1, 2));
        assert_eq!(at_half[&idx(&[3])], crate::rat::rat(3, 2));
    }

    #[test]
    fn arrows_are_linear() {
        let mut s = IndexSum::from_index(idx(&[1, 2]));
        s.add_term(idx(&[3]), RatPoly::t());
        let up = s.arrow_up().unwrap();
        assert_eq!(up.coeff(&idx(&[1, 3])), RatPoly::one());
        assert_eq!(up.coeff(&idx(&[4])), RatPoly::t());
        // lowering merges are still sums
        assert_eq!(
            s.arrow_down().unwrap().coeff(&idx(&[1, 1])),
            RatPoly::one()
        );
        let with_empty: IndexSum = IndexSum::from_index(Index::empty());
        assert!(with_empty.arrow_up().is_err());
    }
}
