//! Words over `{x, y}` and the truncated noncommutative series they live in.
//!
//! A word encodes an index exactly when it is empty or starts with `y`,
//! via `(k_1, ..., k_r) <-> y x^{k_1-1} ... y x^{k_r-1}`. `NCPoly` is a
//! finite combination of words with polynomial coefficients in `t`;
//! `NCSeries` is a power series in a second variable `u` with `NCPoly`
//! coefficients, truncated at a fixed order. `u` is structural (array
//! position), `t` stays an exact polynomial variable; nothing here ever
//! mixes the two into a bivariate type.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::index::Index;
use crate::poly::RatPoly;

/// Letters of the word alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

/// Error from word/index conversions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotIndexWord;

impl fmt::Display for NotIndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word does not encode an index (must be empty or start with y)"
        )
    }
}

impl core::error::Error for NotIndexWord {}

/// A word over `{x, y}`, packed as a bit string (bit = 1 means `y`).
///
/// Capacity is 64 letters, far beyond anything the sweeps reach.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u32,
}

impl Word {
    pub fn empty() -> Self {
        Word { bits: 0, len: 0 }
    }

    pub fn x() -> Self {
        Word { bits: 0, len: 1 }
    }

    pub fn y() -> Self {
        Word { bits: 1, len: 1 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letter(&self, i: usize) -> Letter {
        debug_assert!(i < self.len as usize);
        if (self.bits >> i) & 1 == 1 {
            Letter::Y
        } else {
            Letter::X
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len as usize).map(|i| self.letter(i))
    }

    pub fn push(&mut self, l: Letter) {
        assert!(self.len < 64, "word capacity exceeded");
        if l == Letter::Y {
            self.bits |= 1 << self.len;
        }
        self.len += 1;
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        assert!(self.len + other.len <= 64, "word capacity exceeded");
        Word {
            bits: self.bits | (other.bits << self.len),
            len: self.len + other.len,
        }
    }

    /// Reverse the word and swap the letters; the word-level action of the
    /// duality anti-automorphism.
    pub fn reverse_swap(&self) -> Word {
        let mut out = Word::empty();
        for i in (0..self.len as usize).rev() {
            out.push(match self.letter(i) {
                Letter::X => Letter::Y,
                Letter::Y => Letter::X,
            });
        }
        out
    }

    pub fn starts_with_y(&self) -> bool {
        self.len > 0 && self.bits & 1 == 1
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len, self.bits).cmp(&(other.len, other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            match l {
                Letter::X => write!(f, "x")?,
                Letter::Y => write!(f, "y")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "1")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

/// `(k_1, ..., k_r) -> y x^{k_1-1} ... y x^{k_r-1}`.
pub fn word_of_index(k: &Index) -> Word {
    let mut w = Word::empty();
    for &part in k.parts() {
        w.push(Letter::Y);
        for _ in 1..part {
            w.push(Letter::X);
        }
    }
    w
}

/// Inverse of [`word_of_index`]; fails unless the word is empty or starts
/// with `y`.
pub fn index_of_word(w: &Word) -> Result<Index, NotIndexWord> {
    if w.is_empty() {
        return Ok(Index::empty());
    }
    if !w.starts_with_y() {
        return Err(NotIndexWord);
    }
    let mut parts: Vec<u32> = Vec::new();
    for l in w.letters() {
        match l {
            Letter::Y => parts.push(1),
            Letter::X => *parts.last_mut().expect("leading y") += 1,
        }
    }
    Ok(Index::new(parts).expect("parts are positive"))
}

/// Finite combination of words with `RatPoly` coefficients, zero
/// coefficients dropped.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, RatPoly>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        NCPoly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, RatPoly::one());
        p
    }

    pub fn add_term(&mut self, w: Word, c: RatPoly) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &RatPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> RatPoly {
        self.terms.get(w).cloned().unwrap_or_else(RatPoly::zero)
    }

    pub fn add(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(*w, -c);
        }
        out
    }

    pub fn scale(&self, c: &RatPoly) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        let mut out = NCPoly::zero();
        for (w, a) in &self.terms {
            out.add_term(*w, a * c);
        }
        out
    }

    /// Bilinear concatenation product.
    pub fn mul(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]{w:?}")?;
        }
        Ok(())
    }
}

/// Power series in `u` with `NCPoly` coefficients, truncated at a fixed
/// order: `orders[n]` is the coefficient of `u^n`. Arithmetic never
/// consults dropped orders.
#[derive(Clone, PartialEq, Eq)]
pub struct NCSeries {
    orders: Vec<NCPoly>,
}

impl NCSeries {
    /// The zero series truncated at `u^trunc`.
    pub fn zero(trunc: usize) -> Self {
        NCSeries {
            orders: vec![NCPoly::zero(); trunc + 1],
        }
    }

    /// The scalar 1.
    pub fn one(trunc: usize) -> Self {
        let mut s = NCSeries::zero(trunc);
        s.orders[0] = NCPoly::one();
        s
    }

    /// A single term `c * w * u^u_deg`.
    pub fn term(w: Word, c: RatPoly, u_deg: usize, trunc: usize) -> Self {
        let mut s = NCSeries::zero(trunc);
        if u_deg <= trunc {
            s.orders[u_deg].add_term(w, c);
        }
        s
    }

    /// The word `w` at `u^0`.
    pub fn from_word(w: Word, trunc: usize) -> Self {
        NCSeries::term(w, RatPoly::one(), 0, trunc)
    }

    /// Truncation order `U`: coefficients of `u^0 ..= u^U` are kept.
    pub fn trunc(&self) -> usize {
        self.orders.len() - 1
    }

    /// Coefficient of `u^n`.
    pub fn order(&self, n: usize) -> &NCPoly {
        &self.orders[n]
    }

    pub fn order_mut(&mut self, n: usize) -> &mut NCPoly {
        &mut self.orders[n]
    }

    pub fn is_zero(&self) -> bool {
        self.orders.iter().all(NCPoly::is_zero)
    }

    pub fn add(&self, rhs: &NCSeries) -> NCSeries {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation order mismatch");
        NCSeries {
            orders: self
                .orders
                .iter()
                .zip(&rhs.orders)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &NCSeries) -> NCSeries {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> NCSeries {
        NCSeries {
            orders: self.orders.iter().map(NCPoly::neg).collect(),
        }
    }

    pub fn scale(&self, c: &RatPoly) -> NCSeries {
        NCSeries {
            orders: self.orders.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Product; `u`-degrees add and orders beyond the truncation drop.
    pub fn mul(&self, rhs: &NCSeries) -> NCSeries {
        assert_eq!(self.trunc(), rhs.trunc(), "truncation order mismatch");
        let trunc = self.trunc();
        let mut out = NCSeries::zero(trunc);
        for (i, a) in self.orders.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.orders.iter().enumerate() {
                if i + j > trunc {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul(b);
                out.orders[i + j] = out.orders[i + j].add(&prod);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> NCSeries {
        let mut acc = NCSeries::one(self.trunc());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a series of the shape `1 - n` where every term of `n`
    /// carries at least one power of `u`: the truncated geometric series
    /// `sum_{j=0}^{U} n^j`, computed by Horner. Panics when the `u^0`
    /// coefficient is not exactly 1.
    pub fn geom_inverse(&self) -> NCSeries {
        assert!(
            self.orders[0] == NCPoly::one(),
            "geometric inverse needs constant term 1"
        );
        let trunc = self.trunc();
        let n = NCSeries::one(trunc).sub(self); // the correction term
        let mut acc = NCSeries::one(trunc);
        for _ in 0..trunc {
            acc = NCSeries::one(trunc).add(&n.mul(&acc));
        }
        acc
    }
}

impl fmt::Debug for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, p) in self.orders.iter().enumerate() {
            writeln!(f, "u^{n}: {p:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use proptest::prelude::*;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    fn word(s: &str) -> Word {
        let mut w = Word::empty();
        for ch in s.chars() {
            w.push(if ch == 'y' { Letter::Y } else { Letter::X });
        }
        w
    }

    #[test]
    fn word_index_bijection_examples() {
        assert_eq!(word_of_index(&idx(&[2, 1, 3])), word("yxyyxx"));
        assert_eq!(index_of_word(&word("yxx")).unwrap(), idx(&[3]));
        assert_eq!(word_of_index(&Index::empty()), Word::empty());
        assert_eq!(index_of_word(&Word::empty()).unwrap(), Index::empty());
        assert_eq!(index_of_word(&word("xy")), Err(NotIndexWord));
    }

    #[test]
    fn word_display() {
        assert_eq!(alloc::format!("{}", word("yxyx")), "yxyx");
        assert_eq!(alloc::format!("{}", Word::empty()), "");
    }

    #[test]
    fn concat_and_reverse_swap() {
        assert_eq!(Word::y().concat(&Word::x()), word("yx"));
        assert_eq!(word("yxx").reverse_swap(), word("yyx"));
        assert_eq!(word("yxx").reverse_swap().reverse_swap(), word("yxx"));
    }

    #[test]
    fn series_products() {
        // y * x = yx at u^0
        let y = NCSeries::from_word(Word::y(), 2);
        let x = NCSeries::from_word(Word::x(), 2);
        assert_eq!(y.mul(&x), NCSeries::from_word(word("yx"), 2));

        // (y u) * (x u) at U = 1 is dropped entirely
        let yu = NCSeries::term(Word::y(), RatPoly::one(), 1, 1);
        let xu = NCSeries::term(Word::x(), RatPoly::one(), 1, 1);
        assert!(yu.mul(&xu).is_zero());

        // (1 + xu)(1 - xu) = 1 - x^2 u^2 at U = 2
        let one = NCSeries::one(2);
        let xu2 = NCSeries::term(Word::x(), RatPoly::one(), 1, 2);
        let got = one.add(&xu2).mul(&one.sub(&xu2));
        let mut want = NCSeries::one(2);
        want.order_mut(2)
            .add_term(word("xx"), RatPoly::constant(rat_int(-1)));
        assert_eq!(got, want);
    }

    #[test]
    fn geometric_inverse_examples() {
        // (1 - xu)^{-1} = 1 + xu + x^2 u^2 at U = 2
        let one = NCSeries::one(2);
        let xu = NCSeries::term(Word::x(), RatPoly::one(), 1, 2);
        let inv = one.sub(&xu).geom_inverse();
        let mut want = NCSeries::one(2);
        want.order_mut(1).add_term(word("x"), RatPoly::one());
        want.order_mut(2).add_term(word("xx"), RatPoly::one());
        assert_eq!(inv, want);

        // (1 - yu - xtu)^{-1} = 1 + yu + xtu at U = 1
        let one1 = NCSeries::one(1);
        let s = one1
            .sub(&NCSeries::term(Word::y(), RatPoly::one(), 1, 1))
            .sub(&NCSeries::term(Word::x(), RatPoly::t(), 1, 1));
        let inv = s.geom_inverse();
        let mut want = NCSeries::one(1);
        want.order_mut(1).add_term(Word::y(), RatPoly::one());
        want.order_mut(1).add_term(Word::x(), RatPoly::t());
        assert_eq!(inv, want);

        // defining property: s * s^{-1} = 1 up to the truncation order
        assert_eq!(s.mul(&inv), NCSeries::one(1));
    }

    fn any_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 0..=max_len).prop_map(|bools| {
            let mut w = Word::empty();
            for b in bools {
                w.push(if b { Letter::Y } else { Letter::X });
            }
            w
        })
    }

    proptest! {
        #[test]
        fn index_word_round_trip(k in prop::collection::vec(1u32..=5, 0..=6)) {
            let k = Index::new(k).unwrap();
            prop_assert_eq!(index_of_word(&word_of_index(&k)).unwrap(), k);
        }

        #[test]
        fn reverse_swap_is_involution(w in any_word(10)) {
            prop_assert_eq!(w.reverse_swap().reverse_swap(), w);
        }

        #[test]
        fn concat_is_associative(a in any_word(6), b in any_word(6), c in any_word(6)) {
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        }
    }
}
