//! The substitution automorphism, the duality anti-automorphism, and the
//! generating-function identities of the expanded kernel.
//!
//! `sigma` is the algebra map fixing `x` and sending `y` to
//! `y (1 - xu)^{-1}`; applied to the splitting series `X(k)` it generates
//! the expanded kernels: the coefficient of `u^m` in `sigma(X(k))` is the
//! word image of `h_m(k; t)`. `tau` reverses words and swaps the letters;
//! it realizes the duality transform on index words, and the composite
//! `tau . sigma . tau` applied to `X(k)` generates the interpolated
//! right-hand sides of the Ohno-type relation.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::index::{compositions, positive_compositions, Index};
use crate::index_sum::IndexSum;
use crate::interp::{block_shapes, h_poly};
use crate::poly::RatPoly;
use crate::rat::{binom, Rat};
use crate::words::{index_of_word, word_of_index, Letter, NCPoly, NCSeries, NotIndexWord, Word};

/// `sigma(y)` as a truncated series: `y + yx u + yx^2 u^2 + ...`.
fn sigma_y(trunc: usize) -> NCSeries {
    let mut out = NCSeries::zero(trunc);
    let mut w = Word::y();
    for n in 0..=trunc {
        out.order_mut(n).add_term(w, RatPoly::one());
        w.push(Letter::X);
    }
    out
}

/// The substitution automorphism: `x -> x`, `y -> y (1 - xu)^{-1}`,
/// extended multiplicatively to words, linearly over coefficients, and
/// order by order in `u`. Truncation is preserved.
pub fn sigma(s: &NCSeries) -> NCSeries {
    let trunc = s.trunc();
    let sig_y = sigma_y(trunc);
    let x = NCSeries::from_word(Word::x(), trunc);
    let mut out = NCSeries::zero(trunc);
    for n in 0..=trunc {
        for (w, c) in s.order(n).iter() {
            let mut image = NCSeries::one(trunc);
            for l in w.letters() {
                image = image.mul(match l {
                    Letter::X => &x,
                    Letter::Y => &sig_y,
                });
            }
            // multiply by c u^n, dropping overflowing orders
            for i in 0..=trunc - n {
                for (iw, ic) in image.order(i).iter() {
                    out.order_mut(n + i).add_term(*iw, ic * c);
                }
            }
        }
    }
    out
}

/// The duality anti-automorphism: reverse each word and swap `x` with `y`;
/// coefficients in `t` and `u` are untouched.
pub fn tau(s: &NCSeries) -> NCSeries {
    let trunc = s.trunc();
    let mut out = NCSeries::zero(trunc);
    for n in 0..=trunc {
        for (w, c) in s.order(n).iter() {
            out.order_mut(n).add_term(w.reverse_swap(), c.clone());
        }
    }
    out
}

/// The interpolation map on an index word: keep the leading `y`, replace
/// every later `y` by `y + t x`.
pub fn interp_word(w: &Word) -> Result<NCPoly, NotIndexWord> {
    if w.is_empty() {
        return Ok(NCPoly::one());
    }
    if !w.starts_with_y() {
        return Err(NotIndexWord);
    }
    let mut acc: Vec<(Word, RatPoly)> = Vec::new();
    acc.push((Word::y(), RatPoly::one()));
    for l in w.letters().skip(1) {
        match l {
            Letter::X => {
                for (w, _) in acc.iter_mut() {
                    w.push(Letter::X);
                }
            }
            Letter::Y => {
                let mut next = Vec::with_capacity(acc.len() * 2);
                for (w, c) in acc {
                    let mut wy = w;
                    wy.push(Letter::Y);
                    next.push((wy, c.clone()));
                    let mut wx = w;
                    wx.push(Letter::X);
                    next.push((wx, &c * &RatPoly::t()));
                }
                acc = next;
            }
        }
    }
    let mut out = NCPoly::zero();
    for (w, c) in acc {
        out.add_term(w, c);
    }
    Ok(out)
}

/// [`interp_word`] applied to every word of every `u`-order.
pub fn interp_words(s: &NCSeries) -> Result<NCSeries, NotIndexWord> {
    let trunc = s.trunc();
    let mut out = NCSeries::zero(trunc);
    for n in 0..=trunc {
        for (w, c) in s.order(n).iter() {
            for (iw, ic) in interp_word(w)?.iter() {
                out.order_mut(n).add_term(*iw, ic * c);
            }
        }
    }
    Ok(out)
}

/// An index sum transported through the index/word bijection.
pub fn ncpoly_of_index_sum(s: &IndexSum) -> NCPoly {
    let mut out = NCPoly::zero();
    for (k, c) in s.iter() {
        out.add_term(word_of_index(k), c.clone());
    }
    out
}

/// The splitting series `X(k)`, from its defining sum: over splittings of
/// `k` into `l` consecutive blocks and exponent vectors `e`, the word
/// `y x^{wt(b_1)+e_1-1} ... y x^{wt(b_l)+e_l-1}` weighted by
/// `t^{r-l} (tu)^{wt(e)}` and the same binomial product as the expanded
/// kernel.
pub fn x_series_direct(k: &Index, trunc: usize) -> NCSeries {
    assert!(!k.is_empty(), "the splitting series needs a non-empty index");
    let r = k.depth();
    let parts = k.parts();
    let mut out = NCSeries::zero(trunc);
    for l in 1..=r {
        for lens in positive_compositions(r as u32, l) {
            let shapes = block_shapes(parts, &lens);
            for n in 0..=trunc {
                for e in compositions(n as u32, l) {
                    let mut prod = BigInt::one();
                    for (j, &(wt, dep)) in shapes.iter().enumerate() {
                        let first = if j == 0 { 1 } else { 0 };
                        let ej = e.entries()[j] as i64;
                        prod *= binom(wt - dep as i64 + ej + first - 2, ej);
                        if prod.is_zero() {
                            break;
                        }
                    }
                    if prod.is_zero() {
                        continue;
                    }
                    let mut w = Word::empty();
                    for (&(wt, _), &ej) in shapes.iter().zip(e.entries()) {
                        w.push(Letter::Y);
                        for _ in 1..(wt as u32 + ej) {
                            w.push(Letter::X);
                        }
                    }
                    let coeff = RatPoly::monomial(Rat::from_integer(prod), r - l + n);
                    out.order_mut(n).add_term(w, coeff);
                }
            }
        }
    }
    out
}

/// The splitting series from its closed product form:
/// `X(k) = y B^{k_1 - 1} prod_{l >= 2} { (y (1 - xtu) + xt) B^{k_l - 1} }`
/// with `B = x (1 - xtu)^{-1}`. Must agree with [`x_series_direct`].
pub fn x_series_closed(k: &Index, trunc: usize) -> NCSeries {
    assert!(!k.is_empty(), "the splitting series needs a non-empty index");
    let one = NCSeries::one(trunc);
    let xtu = NCSeries::term(Word::x(), RatPoly::t(), 1, trunc);
    let base = NCSeries::from_word(Word::x(), trunc).mul(&one.sub(&xtu).geom_inverse());
    let y = NCSeries::from_word(Word::y(), trunc);
    let xt = NCSeries::term(Word::x(), RatPoly::t(), 0, trunc);

    let parts = k.parts();
    let mut out = y.mul(&base.pow(parts[0] as usize - 1));
    for &kl in &parts[1..] {
        let factor = y.mul(&one.sub(&xtu)).add(&xt);
        out = out.mul(&factor).mul(&base.pow(kl as usize - 1));
    }
    out
}

/// Closed form of the generating function of the expanded kernels:
/// `sum_m h_m(k; t) u^m
///  = y (1-xu)^{-1} B^{k_1-1}
///    prod_{l >= 2} { (y (1-xtu)(1-xu)^{-1} + xt) B^{k_l-1} }`
/// with `B = x (1 - xtu)^{-1}`. Equals `sigma(X(k))` and the order-by-order
/// word image of [`h_poly`].
pub fn kernel_genfun_closed(k: &Index, trunc: usize) -> NCSeries {
    assert!(!k.is_empty(), "the generating function needs a non-empty index");
    let one = NCSeries::one(trunc);
    let xu = NCSeries::term(Word::x(), RatPoly::one(), 1, trunc);
    let xtu = NCSeries::term(Word::x(), RatPoly::t(), 1, trunc);
    let inv_xu = one.sub(&xu).geom_inverse();
    let base = NCSeries::from_word(Word::x(), trunc).mul(&one.sub(&xtu).geom_inverse());
    let y = NCSeries::from_word(Word::y(), trunc);
    let xt = NCSeries::term(Word::x(), RatPoly::t(), 0, trunc);

    let parts = k.parts();
    let mut out = y.mul(&inv_xu).mul(&base.pow(parts[0] as usize - 1));
    for &kl in &parts[1..] {
        let factor = y.mul(&one.sub(&xtu)).mul(&inv_xu).add(&xt);
        out = out.mul(&factor).mul(&base.pow(kl as usize - 1));
    }
    out
}

/// `sum_{m <= U} u^m * word(h_m(k; t))`, the generating function assembled
/// from the expanded kernel itself.
pub fn kernel_series(k: &Index, trunc: usize) -> NCSeries {
    let mut out = NCSeries::zero(trunc);
    for m in 0..=trunc {
        *out.order_mut(m) = ncpoly_of_index_sum(&h_poly(m as i64, k));
    }
    out
}

/// `tau . sigma . tau` applied to the closed splitting series. For an
/// admissible index its `u^m` coefficient is the word image of the
/// interpolated Ohno-type right-hand side at shift `m`.
pub fn dual_side_series(k: &Index, trunc: usize) -> NCSeries {
    assert!(
        k.is_admissible() && !k.is_empty(),
        "the dual-side series needs a non-empty admissible index"
    );
    tau(&sigma(&tau(&x_series_closed(k, trunc))))
}

/// Duality transported through words: `index_of_word . tau . word_of_index`
/// agrees with the block-transform dual on admissible indices.
pub fn tau_realizes_dual(k: &Index) -> bool {
    let via_words = index_of_word(&word_of_index(k).reverse_swap());
    via_words.ok() == k.dual().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::admissible_up_to_weight;
    use crate::interp::{interpolate_index, ohno_rhs};
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
    fn sigma_on_generators() {
        // sigma(y) = y + yx u + yx^2 u^2
        let got = sigma(&NCSeries::from_word(Word::y(), 2));
        let mut want = NCSeries::from_word(Word::y(), 2);
        want.order_mut(1).add_term(word("yx"), RatPoly::one());
        want.order_mut(2).add_term(word("yxx"), RatPoly::one());
        assert_eq!(got, want);

        // sigma(x) = x
        let x = NCSeries::from_word(Word::x(), 3);
        assert_eq!(sigma(&x), x);
    }

    #[test]
    fn sigma_shifts_index_words() {
        // u^1 coefficient of sigma(yx) is the word of (3)
        let got = sigma(&NCSeries::from_word(word("yx"), 2));
        assert_eq!(got.order(1).coeff(&word("yxx")), RatPoly::one());
        assert_eq!(got.order(1).iter().count(), 1);
    }

    #[test]
    fn tau_examples() {
        let s = NCSeries::from_word(word("yxx"), 1);
        assert_eq!(tau(&s), NCSeries::from_word(word("yyx"), 1));
        assert_eq!(tau(&tau(&s)), s);
    }

    #[test]
    fn interp_word_examples() {
        // yy -> yy + t yx, the word form of I^t(1,1)
        let got = interp_word(&word("yy")).unwrap();
        let mut want = NCPoly::from_word(word("yy"));
        want.add_term(word("yx"), RatPoly::t());
        assert_eq!(got, want);

        assert_eq!(interp_word(&Word::y()).unwrap(), NCPoly::from_word(Word::y()));
        assert!(interp_word(&word("xy")).is_err());
    }

    #[test]
    fn interp_word_transports_interpolation() {
        for k in crate::index::indices_up_to_weight(5) {
            let via_words = interp_word(&word_of_index(&k)).unwrap();
            let via_indices = ncpoly_of_index_sum(&interpolate_index(&k));
            assert_eq!(via_words, via_indices, "k = {k}");
        }
    }

    #[test]
    fn x_series_depth_one_collapses() {
        // X((1)) = y at every truncation
        for trunc in 0..=3 {
            let want = NCSeries::from_word(Word::y(), trunc);
            assert_eq!(x_series_direct(&idx(&[1]), trunc), want);
            assert_eq!(x_series_closed(&idx(&[1]), trunc), want);
        }
    }

    #[test]
    fn x_series_closed_small_expansion() {
        // X((2)) at U=1: yx + t yx^2 u
        let got = x_series_closed(&idx(&[2]), 1);
        let mut want = NCSeries::from_word(word("yx"), 1);
        want.order_mut(1).add_term(word("yxx"), RatPoly::t());
        assert_eq!(got, want);
        assert_eq!(x_series_direct(&idx(&[2]), 1), want);
    }

    #[test]
    fn genfun_closed_depth_one() {
        // k = (1): y(1-xu)^{-1}, so u^m coefficient is the word of (1+m)
        let got = kernel_genfun_closed(&idx(&[1]), 3);
        for m in 0..=3u32 {
            let w = word_of_index(&idx(&[1 + m]));
            assert_eq!(got.order(m as usize).coeff(&w), RatPoly::one());
            assert_eq!(got.order(m as usize).iter().count(), 1);
        }
    }

    #[test]
    fn genfun_closed_matches_kernel() {
        // u^1 coefficient for k = (2) is (1+t) yxx
        let got = kernel_genfun_closed(&idx(&[2]), 1);
        assert_eq!(
            got.order(1).coeff(&word("yxx")),
            RatPoly::from_coeffs([rat_int(1), rat_int(1)].to_vec())
        );
        // u^0 coefficient is the word image of I^t(k)
        for k in crate::index::indices_up_to_weight(4) {
            let series = kernel_genfun_closed(&k, 1);
            assert_eq!(
                series.order(0),
                &ncpoly_of_index_sum(&interpolate_index(&k)),
                "k = {k}"
            );
        }
    }

    #[test]
    fn genfun_three_way_small() {
        for k in [idx(&[1, 2]), idx(&[2, 1]), idx(&[3])] {
            let trunc = 3;
            let via_sigma = sigma(&x_series_closed(&k, trunc));
            let via_closed = kernel_genfun_closed(&k, trunc);
            let via_kernel = kernel_series(&k, trunc);
            assert_eq!(via_sigma, via_closed, "k = {k}");
            assert_eq!(via_closed, via_kernel, "k = {k}");
        }
    }

    #[test]
    fn dual_side_small() {
        // k = (2): u^0 is yx, u^1 is word(1,2) + t word(3)
        let got = dual_side_series(&idx(&[2]), 1);
        assert_eq!(got.order(0), &NCPoly::from_word(word("yx")));
        let mut want = NCPoly::from_word(word("yyx"));
        want.add_term(word("yxx"), RatPoly::t());
        assert_eq!(got.order(1), &want);
    }

    #[test]
    fn dual_side_matches_ohno_rhs() {
        for k in [idx(&[2]), idx(&[1, 2]), idx(&[3])] {
            let trunc = 3;
            let series = dual_side_series(&k, trunc);
            for m in 0..=trunc {
                let rhs = ohno_rhs(&k, m as u32, true).unwrap();
                assert_eq!(
                    series.order(m),
                    &ncpoly_of_index_sum(&rhs),
                    "k = {k}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn tau_transports_duality() {
        assert!(tau_realizes_dual(&Index::empty()));
        for k in admissible_up_to_weight(8) {
            assert!(tau_realizes_dual(&k), "k = {k}");
        }
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
        fn sigma_is_multiplicative(a in any_word(5), b in any_word(5)) {
            let trunc = 3;
            let sa = NCSeries::from_word(a, trunc);
            let sb = NCSeries::from_word(b, trunc);
            prop_assert_eq!(sigma(&sa.mul(&sb)), sigma(&sa).mul(&sigma(&sb)));
        }

        #[test]
        fn tau_is_anti_multiplicative(a in any_word(5), b in any_word(5)) {
            let trunc = 2;
            let sa = NCSeries::from_word(a, trunc);
            let sb = NCSeries::from_word(b, trunc);
            prop_assert_eq!(tau(&sa.mul(&sb)), tau(&sb).mul(&tau(&sa)));
            prop_assert_eq!(tau(&tau(&sa)), sa);
        }
    }
}
