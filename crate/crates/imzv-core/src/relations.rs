//! The polynomial identities between kernels, checked as exact equalities.
//!
//! Each function here builds the two sides of one identity as formal data
//! (index sums, coefficient maps, or polynomials) by *independent* routes,
//! so that comparing them with `==` is a real check. The production path is
//! always the defining sum; the recurrences and closed forms are only ever
//! used as cross-checks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::index::{compositions, Index, IndexError};
use crate::index_sum::IndexSum;
use crate::interp::{c1_coeff, f_coeff, g_interp, g_poly, h_poly, interpolate_index};
use crate::poly::RatPoly;
use crate::rat::{rat_int, Rat};

/// Two formal sums that an identity claims are equal.
#[derive(Clone, Debug)]
pub struct Sides {
    pub lhs: IndexSum,
    pub rhs: IndexSum,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Kernel flavor a recurrence applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kernel {
    /// The defining kernel `g`.
    Plain,
    /// Its interpolated image `I^t(g)`.
    Interp,
    /// The expanded form `h`.
    Expanded,
}

impl Kernel {
    fn eval(self, m: i64, k: &Index) -> IndexSum {
        match self {
            Kernel::Plain => g_poly(m, k),
            Kernel::Interp => g_interp(m, k),
            Kernel::Expanded => h_poly(m, k),
        }
    }
}

/// Base case: the kernel of the depth-one index `(1)` collapses to the
/// single index `(1 + m)`. Holds for each of the three kernels.
pub fn base_sides(kernel: Kernel, m: i64) -> Sides {
    let one = Index::single(1);
    let lhs = kernel.eval(m, &one);
    let rhs = IndexSum::from_index(Index::single(1 + m as u32));
    Sides { lhs, rhs }
}

/// Raising recurrence:
/// `K_m(up(k)) = up(K_m(k)) + t * up(K_{m-1}(up(k)))`,
/// the same shape for all three kernels. The plain kernel satisfies it for
/// `m >= 1`, the other two for `m >= 0`.
pub fn up_sides(kernel: Kernel, k: &Index, m: i64) -> Result<Sides, IndexError> {
    let ku = k.arrow_up()?;
    let lhs = kernel.eval(m, &ku);
    let rhs = &kernel.eval(m, k).arrow_up()?
        + &kernel.eval(m - 1, &ku).arrow_up()?.scale(&RatPoly::t());
    Ok(Sides { lhs, rhs })
}

/// Appending recurrence. For the plain kernel:
/// `g_m(r(k)) = (1-t) up(g_m(k)) + r(g_m(k)) - (1-t) g_m(up(k))
///  + (1-t) g_{m-1}(up(r(k)))`,
/// where `r` appends a trailing 1; for the interpolated and expanded
/// kernels the first term loses its `(1-t)` factor.
pub fn right_sides(kernel: Kernel, k: &Index, m: i64) -> Result<Sides, IndexError> {
    let kr = k.arrow_right()?;
    let ku = k.arrow_up()?;
    let kru = kr.arrow_up()?;
    let one_minus_t = RatPoly::one_minus_t();

    let lhs = kernel.eval(m, &kr);
    let at_k = kernel.eval(m, k);
    let first = match kernel {
        Kernel::Plain => at_k.arrow_up()?.scale(&one_minus_t),
        Kernel::Interp | Kernel::Expanded => at_k.arrow_up()?,
    };
    let rhs = &(&(&first + &at_k.arrow_right()?) - &kernel.eval(m, &ku).scale(&one_minus_t))
        + &kernel.eval(m - 1, &kru).scale(&one_minus_t);
    Ok(Sides { lhs, rhs })
}

/// All recurrences that apply to `(k, m)`, labeled. The plain raising
/// recurrence is skipped at `m = 0`.
pub fn recurrence_checks(k: &Index, m: i64) -> Result<Vec<(&'static str, Sides)>, IndexError> {
    let mut out = Vec::new();
    out.push(("g-base", base_sides(Kernel::Plain, m)));
    out.push(("g-interp-base", base_sides(Kernel::Interp, m)));
    out.push(("h-base", base_sides(Kernel::Expanded, m)));
    if m >= 1 {
        out.push(("g-up", up_sides(Kernel::Plain, k, m)?));
    }
    out.push(("g-interp-up", up_sides(Kernel::Interp, k, m)?));
    out.push(("h-up", up_sides(Kernel::Expanded, k, m)?));
    out.push(("g-right", right_sides(Kernel::Plain, k, m)?));
    out.push(("g-interp-right", right_sides(Kernel::Interp, k, m)?));
    out.push(("h-right", right_sides(Kernel::Expanded, k, m)?));
    Ok(out)
}

/// The interpolated kernel equals the expanded kernel: `I^t(g_m) = h_m`.
/// The left side goes through the defining triple sum and the interpolation
/// map, the right through the double-exponent expansion.
pub fn kernel_equality_sides(k: &Index, m: i64) -> Sides {
    Sides {
        lhs: g_interp(m, k),
        rhs: h_poly(m, k),
    }
}

/// The four-term merge-weight identity:
/// `f_{i+1}(k+1, e) - (1-t) f_{i+1}(k+2, e) + f_i(k, e) - f_i(k+1, e)`
/// vanishes identically for `k >= 1` and `e, i >= 0`. Returns the
/// combination, which must be the zero polynomial.
pub fn four_term_combination(k: i64, e: i64, i: usize) -> RatPoly {
    let a = f_coeff(i + 1, k + 1, e);
    let b = &RatPoly::one_minus_t() * &f_coeff(i + 1, k + 2, e);
    let c = f_coeff(i, k, e);
    let d = f_coeff(i, k + 1, e);
    &(&(&a - &b) + &c) - &d
}

/// Specializations of the plain kernel at `t = 0` and `t = 1`: each pair
/// holds the kernel evaluation and its closed combinatorial description
/// (the plain composition-shift sum, and the `c1`-weighted one).
#[derive(Clone, Debug)]
pub struct SpecializationCheck {
    pub at_zero: (BTreeMap<Index, Rat>, BTreeMap<Index, Rat>),
    pub at_one: (BTreeMap<Index, Rat>, BTreeMap<Index, Rat>),
}

impl SpecializationCheck {
    pub fn holds(&self) -> bool {
        self.at_zero.0 == self.at_zero.1 && self.at_one.0 == self.at_one.1
    }
}

/// Evaluate `g_m(k; t)` at `t = 0` and `t = 1` and pair each with its
/// closed combinatorial description.
pub fn specialization_check(k: &Index, m: u32) -> Result<SpecializationCheck, IndexError> {
    let kernel = g_poly(m as i64, k);
    let mut zero_side: BTreeMap<Index, Rat> = BTreeMap::new();
    let mut one_side: BTreeMap<Index, Rat> = BTreeMap::new();
    for e in compositions(m, k.depth()) {
        let shifted = k.oplus(&e)?;
        *zero_side.entry(shifted.clone()).or_insert_with(|| rat_int(0)) += rat_int(1);
        let c = c1_coeff(k, &e)?;
        if !c.is_zero() {
            *one_side.entry(shifted).or_insert_with(|| rat_int(0)) += c;
        }
    }
    zero_side.retain(|_, v| !v.is_zero());
    one_side.retain(|_, v| !v.is_zero());
    Ok(SpecializationCheck {
        at_zero: (kernel.specialize(&rat_int(0)), zero_side),
        at_one: (kernel.specialize(&rat_int(1)), one_side),
    })
}

/// Depth-one closed form: `g_m((k); t) = f_0(k+1, m) * (k+m)`.
pub fn depth1_sides(k: u32, m: u32) -> Sides {
    let lhs = g_poly(m as i64, &Index::single(k));
    let rhs =
        IndexSum::from_index(Index::single(k + m)).scale(&f_coeff(0, k as i64 + 1, m as i64));
    Sides { lhs, rhs }
}

/// Depth-two closed form for the interpolated kernel:
/// `I^t(g_m((k1,k2); t)) = -t(1-t) f_1(k1+k2+1, m) * (k1+k2+m)
///  + sum_{e1+e2=m} f_0(k1+1, e1) f_0(k2, e2)
///    { (k1+e1, k2+e2) + t * (k1+k2+m) }`.
pub fn depth2_sides(k1: u32, k2: u32, m: u32) -> Sides {
    let k = Index::new([k1, k2].to_vec()).expect("positive entries");
    let lhs = g_interp(m as i64, &k);

    let total = Index::single(k1 + k2 + m);
    let minus_t_1mt = -&(&RatPoly::t() * &RatPoly::one_minus_t());
    let mut rhs = IndexSum::from_index(total.clone())
        .scale(&(&minus_t_1mt * &f_coeff(1, (k1 + k2) as i64 + 1, m as i64)));
    for e in compositions(m, 2) {
        let (e1, e2) = (e.entries()[0], e.entries()[1]);
        let w = &f_coeff(0, k1 as i64 + 1, e1 as i64) * &f_coeff(0, k2 as i64, e2 as i64);
        if w.is_zero() {
            continue;
        }
        let pair = Index::new([k1 + e1, k2 + e2].to_vec()).expect("positive entries");
        let mut inner = IndexSum::from_index(pair);
        inner.add_term(total.clone(), RatPoly::t());
        rhs = &rhs + &inner.scale(&w);
    }
    Sides { lhs, rhs }
}

/// The bridge between the duality transform and the Hoffman dual that
/// transports the Ohno-type relation to the finite setting: for admissible
/// non-empty `k` and every `m`, the multisets
/// `{ hd(hd(down(k)) oplus e) }` and `{ down(dual(dual(k) oplus e)) }`
/// coincide, where `hd` is the Hoffman dual and the exponent vectors run
/// over weight `m` with the matching depths.
pub fn dual_bridge_sides(k: &Index, m: u32) -> Result<(Vec<Index>, Vec<Index>), IndexError> {
    if k.is_empty() {
        return Err(IndexError::EmptyIndex);
    }
    let down_hd = k.arrow_down()?.hoffman_dual()?;
    let mut lhs: Vec<Index> = compositions(m, down_hd.depth())
        .iter()
        .map(|e| down_hd.oplus(e)?.hoffman_dual())
        .collect::<Result<_, _>>()?;
    let kd = k.dual()?;
    let mut rhs: Vec<Index> = compositions(m, kd.depth())
        .iter()
        .map(|e| kd.oplus(e)?.dual()?.arrow_down())
        .collect::<Result<_, _>>()?;
    lhs.sort_unstable();
    rhs.sort_unstable();
    Ok((lhs, rhs))
}

/// `I^t` at `t = 0` leaves a bare index fixed.
pub fn interpolation_at_zero_fixes(k: &Index) -> bool {
    let spec = interpolate_index(k).specialize(&rat_int(0));
    spec.len() == 1 && spec.get(k) == Some(&rat_int(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{admissible_up_to_weight, indices_up_to_weight};

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn up_recurrence_depth_one_instance() {
        // lhs g_1((2)) = (1+t)(3); rhs up(g_1((1))) + t up(g_0((2))) = (3) + t(3)
        let sides = up_sides(Kernel::Plain, &idx(&[1]), 1).unwrap();
        assert_eq!(
            sides.lhs,
            IndexSum::from_index(idx(&[3]))
                .scale(&RatPoly::from_coeffs([rat_int(1), rat_int(1)].to_vec()))
        );
        assert!(sides.holds());
    }

    #[test]
    fn right_recurrence_kills_order_minus_one() {
        assert!(right_sides(Kernel::Plain, &idx(&[1]), 0).unwrap().holds());
    }

    #[test]
    fn all_recurrences_small_sweep() {
        for k in indices_up_to_weight(4) {
            for m in 0..=3i64 {
                for (name, sides) in recurrence_checks(&k, m).unwrap() {
                    assert!(sides.holds(), "{name} fails at k = {k}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn kernel_equality_small_sweep() {
        for k in indices_up_to_weight(5) {
            for m in 0..=3i64 {
                assert!(
                    kernel_equality_sides(&k, m).holds(),
                    "kernel equality fails at k = {k}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn four_term_examples() {
        assert!(four_term_combination(1, 0, 0).is_zero());
        assert!(four_term_combination(3, 2, 1).is_zero());
        assert!(four_term_combination(1, 5, 3).is_zero());
    }

    #[test]
    fn specialization_examples() {
        // m = 1, k = (2): kernel (1+t)(3); plain side (3), weighted side 2(3)
        let check = specialization_check(&idx(&[2]), 1).unwrap();
        assert_eq!(check.at_zero.1[&idx(&[3])], rat_int(1));
        assert_eq!(check.at_one.1[&idx(&[3])], rat_int(2));
        assert!(check.holds());

        for k in indices_up_to_weight(4) {
            assert!(specialization_check(&k, 0).unwrap().holds());
        }
        assert!(specialization_check(&idx(&[1, 2]), 2).unwrap().holds());
    }

    #[test]
    fn depth_closed_forms_small() {
        for k in 1..=4u32 {
            for m in 0..=3u32 {
                assert!(depth1_sides(k, m).holds(), "depth-1 at k={k}, m={m}");
            }
        }
        for k1 in 1..=3u32 {
            for k2 in 1..=3u32 {
                for m in 0..=2u32 {
                    assert!(
                        depth2_sides(k1, k2, m).holds(),
                        "depth-2 at ({k1},{k2}), m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn dual_bridge_small_sweep() {
        for k in admissible_up_to_weight(6) {
            for m in 0..=3u32 {
                let (lhs, rhs) = dual_bridge_sides(&k, m).unwrap();
                assert_eq!(lhs, rhs, "bridge fails at k = {k}, m = {m}");
            }
        }
    }

    #[test]
    fn interpolation_fixed_points() {
        for k in indices_up_to_weight(5) {
            assert!(interpolation_at_zero_fixes(&k));
        }
    }
}
