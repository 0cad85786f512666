//! The verification suites: one per identity family, each a deterministic
//! sweep producing one report per instance.
//!
//! Instance lists are enumerated in a fixed order and results are collected
//! back into that order, so output is reproducible regardless of how the
//! work is fanned out across threads.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use imzv_core::bernoulli::BernoulliTable;
use imzv_core::finite::{
    depth2_closed_form_sides, interp_ohno_check, primes_in, sum_formula_sides, Fp,
};
use imzv_core::genfun::{
    dual_side_series, kernel_genfun_closed, kernel_series, ncpoly_of_index_sum, sigma,
    x_series_closed, x_series_direct,
};
use imzv_core::index::{admissible_up_to_weight, indices_up_to_weight};
use imzv_core::interp::ohno_rhs;
use imzv_core::numeric::{
    check_ohno_numeric, check_sum_formula_numeric, star_decomposition_check, MzvCache,
    NumericCheck,
};
use imzv_core::rat::{rat, rat_int, rat_to_string, Rat};
use imzv_core::relations::{
    self, base_sides, depth1_sides, depth2_sides, four_term_combination, kernel_equality_sides,
    right_sides, up_sides, Kernel, Sides,
};

use crate::formats::{
    index_json, indexsum_json, modpoly_json, ncpoly_json, ncseries_json, ratmap_json,
    ratpoly_json,
};
use crate::report::CheckReport;

/// Suite names accepted by `check`.
pub const SUITE_NAMES: &[&str] = &[
    "recurrences",
    "gh-equality",
    "genfun",
    "dual-genfun",
    "fmzv-ohno",
    "fmzv-sum",
    "claim",
    "numeric-ohno",
    "numeric-sum",
    "specialize",
];

/// Optional overrides for the per-suite default ranges.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub max_weight: Option<u32>,
    pub max_m: Option<u32>,
    pub k_max: Option<u32>,
    pub primes: Option<(u64, u64)>,
    pub trunc: Option<usize>,
    pub tol: Option<f64>,
    pub t_value: Option<Rat>,
}

/// Run a suite by name with the given overrides.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckReport>, String> {
    let primes = opts.primes.unwrap_or((11, 47));
    let trunc = opts.trunc.unwrap_or(1_000_000);
    let tol = opts.tol.unwrap_or(1e-2);
    let t_values = match &opts.t_value {
        Some(t) => vec![t.clone()],
        None => vec![rat_int(0), rat(1, 2), rat_int(1)],
    };
    match name {
        "recurrences" => Ok(run_recurrences(
            opts.max_weight.unwrap_or(7),
            opts.max_m.unwrap_or(4),
        )),
        "gh-equality" => Ok(run_gh_equality(
            opts.max_weight.unwrap_or(7),
            opts.max_m.unwrap_or(4),
        )),
        "genfun" => Ok(run_genfun(
            opts.max_weight.unwrap_or(6),
            opts.max_m.unwrap_or(4),
        )),
        "dual-genfun" => Ok(run_dual_genfun(
            opts.max_weight.unwrap_or(6),
            opts.max_m.unwrap_or(4),
        )),
        "fmzv-ohno" => Ok(run_fmzv_ohno(
            opts.max_weight.unwrap_or(5),
            opts.max_m.unwrap_or(3),
            primes,
        )),
        "fmzv-sum" => Ok(run_fmzv_sum(opts.k_max.unwrap_or(7), primes)),
        "claim" => Ok(run_claim(opts.k_max.unwrap_or(10))),
        "numeric-ohno" => Ok(run_numeric_ohno(
            opts.max_weight.unwrap_or(5),
            opts.max_m.unwrap_or(2),
            trunc,
            tol,
            &t_values,
        )),
        "numeric-sum" => Ok(run_numeric_sum(
            opts.k_max.unwrap_or(6),
            trunc,
            tol,
            &t_values,
        )),
        "specialize" => Ok(run_specialize(
            opts.max_weight.unwrap_or(6),
            opts.max_m.unwrap_or(4),
        )),
        other => Err(format!("unknown suite {other:?}")),
    }
}

fn timed(
    claim: &'static str,
    params: Vec<(&'static str, Value)>,
    run: impl FnOnce() -> (bool, Value),
) -> CheckReport {
    let start = Instant::now();
    let (pass, counterexample) = run();
    let mut report = CheckReport::new(claim, params).finish(pass, counterexample);
    report.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    report
}

fn sides_payload(sides: &Sides) -> Value {
    json!({ "lhs": indexsum_json(&sides.lhs), "rhs": indexsum_json(&sides.rhs) })
}

/// Kernel recurrences (base, raising, appending for all three kernels) and
/// the four-term merge-weight identity.
pub fn run_recurrences(max_weight: u32, max_m: u32) -> Vec<CheckReport> {
    let mut reports = Vec::new();

    // base cases depend on m alone
    for m in 0..=max_m as i64 {
        for (claim, kernel) in [
            ("g-base", Kernel::Plain),
            ("g-interp-base", Kernel::Interp),
            ("h-base", Kernel::Expanded),
        ] {
            reports.push(timed(claim, vec![("m", json!(m))], || {
                let sides = base_sides(kernel, m);
                (sides.holds(), sides_payload(&sides))
            }));
        }
    }

    let mut instances = Vec::new();
    for k in indices_up_to_weight(max_weight) {
        for m in 0..=max_m as i64 {
            instances.push((k.clone(), m));
        }
    }
    let arrow_reports: Vec<Vec<CheckReport>> = instances
        .par_iter()
        .map(|(k, m)| {
            let mut out = Vec::new();
            let params = |claim: &'static str| -> CheckReport {
                CheckReport::new(claim, vec![("k", index_json(k)), ("m", json!(m))])
            };
            let start = Instant::now();
            let mut push = |claim: &'static str, sides: Sides| {
                let mut r = params(claim);
                r.pass = sides.holds();
                if !r.pass {
                    r.counterexample = Some(sides_payload(&sides));
                }
                r.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
                out.push(r);
            };
            if *m >= 1 {
                push("g-up", up_sides(Kernel::Plain, k, *m).expect("non-empty"));
            }
            push(
                "g-interp-up",
                up_sides(Kernel::Interp, k, *m).expect("non-empty"),
            );
            push(
                "h-up",
                up_sides(Kernel::Expanded, k, *m).expect("non-empty"),
            );
            push(
                "g-right",
                right_sides(Kernel::Plain, k, *m).expect("non-empty"),
            );
            push(
                "g-interp-right",
                right_sides(Kernel::Interp, k, *m).expect("non-empty"),
            );
            push(
                "h-right",
                right_sides(Kernel::Expanded, k, *m).expect("non-empty"),
            );
            out
        })
        .collect();
    reports.extend(arrow_reports.into_iter().flatten());

    // four-term identity over its own fixed grid
    let mut grid = Vec::new();
    for k in 1..=8i64 {
        for e in 0..=6i64 {
            for i in 0..=4usize {
                grid.push((k, e, i));
            }
        }
    }
    let four_term: Vec<CheckReport> = grid
        .par_iter()
        .map(|&(k, e, i)| {
            timed(
                "f-four-term",
                vec![("k", json!(k)), ("e", json!(e)), ("i", json!(i))],
                || {
                    let combo = four_term_combination(k, e, i);
                    (combo.is_zero(), json!({ "residual": ratpoly_json(&combo) }))
                },
            )
        })
        .collect();
    reports.extend(four_term);
    reports
}

/// The interpolated kernel equals the expanded kernel.
pub fn run_gh_equality(max_weight: u32, max_m: u32) -> Vec<CheckReport> {
    let mut instances = Vec::new();
    for k in indices_up_to_weight(max_weight) {
        for m in 0..=max_m as i64 {
            instances.push((k.clone(), m));
        }
    }
    instances
        .par_iter()
        .map(|(k, m)| {
            timed(
                "g-interp-equals-h",
                vec![("k", index_json(k)), ("m", json!(m))],
                || {
                    let sides = kernel_equality_sides(k, *m);
                    (sides.holds(), sides_payload(&sides))
                },
            )
        })
        .collect()
}

/// Splitting-series closed form and the three-way generating-function
/// equality for the expanded kernel.
pub fn run_genfun(max_weight: u32, max_m: u32) -> Vec<CheckReport> {
    let trunc = max_m as usize;
    let ks = admissible_up_to_weight(max_weight);
    ks.par_iter()
        .map(|k| {
            let mut out = Vec::new();
            out.push(timed(
                "x-series-direct-vs-closed",
                vec![("k", index_json(k)), ("u_trunc", json!(trunc))],
                || {
                    let direct = x_series_direct(k, trunc);
                    let closed = x_series_closed(k, trunc);
                    (
                        direct == closed,
                        json!({
                            "lhs": ncseries_json(&direct),
                            "rhs": ncseries_json(&closed)
                        }),
                    )
                },
            ));
            out.push(timed(
                "h-genfun-three-way",
                vec![("k", index_json(k)), ("u_trunc", json!(trunc))],
                || {
                    let via_sigma = sigma(&x_series_closed(k, trunc));
                    let closed = kernel_genfun_closed(k, trunc);
                    let from_kernel = kernel_series(k, trunc);
                    (
                        via_sigma == closed && closed == from_kernel,
                        json!({
                            "sigma_of_x": ncseries_json(&via_sigma),
                            "closed_form": ncseries_json(&closed),
                            "kernel_series": ncseries_json(&from_kernel)
                        }),
                    )
                },
            ));
            out
        })
        .flatten()
        .collect()
}

/// The dual-side generating function against the interpolated Ohno-type
/// right-hand sides, order by order.
pub fn run_dual_genfun(max_weight: u32, max_m: u32) -> Vec<CheckReport> {
    let trunc = max_m as usize;
    let ks = admissible_up_to_weight(max_weight);
    ks.par_iter()
        .map(|k| {
            let start = Instant::now();
            let series = dual_side_series(k, trunc);
            let mut out = Vec::new();
            for m in 0..=trunc {
                let rhs = ncpoly_of_index_sum(
                    &ohno_rhs(k, m as u32, true).expect("admissible index"),
                );
                let got = series.order(m);
                let mut report = CheckReport::new(
                    "dual-side-series",
                    vec![("k", index_json(k)), ("m", json!(m))],
                );
                report.pass = got == &rhs;
                if !report.pass {
                    report.counterexample = Some(json!({
                        "lhs": ncpoly_json(got),
                        "rhs": ncpoly_json(&rhs)
                    }));
                }
                report.wall_ms = start.elapsed().as_secs_f64() * 1000.0 / (trunc + 1) as f64;
                out.push(report);
            }
            out
        })
        .flatten()
        .collect()
}

/// Finite Ohno-type checks: the plain, star, and interpolated relations,
/// the last as a full polynomial identity in `t` over each prime field
/// with both specializations cross-checked.
pub fn run_fmzv_ohno(max_weight: u32, max_m: u32, primes: (u64, u64)) -> Vec<CheckReport> {
    let primes = primes_in(primes.0, primes.1);
    let mut instances = Vec::new();
    for k in indices_up_to_weight(max_weight) {
        for m in 0..=max_m {
            for &p in &primes {
                if p > (k.weight() + m + 2) as u64 {
                    instances.push((k.clone(), m, p));
                }
            }
        }
    }
    instances
        .par_iter()
        .map(|(k, m, p)| {
            let start = Instant::now();
            let fp = Fp::new(*p).expect("prime");
            let check = interp_ohno_check(&fp, k, *m).expect("in-range instance");
            let elapsed = start.elapsed().as_secs_f64() * 1000.0 / 3.0;
            let params = |()| vec![("k", index_json(k)), ("m", json!(m)), ("p", json!(p))];

            let mut plain = CheckReport::new("fmzv-ohno", params(()));
            plain.pass = check.plain.holds();
            if !plain.pass {
                plain.counterexample =
                    Some(json!({ "lhs": check.plain.lhs, "rhs": check.plain.rhs }));
            }
            plain.wall_ms = elapsed;

            let mut star = CheckReport::new("fmzv-ohno-star", params(()));
            star.pass = check.star.holds();
            if !star.pass {
                star.counterexample =
                    Some(json!({ "lhs": check.star.lhs, "rhs": check.star.rhs }));
            }
            star.wall_ms = elapsed;

            let mut interp = CheckReport::new("fmzv-ohno-interp", params(()));
            interp.pass = check.holds();
            if !interp.pass {
                interp.counterexample = Some(json!({
                    "lhs": modpoly_json(&check.sides.lhs),
                    "rhs": modpoly_json(&check.sides.rhs),
                    "plain": { "lhs": check.plain.lhs, "rhs": check.plain.rhs },
                    "star": { "lhs": check.star.lhs, "rhs": check.star.rhs }
                }));
            }
            interp.wall_ms = elapsed;

            [plain, star, interp]
        })
        .flatten()
        .collect()
}

/// Finite sum formula (with the Bernoulli realization of the finite zeta
/// analogue) and the depth-two closed form.
pub fn run_fmzv_sum(k_max: u32, primes: (u64, u64)) -> Vec<CheckReport> {
    let primes = primes_in(primes.0, primes.1);
    let bern = BernoulliTable::up_to(primes.last().map_or(2, |p| (p - 2) as usize));

    let mut sum_instances = Vec::new();
    for k in 2..=k_max {
        for r in 1..k {
            for &p in &primes {
                if p > (k + 2) as u64 {
                    sum_instances.push((k, r, p));
                }
            }
        }
    }
    let mut reports: Vec<CheckReport> = sum_instances
        .par_iter()
        .map(|&(k, r, p)| {
            timed(
                "fmzv-sum-formula",
                vec![("k", json!(k)), ("r", json!(r)), ("p", json!(p))],
                || {
                    let fp = Fp::new(p).expect("prime");
                    let sides = sum_formula_sides(&fp, k, r, &bern).expect("in-range instance");
                    (
                        sides.holds(),
                        json!({
                            "lhs": modpoly_json(&sides.lhs),
                            "rhs": modpoly_json(&sides.rhs)
                        }),
                    )
                },
            )
        })
        .collect();

    let mut depth2_instances = Vec::new();
    for w in 2..=8u32 {
        for a in 1..w {
            let b = w - a;
            for &p in &primes {
                if p >= (w + 2) as u64 {
                    depth2_instances.push((a, b, p));
                }
            }
        }
    }
    let depth2: Vec<CheckReport> = depth2_instances
        .par_iter()
        .map(|&(a, b, p)| {
            timed(
                "fmzv-depth2-closed-form",
                vec![("a", json!(a)), ("b", json!(b)), ("p", json!(p))],
                || {
                    let fp = Fp::new(p).expect("prime");
                    let sides =
                        depth2_closed_form_sides(&fp, a, b, &bern).expect("in-range instance");
                    (sides.holds(), json!({ "lhs": sides.lhs, "rhs": sides.rhs }))
                },
            )
        })
        .collect();
    reports.extend(depth2);
    reports
}

/// The binomial-coefficient identity behind the finite sum formula, checked
/// symbolically over the rationals.
pub fn run_claim(k_max: u32) -> Vec<CheckReport> {
    let mut instances = Vec::new();
    for k in 3..=k_max {
        for r in 2..k {
            instances.push((k, r));
        }
    }
    instances
        .par_iter()
        .map(|&(k, r)| {
            timed(
                "sum-coefficient-identity",
                vec![("k", json!(k)), ("r", json!(r))],
                || {
                    let (lhs, rhs) = imzv_core::finite::claim_identity_sides(k, r);
                    (
                        lhs == rhs,
                        json!({ "lhs": ratpoly_json(&lhs), "rhs": ratpoly_json(&rhs) }),
                    )
                },
            )
        })
        .collect()
}

fn numeric_payload(check: &NumericCheck) -> Value {
    json!({
        "lhs": check.lhs.value,
        "lhs_err": check.lhs.err_bound,
        "rhs": check.rhs.value,
        "rhs_err": check.rhs.err_bound,
        "tol": check.tol
    })
}

fn ohno_claim_for(t: &Rat) -> &'static str {
    if *t == rat_int(0) {
        "ohno-mzv"
    } else if *t == rat_int(1) {
        "ohno-mzsv"
    } else {
        "ohno-interp"
    }
}

/// Numeric Ohno-type instances at the requested interpolation points, plus
/// the star-decomposition oracle of each admissible index. Runs
/// sequentially over a shared evaluation cache.
pub fn run_numeric_ohno(
    max_weight: u32,
    max_m: u32,
    trunc: usize,
    tol: f64,
    t_values: &[Rat],
) -> Vec<CheckReport> {
    let mut cache = MzvCache::new(trunc);
    let mut reports = Vec::new();
    for k in admissible_up_to_weight(max_weight) {
        for m in 0..=max_m {
            for t in t_values {
                let start = Instant::now();
                let check = check_ohno_numeric(&k, m, t, &mut cache, tol)
                    .expect("admissible instance");
                let mut report = CheckReport::new(
                    ohno_claim_for(t),
                    vec![
                        ("k", index_json(&k)),
                        ("m", json!(m)),
                        ("t", json!(rat_to_string(t))),
                        ("trunc", json!(trunc)),
                    ],
                );
                report.pass = check.holds();
                if !report.pass {
                    report.counterexample = Some(numeric_payload(&check));
                }
                report.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
                reports.push(report);
            }
        }
    }
    // independent-oracle identity at t = 1
    for k in admissible_up_to_weight(max_weight) {
        let start = Instant::now();
        let check = star_decomposition_check(&k, &mut cache).expect("admissible index");
        let mut report = CheckReport::new(
            "star-decomposition",
            vec![("k", index_json(&k)), ("trunc", json!(trunc))],
        );
        report.pass = check.holds();
        if !report.pass {
            report.counterexample = Some(numeric_payload(&check));
        }
        report.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
        reports.push(report);
    }
    reports
}

/// Numeric sum-formula instances at the requested interpolation points.
pub fn run_numeric_sum(k_max: u32, trunc: usize, tol: f64, t_values: &[Rat]) -> Vec<CheckReport> {
    let mut cache = MzvCache::new(trunc);
    let mut reports = Vec::new();
    for k in 2..=k_max {
        for r in 1..k {
            for t in t_values {
                let start = Instant::now();
                let check = check_sum_formula_numeric(k, r, t, &mut cache, tol)
                    .expect("valid instance");
                let mut report = CheckReport::new(
                    "mzv-sum-formula",
                    vec![
                        ("k", json!(k)),
                        ("r", json!(r)),
                        ("t", json!(rat_to_string(t))),
                        ("trunc", json!(trunc)),
                    ],
                );
                report.pass = check.holds();
                if !report.pass {
                    report.counterexample = Some(numeric_payload(&check));
                }
                report.wall_ms = start.elapsed().as_secs_f64() * 1000.0;
                reports.push(report);
            }
        }
    }
    reports
}

/// Kernel specializations at `t = 0` and `t = 1`, the depth-one and
/// depth-two closed forms, and the `t = 0` fixed-point property of the
/// interpolation map.
pub fn run_specialize(max_weight: u32, max_m: u32) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = Vec::new();

    let mut instances = Vec::new();
    for k in indices_up_to_weight(max_weight) {
        for m in 0..=max_m {
            instances.push((k.clone(), m));
        }
    }
    reports.par_extend(instances.par_iter().map(|(k, m)| {
        timed(
            "g-at-zero-and-one",
            vec![("k", index_json(k)), ("m", json!(m))],
            || {
                let check = relations::specialization_check(k, *m).expect("depths match");
                (
                    check.holds(),
                    json!({
                        "at_zero": {
                            "kernel": ratmap_json(&check.at_zero.0),
                            "expected": ratmap_json(&check.at_zero.1)
                        },
                        "at_one": {
                            "kernel": ratmap_json(&check.at_one.0),
                            "expected": ratmap_json(&check.at_one.1)
                        }
                    }),
                )
            },
        )
    }));

    let mut depth1 = Vec::new();
    for k in 1..=max_weight {
        for m in 0..=max_m {
            depth1.push((k, m));
        }
    }
    reports.par_extend(depth1.par_iter().map(|&(k, m)| {
        timed(
            "g-depth1-closed-form",
            vec![("k", json!(k)), ("m", json!(m))],
            || {
                let sides = depth1_sides(k, m);
                (sides.holds(), sides_payload(&sides))
            },
        )
    }));

    let mut depth2 = Vec::new();
    for k1 in 1..max_weight {
        for k2 in 1..=(max_weight - k1) {
            for m in 0..=max_m {
                depth2.push((k1, k2, m));
            }
        }
    }
    reports.par_extend(depth2.par_iter().map(|&(k1, k2, m)| {
        timed(
            "g-depth2-closed-form",
            vec![("k1", json!(k1)), ("k2", json!(k2)), ("m", json!(m))],
            || {
                let sides = depth2_sides(k1, k2, m);
                (sides.holds(), sides_payload(&sides))
            },
        )
    }));

    reports.par_extend(indices_up_to_weight(max_weight).par_iter().map(|k| {
        timed(
            "interp-identity-at-zero",
            vec![("k", index_json(k))],
            || (relations::interpolation_at_zero_fixes(k), json!({})),
        )
    }));

    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::summarize;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("bogus", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn small_symbolic_suites_pass() {
        let opts = SuiteOptions {
            max_weight: Some(3),
            max_m: Some(2),
            ..Default::default()
        };
        for name in ["recurrences", "gh-equality", "specialize"] {
            let reports = run_suite(name, &opts).unwrap();
            let (pass, fail) = summarize(&reports);
            assert!(fail == 0 && pass > 0, "{name}: {pass} pass, {fail} fail");
        }
    }

    #[test]
    fn small_word_suites_pass() {
        let opts = SuiteOptions {
            max_weight: Some(4),
            max_m: Some(2),
            ..Default::default()
        };
        for name in ["genfun", "dual-genfun"] {
            let reports = run_suite(name, &opts).unwrap();
            let (pass, fail) = summarize(&reports);
            assert!(fail == 0 && pass > 0, "{name}: {pass} pass, {fail} fail");
        }
    }

    #[test]
    fn small_finite_suites_pass() {
        let opts = SuiteOptions {
            max_weight: Some(3),
            max_m: Some(1),
            k_max: Some(4),
            primes: Some((11, 13)),
            ..Default::default()
        };
        for name in ["fmzv-ohno", "fmzv-sum", "claim"] {
            let reports = run_suite(name, &opts).unwrap();
            let (pass, fail) = summarize(&reports);
            assert!(fail == 0 && pass > 0, "{name}: {pass} pass, {fail} fail");
        }
    }

    #[test]
    fn small_numeric_suites_pass() {
        let opts = SuiteOptions {
            max_weight: Some(3),
            max_m: Some(1),
            k_max: Some(3),
            trunc: Some(50_000),
            tol: Some(1e-2),
            ..Default::default()
        };
        for name in ["numeric-ohno", "numeric-sum"] {
            let reports = run_suite(name, &opts).unwrap();
            let (pass, fail) = summarize(&reports);
            assert!(fail == 0 && pass > 0, "{name}: {pass} pass, {fail} fail");
        }
    }
}
