//! JSON encodings of the algebraic values.
//!
//! Rationals are strings `"num/den"` (always with an explicit denominator)
//! so arbitrary-precision values survive readers with 64-bit integers.
//! Indices are plain arrays like `[2,1,3]`; index sums are arrays of
//! `{"index": ..., "coeff": {"coeffs": [...]}}` sorted lexicographically by
//! index; words render as strings over `x`/`y`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use imzv_core::index::Index;
use imzv_core::numeric::NumericValue;
use imzv_core::poly::{ModPPoly, RatPoly};
use imzv_core::rat::{rat_to_string, Rat};
use imzv_core::words::{NCPoly, NCSeries};
use imzv_core::IndexSum;

pub fn index_json(k: &Index) -> Value {
    Value::Array(k.parts().iter().map(|&p| json!(p)).collect())
}

pub fn rat_json(x: &Rat) -> Value {
    Value::String(rat_to_string(x))
}

pub fn ratpoly_json(p: &RatPoly) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rat_json).collect::<Vec<_>>() })
}

pub fn indexsum_json(s: &IndexSum) -> Value {
    Value::Array(
        s.iter()
            .map(|(k, c)| json!({ "index": index_json(k), "coeff": ratpoly_json(c) }))
            .collect(),
    )
}

/// A specialized index sum: rational coefficients instead of polynomials.
pub fn ratmap_json(m: &BTreeMap<Index, Rat>) -> Value {
    Value::Array(
        m.iter()
            .map(|(k, c)| json!({ "index": index_json(k), "coeff": rat_json(c) }))
            .collect(),
    )
}

pub fn modpoly_json(p: &ModPPoly) -> Value {
    json!({ "p": p.prime(), "coeffs": p.coeffs() })
}

pub fn ncpoly_json(p: &NCPoly) -> Value {
    Value::Array(
        p.iter()
            .map(|(w, c)| json!({ "word": w.to_string(), "coeff": ratpoly_json(c) }))
            .collect(),
    )
}

pub fn ncseries_json(s: &NCSeries) -> Value {
    json!({
        "orders": (0..=s.trunc())
            .map(|n| ncpoly_json(s.order(n)))
            .collect::<Vec<_>>()
    })
}

pub fn numeric_json(v: &NumericValue) -> Value {
    json!({ "value": v.value, "err_bound": v.err_bound })
}

/// Parse a comma-separated index such as `2,1,3`. An empty string is the
/// empty index.
pub fn parse_index(s: &str) -> Result<Index, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Index::empty());
    }
    let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|e| format!("bad index entry: {e}"))?;
    Index::new(parts).map_err(|e| e.to_string())
}

/// Parse an inclusive prime range `a..b`.
pub fn parse_prime_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like 11..47, got {s:?}"))?;
    let lo: u64 = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: u64 = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}
