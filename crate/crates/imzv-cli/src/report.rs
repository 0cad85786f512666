//! Per-instance check reports and their JSON/CSV serializations.

use std::io::Write;

use serde_json::{Map, Value};

/// Outcome of one checked instance. Instance parameters are kept as ordered
/// key/value pairs and inlined at the top level of the JSON object; a
/// failing report always carries a counterexample payload with the two
/// differing sides.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub claim: &'static str,
    pub params: Vec<(&'static str, Value)>,
    pub pass: bool,
    pub wall_ms: f64,
    pub counterexample: Option<Value>,
}

impl CheckReport {
    pub fn new(claim: &'static str, params: Vec<(&'static str, Value)>) -> Self {
        CheckReport {
            claim,
            params,
            pass: false,
            wall_ms: 0.0,
            counterexample: None,
        }
    }

    /// Record a verdict; `counterexample` is consulted only on failure.
    pub fn finish(mut self, pass: bool, counterexample: Value) -> Self {
        self.pass = pass;
        self.counterexample = if pass { None } else { Some(counterexample) };
        self
    }

    /// JSON object with parameters inlined; `stable` drops the timing field
    /// so identical runs are byte-identical.
    pub fn to_json(&self, stable: bool) -> Value {
        let mut map = Map::new();
        map.insert("claim".into(), Value::String(self.claim.into()));
        for (key, value) in &self.params {
            map.insert((*key).into(), value.clone());
        }
        map.insert("pass".into(), Value::Bool(self.pass));
        if !stable {
            map.insert("wall_ms".into(), Value::from(self.wall_ms));
        }
        if let Some(ce) = &self.counterexample {
            map.insert("counterexample".into(), ce.clone());
        }
        Value::Object(map)
    }

    fn params_object(&self) -> Value {
        let mut map = Map::new();
        for (key, value) in &self.params {
            map.insert((*key).into(), value.clone());
        }
        Value::Object(map)
    }
}

/// Write one report per line as JSON.
pub fn write_json<W: Write>(
    out: &mut W,
    reports: &[CheckReport],
    stable: bool,
) -> std::io::Result<()> {
    for r in reports {
        writeln!(out, "{}", r.to_json(stable))?;
    }
    Ok(())
}

/// Write reports as CSV with a header row; parameters and counterexamples
/// are embedded as JSON strings.
pub fn write_csv<W: Write>(
    out: &mut W,
    reports: &[CheckReport],
    stable: bool,
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["claim", "params", "pass", "wall_ms", "counterexample"])?;
    for r in reports {
        let wall = if stable {
            String::new()
        } else {
            format!("{:.3}", r.wall_ms)
        };
        let ce = r
            .counterexample
            .as_ref()
            .map(|v| v.to_string())
            .unwrap_or_default();
        w.write_record([
            r.claim,
            &r.params_object().to_string(),
            if r.pass { "true" } else { "false" },
            &wall,
            &ce,
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Aggregate verdict: number of passing/failing instances.
pub fn summarize(reports: &[CheckReport]) -> (usize, usize) {
    let pass = reports.iter().filter(|r| r.pass).count();
    (pass, reports.len() - pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample(pass: bool) -> CheckReport {
        CheckReport::new("g-up", vec![("k", json!([1, 2])), ("m", json!(1))])
            .finish(pass, json!({"lhs": [], "rhs": []}))
    }

    #[test]
    fn failing_reports_carry_counterexamples() {
        assert!(sample(true).counterexample.is_none());
        assert!(sample(false).counterexample.is_some());
    }

    #[test]
    fn stable_json_has_no_timing() {
        let r = sample(true);
        let v = r.to_json(true);
        assert!(v.get("wall_ms").is_none());
        assert_eq!(v["claim"], "g-up");
        assert_eq!(v["k"], json!([1, 2]));
        let v = r.to_json(false);
        assert!(v.get("wall_ms").is_some());
    }

    #[test]
    fn csv_shape() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[sample(true), sample(false)], true).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "claim,params,pass,wall_ms,counterexample"
        );
        assert_eq!(lines.count(), 2);
    }
}
