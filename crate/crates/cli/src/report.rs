//! The machine-readable run report and its three renderings.
//!
//! Reports are deterministic for fixed inputs and seed: map keys are
//! emitted sorted and the only volatile field is `timing_ms`, which
//! consumers strip before comparing runs.

use serde::Serialize;
use serde_json::Value;

#[derive(Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub timing_ms: u128,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            inputs: Value::Null,
            results: Value::Null,
            checks: Vec::new(),
            seed: None,
            timing_ms: 0,
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, counterexample: Option<Value>) {
        self.checks.push(CheckLine {
            name: name.into(),
            passed,
            counterexample,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_plain(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        flatten_into(&mut out, "input", &self.inputs);
        flatten_into(&mut out, "result", &self.results);
        for c in &self.checks {
            out.push_str(&format!(
                "check {}: {}\n",
                c.name,
                if c.passed { "PASS" } else { "FAIL" }
            ));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("  counterexample: {ce}\n"));
            }
        }
        out.push_str(&format!("timing_ms: {}\n", self.timing_ms));
        out
    }

    pub fn render_csv(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        if let Some(seed) = self.seed {
            rows.push(("seed".into(), seed.to_string()));
        }
        collect_rows(&mut rows, "input", &self.inputs);
        collect_rows(&mut rows, "result", &self.results);
        for c in &self.checks {
            rows.push((
                format!("check.{}", c.name),
                if c.passed { "PASS" } else { "FAIL" }.into(),
            ));
        }
        rows.push(("timing_ms".into(), self.timing_ms.to_string()));
        let mut out = String::from("key,value\n");
        for (k, v) in rows {
            out.push_str(&format!("{},{}\n", csv_escape(&k), csv_escape(&v)));
        }
        out
    }
}

fn scalar_repr(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items
                .iter()
                .map(|i| scalar_repr(i).expect("scalar item"))
                .collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn flatten_into(out: &mut String, prefix: &str, v: &Value) {
    if v.is_null() {
        return;
    }
    if let Some(s) = scalar_repr(v) {
        out.push_str(&format!("{prefix}: {s}\n"));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten_into(out, &format!("{prefix} {k}"), inner);
            }
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten_into(out, &format!("{prefix}[{i}]"), inner);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn collect_rows(rows: &mut Vec<(String, String)>, prefix: &str, v: &Value) {
    if v.is_null() {
        return;
    }
    if let Some(s) = scalar_repr(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                collect_rows(rows, &format!("{prefix}.{k}"), inner);
            }
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                collect_rows(rows, &format!("{prefix}[{i}]"), inner);
            }
        }
        _ => unreachable!(),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
