use crate::ring::Interval;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ProbeOnly,
    Erratum,
}

impl Verdict {
    pub fn of(b: bool) -> Verdict {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::ProbeOnly => "probe-only",
            Verdict::Erratum => "erratum",
        }
    }
}

/// An exact value as a string, or an enclosure `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(String),
    Interval(Interval),
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Exact(x) => s.serialize_str(x),
            Value::Interval(i) => i.serialize(s),
        }
    }
}

impl From<Interval> for Value {
    fn from(i: Interval) -> Self {
        Value::Interval(i)
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Exact(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Exact(s.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub name: String,
    pub verdict: Verdict,
    pub value: Value,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub results: Vec<Entry>,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Serialize) {
        self.inputs.insert(
            key.to_string(),
            serde_json::to_value(v).expect("serializable input"),
        );
    }

    pub fn push(
        &mut self,
        name: &str,
        verdict: Verdict,
        value: impl Into<Value>,
        anchor: &str,
    ) -> &mut Entry {
        self.results.push(Entry {
            name: name.to_string(),
            verdict,
            value: value.into(),
            anchor: anchor.to_string(),
            detail: None,
        });
        self.results.last_mut().expect("just pushed")
    }

    pub fn any_fail(&self) -> bool {
        self.results.iter().any(|e| e.verdict == Verdict::Fail)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.results.iter().filter(|e| e.verdict == v).count()
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.any_fail())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (sl2prod {})", self.command, self.version);
        for e in &self.results {
            let value = match &e.value {
                Value::Exact(s) => s.clone(),
                Value::Interval(i) => i.to_string(),
            };
            let _ = write!(out, "  {:<10} {:<44} {}", e.verdict.label(), e.name, value);
            if let Some(d) = &e.detail {
                let _ = write!(out, "  ({d})");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} probe-only, {} erratum",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::ProbeOnly),
            self.count(Verdict::Erratum)
        );
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed {ms} ms");
        }
        out
    }
}

impl Entry {
    pub fn detail(&mut self, d: impl Into<String>) -> &mut Self {
        self.detail = Some(d.into());
        self
    }
}
