use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TreeCounts {
    pub sigma: usize,
    pub ex: usize,
    pub ex_prime: usize,
}

/// Output of one verb. Keys are emitted in declaration order and omitted
/// when unset; verb-specific fields follow in `extra`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub verb: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<TreeCounts>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Report {
    pub fn new(verb: &'static str) -> Self {
        Report {
            verb,
            psi: None,
            set: None,
            verified: None,
            bounds: None,
            stats: None,
            extra: Map::new(),
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.extra.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k}: {v}\n"));
        if let Some(p) = self.psi {
            line("psi", p.to_string());
        }
        if let Some(s) = &self.set {
            line("set", s.join(" "));
        }
        if let Some(v) = self.verified {
            line("verified", v.to_string());
        }
        if let Some(b) = self.bounds {
            line("lower", b.lower.to_string());
            line("upper", b.upper.to_string());
        }
        if let Some(s) = self.stats {
            line("sigma", s.sigma.to_string());
            line("ex", s.ex.to_string());
            line("ex_prime", s.ex_prime.to_string());
        }
        for (k, v) in &self.extra {
            line(k, text_value(v));
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
