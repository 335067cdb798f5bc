//! Report envelope and renderers.
//!
//! JSON objects use sorted keys, scalars are strings (`"p/q"` or 17 significant
//! digits), so identical invocations produce identical bytes.

use bjsym::orthogonality::Certificate;
use bjsym::sampling::SampleConfig;
use bjsym::symmetry::{Resolution, SymmetryConstant, Witness};
use bjsym::Scalar;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

pub fn scalar<S: Scalar>(s: &S) -> Value {
    Value::String(s.to_report())
}

pub fn vector<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn vectors<S: Scalar>(vs: &[Vec<S>]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

pub fn pair<S: Scalar>(p: &Option<(Vec<S>, Vec<S>)>) -> Value {
    match p {
        Some((x, y)) => json!({ "x": vector(x), "y": vector(y) }),
        None => Value::Null,
    }
}

pub fn resolution(r: &Option<Resolution>) -> Value {
    match r {
        Some(r) => json!({
            "samples": r.samples,
            "refine_rounds": r.refine_rounds,
            "refine_factor": r.refine_factor,
        }),
        None => Value::Null,
    }
}

pub fn sample_config(c: &SampleConfig) -> Value {
    json!({
        "samples": c.samples,
        "refine_rounds": c.refine,
        "refine_factor": c.factor,
    })
}

pub fn certificate<S: Scalar>(c: &Option<Certificate<S>>) -> Value {
    match c {
        Some(Certificate::Functional(f)) => json!({ "functional": vector(f) }),
        Some(Certificate::Offset { lambda, point }) => {
            json!({ "lambda": scalar(lambda), "point": vector(point) })
        }
        None => Value::Null,
    }
}

pub fn witness<S: Scalar>(w: &Option<Witness<S>>) -> Value {
    match w {
        Some(w) => json!({
            "x": vector(&w.x),
            "y": vector(&w.y),
            "functional": vector(&w.functional),
            "y_class": w.y_class.as_ref().map(|c| serde_json::to_value(c).expect("plain data")),
        }),
        None => Value::Null,
    }
}

pub fn constant<S: Scalar>(c: &SymmetryConstant<S>) -> Value {
    json!({
        "value": scalar(&c.value),
        "kind": c.kind,
        "side": c.side,
        "method": c.method,
        "resolution": resolution(&c.resolution),
        "witness": pair(&c.witness),
        "symmetric": c.symmetric,
    })
}

/// Full report around a command result.
pub fn envelope(command: &str, args: &[String], space: Value, seed: u64, result: Value) -> Value {
    json!({
        "tool": "bjsym",
        "version": env!("CARGO_PKG_VERSION"),
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "arguments": args,
        "space": space,
        "seed": seed,
        "result": result,
    })
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

/// `path: value` lines, one per leaf, in key order.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            if m.is_empty() {
                out.push_str(&format!("{prefix}: {{}}\n"));
            }
            for (k, x) in m {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(leaf).collect();
            out.push_str(&format!("{prefix}: ({})\n", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        _ => out.push_str(&format!("{prefix}: {}\n", leaf(v))),
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Object builder that keeps call sites short.
#[derive(Default)]
pub struct Obj(Map<String, Value>);

impl Obj {
    pub fn new() -> Self {
        Obj(Map::new())
    }

    pub fn set(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.0.insert(k.to_string(), v.into());
        self
    }

    pub fn build(self) -> Value {
        Value::Object(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_flattens_in_key_order() {
        let v = json!({"b": {"y": ["1/2", "3"]}, "a": true});
        assert_eq!(render_text(&v), "a: true\nb.y: (1/2, 3)\n");
    }
}
