use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::arith::Rational;
use crate::cone::GradedModule;
use crate::cosmetic::{CosmeticReport, Verdict};

pub const TOOL: &str = "surgery-gate";

/// Top-level output of every command. Key order is fixed (objects are
/// sorted maps), so identical inputs give identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input_digest: String,
    pub results: Value,
}

impl ReportDocument {
    pub fn new(command: &str, input_digest: String, results: Value) -> Self {
        ReportDocument {
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            input_digest,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialise");
        s.push('\n');
        s
    }
}

/// `sha256:` over the arguments (NUL separated) followed by any input files.
pub fn input_digest(args: &[String], files: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for a in args {
        h.update(a.as_bytes());
        h.update([0u8]);
    }
    for f in files {
        h.update(f);
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_fraction_string())
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn graded_module(m: &GradedModule) -> Value {
    json!({
        "tower_bottom": m.tower_bottom.as_ref().map(rational),
        "reduced": m.reduced.iter().map(|(g, r)| json!({"grading": rational(g), "rank": r})).collect::<Vec<_>>(),
        "reduced_rank": m.reduced_rank(),
    })
}

pub fn cosmetic_report(r: &CosmeticReport) -> Value {
    let verdict = match &r.verdict {
        Verdict::Obstructed { reason } => json!({"kind": "Obstructed", "reason": reason}),
        Verdict::NotObstructed { candidates } => json!({
            "kind": "NotObstructed",
            "candidates": candidates.iter().map(|c| format!("{}/{}", c.p, c.q)).collect::<Vec<_>>(),
        }),
        Verdict::Indeterminate { missing } => json!({"kind": "Indeterminate", "missing": missing}),
    };
    json!({
        "knot": r.knot_name,
        "verdict": verdict,
        "checks": r.checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.as_str(),
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    })
}
