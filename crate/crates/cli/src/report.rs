//! Report JSON. Keys are sorted (serde_json's default map), so equal
//! reports serialize to equal bytes.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use sigmabeta_core::harness::{Check, InstanceReport, VerificationReport, Witness};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn input_digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn witness_value(w: &Witness) -> Value {
    let mut m = Map::new();
    if let Some((a, b)) = w.algebra_sizes {
        m.insert("algebra_atoms".into(), json!([a, b]));
    }
    if let Some(t) = &w.hom_table {
        m.insert("hom_table".into(), json!(t));
    }
    if let Some(s) = w.subset {
        m.insert("subset".into(), json!(s));
    }
    if let Some(p) = w.point {
        m.insert("point".into(), json!(p));
    }
    if !w.detail.is_empty() {
        m.insert("detail".into(), json!(w.detail));
    }
    Value::Object(m)
}

fn check_value(c: &Check) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(c.name));
    m.insert("verdict".into(), json!(c.verdict.as_str()));
    m.insert("asserted".into(), json!(c.asserted));
    if let Some(w) = &c.witness {
        m.insert("witness".into(), witness_value(w));
    }
    Value::Object(m)
}

fn instance_value(i: &InstanceReport) -> Value {
    json!({
        "descriptor": i.descriptor,
        "passed": i.passed(),
        "checks": i.checks.iter().map(check_value).collect::<Vec<_>>(),
        "timing_ms": i.timing_ms,
    })
}

pub fn report_value(report: &VerificationReport, input_digest: &str) -> Value {
    let checks: usize = report.instances.iter().map(|i| i.checks.len()).sum();
    json!({
        "schema_version": SCHEMA_VERSION,
        "tool_version": TOOL_VERSION,
        "input_digest": input_digest,
        "passed": report.passed(),
        "summary": {
            "instances": report.instances.len(),
            "checks": checks,
            "failures": report.failures().count(),
        },
        "instances": report.instances.iter().map(instance_value).collect::<Vec<_>>(),
    })
}

pub fn report_json(report: &VerificationReport, input_digest: &str) -> String {
    let mut s = serde_json::to_string_pretty(&report_value(report, input_digest))
        .expect("reports serialize");
    s.push('\n');
    s
}
