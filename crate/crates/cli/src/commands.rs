//! Subcommand bodies. Each returns the text to print or write; the binary
//! only routes output and maps errors to exit codes.

use std::fmt::Write;
use std::path::Path;
use std::time::Instant;

use serde_json::json;
use sigmabeta_core::canext::{canonical_extension, is_compact, is_dense, Compactness, Density};
use sigmabeta_core::harness::{
    build_diagram, suite_instances, verify_instance, Instance, SamplePolicy, VerificationReport,
};
use sigmabeta_core::stone::{dual_space, phi_table};

use crate::document::{parse_document, Document, NamedAlgebra};
use crate::dot::{algebra_dot, diagram_dot};
use crate::error::CliError;
use crate::report::{input_digest, report_json};

/// The document text and its parsed form.
pub struct Input {
    pub text: String,
    pub doc: Document,
}

/// Reads `path`, or the bundled sample document when no path is given.
pub fn load(path: Option<&Path>) -> Result<Input, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?,
        None => crate::SAMPLE_DOCUMENT.to_owned(),
    };
    let doc = parse_document(&text)?;
    Ok(Input { text, doc })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn cmd_dual(doc: &Document, name: &str, format: Format) -> Result<String, CliError> {
    let NamedAlgebra { algebra: b, .. } = doc.algebra(name)?;
    let space = dual_space(b)?;
    let phi = phi_table(b)?;
    let point = |u: usize| format!("u{u}");
    let members = |u: usize| -> Vec<String> {
        space
            .point(u)
            .members()
            .iter()
            .map(|a| b.label(a))
            .collect()
    };
    match format {
        Format::Dot => Ok(algebra_dot(name, b)),
        Format::Json => Ok(pretty(&json!({
            "algebra": name,
            "elements": b.size(),
            "atoms": b.atom_count(),
            "points": (0..space.len()).map(|u| json!({
                "name": point(u),
                "generator": b.label(space.point(u).generator()),
                "members": members(u),
            })).collect::<Vec<_>>(),
            "base": (0..b.size()).map(|a| json!({
                "element": b.label(a),
                "points": phi[a].iter().map(point).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }))),
        Format::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "algebra {name}: {} elements, {} atoms",
                b.size(),
                b.atom_count()
            )
            .unwrap();
            let kind = if space.is_discrete() {
                "discrete"
            } else {
                "not discrete"
            };
            writeln!(out, "dual space Uf({name}): {} points, {kind}", space.len()).unwrap();
            for u in 0..space.len() {
                writeln!(
                    out,
                    "  {}  generated by {}  contains {}",
                    point(u),
                    b.label(space.point(u).generator()),
                    members(u).join(", ")
                )
                .unwrap();
            }
            writeln!(out, "clopen base:").unwrap();
            let width = (0..b.size())
                .map(|a| b.label(a).chars().count())
                .max()
                .unwrap_or(0);
            for (a, set) in phi.iter().enumerate() {
                let pts: Vec<String> = set.iter().map(point).collect();
                writeln!(out, "  {:<width$}  -> {{{}}}", b.label(a), pts.join(",")).unwrap();
            }
            Ok(out)
        }
    }
}

pub fn cmd_canext(doc: &Document, name: &str, format: Format) -> Result<String, CliError> {
    let b = &doc.algebra(name)?.algebra;
    let ext = canonical_extension(b)?;
    let c = ext.completion();
    let verdict = |ok: bool| if ok { "pass" } else { "fail" };
    let dense = verdict(is_dense(c) == Density::Dense);
    let compact = verdict(is_compact(c) == Compactness::Compact);
    let points = ext.points().len();
    let size = c.complete().size();
    Ok(match format {
        Format::Json => pretty(&json!({
            "algebra": name,
            "ultrafilters": points,
            "extension_size": size,
            "dense": dense,
            "compact": compact,
        })),
        _ => format!("canonical extension of {name}\n|Uf| = {points}\n|B^σ| = {size}\ndense: {dense}\ncompact: {compact}\n"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyTarget {
    Hom(String),
    All {
        max_atoms: usize,
        policy: SamplePolicy,
    },
}

/// Report JSON and whether every asserted check passed.
pub fn cmd_verify(
    input: &Input,
    target: &VerifyTarget,
    timing: bool,
) -> Result<(String, bool), CliError> {
    let (instances, digest) = match target {
        VerifyTarget::Hom(name) => {
            let h = input.doc.hom(name)?;
            let digest = input_digest(format!("{}\nverify {name}\n", input.text).as_bytes());
            (vec![(Some(h), Instance::Hom(h.hom.clone()))], digest)
        }
        VerifyTarget::All { max_atoms, policy } => {
            let request = match policy {
                SamplePolicy::Exhaustive => format!("verify --all --max-atoms {max_atoms}\n"),
                SamplePolicy::Seeded { seed, count } => {
                    format!("verify --all --max-atoms {max_atoms} --seed {seed} --count {count}\n")
                }
            };
            let instances = suite_instances(*max_atoms, *policy)?
                .into_iter()
                .map(|i| (None, i))
                .collect();
            (instances, input_digest(request.as_bytes()))
        }
    };
    let mut report = VerificationReport::default();
    for (named, instance) in instances {
        let start = Instant::now();
        let mut r = verify_instance(&instance)?;
        if timing {
            r.timing_ms = Some(start.elapsed().as_millis() as u64);
        }
        if let Some(h) = named {
            r.descriptor = format!("hom {}: {} -> {}", h.doc.name, h.doc.source, h.doc.target);
        }
        report.instances.push(r);
    }
    report.sort();
    Ok((report_json(&report, &digest), report.passed()))
}

pub fn cmd_diagram(doc: &Document, name: &str) -> Result<String, CliError> {
    let h = doc.hom(name)?;
    let bundle = build_diagram(&h.hom)?;
    Ok(diagram_dot(name, &h.doc.source, &h.doc.target, &bundle))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Input {
        load(None).unwrap()
    }

    #[test]
    fn dual_listing() {
        let out = cmd_dual(&sample().doc, "B4", Format::Text).unwrap();
        assert!(out.contains("dual space Uf(B4): 2 points, discrete"));
        assert!(out.contains("u0  generated by {0}"));
        assert!(out.contains("u1  generated by {1}"));
        let one = cmd_dual(&sample().doc, "B2", Format::Text).unwrap();
        assert!(one.contains("1 points"));
    }

    #[test]
    fn canext_summary() {
        let out = cmd_canext(&sample().doc, "B8", Format::Text).unwrap();
        assert_eq!(
            out,
            "canonical extension of B8\n|Uf| = 3\n|B^σ| = 8\ndense: pass\ncompact: pass\n"
        );
        let out = cmd_canext(&sample().doc, "B16", Format::Text).unwrap();
        assert!(out.contains("|B^σ| = 16"));
    }

    #[test]
    fn unknown_names() {
        assert!(matches!(
            cmd_dual(&sample().doc, "nope", Format::Text),
            Err(CliError::UnknownName { .. })
        ));
        assert!(matches!(
            cmd_diagram(&sample().doc, "nope"),
            Err(CliError::UnknownName { .. })
        ));
    }

    #[test]
    fn verify_identity() {
        let (json, passed) =
            cmd_verify(&sample(), &VerifyTarget::Hom("id4".into()), false).unwrap();
        assert!(passed);
        assert!(json.contains("\"hom id4: B4 -> B4\""));
    }
}
