//! JSON documents describing algebras and homomorphisms.
//!
//! ```json
//! {
//!   "algebras": [
//!     {"name": "B4", "powerset": 2},
//!     {"name": "Four", "carrier": ["0", "a", "b", "1"],
//!      "leq": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
//!      "complement": [["0", "1"], ["a", "b"]]},
//!     {"name": "Alias", "ref": "B4"}
//!   ],
//!   "homs": [
//!     {"name": "swap", "source": "B4", "target": "B4", "atom_map": [[0, 1], [1, 0]]},
//!     {"name": "iso", "source": "B4", "target": "Four",
//!      "map": [["{}", "0"], ["{0}", "a"], ["{1}", "b"], ["{0,1}", "1"]]}
//!   ]
//! }
//! ```
//!
//! Elements are named by label; integers name canonical element indices.
//! `atom_map` pairs `[p, q]` send target atom `p` to source atom `q`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sigmabeta_core::algebra::{
    atoms, hom_from_atom_map, powerset_algebra, validate_boolean_algebra, validate_hom, BoolHom,
    FinBoolAlg, Presentation,
};

use crate::error::CliError;

/// An element or atom reference: a label or a canonical index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub powerset: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<(String, String)>>,
    #[serde(default, rename = "ref", skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<(Ref, Ref)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atom_map: Option<Vec<(Ref, Ref)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    #[serde(default)]
    pub algebras: Vec<AlgebraDoc>,
    #[serde(default)]
    pub homs: Vec<HomDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedAlgebra {
    pub doc: AlgebraDoc,
    pub algebra: Arc<FinBoolAlg>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedHom {
    pub doc: HomDoc,
    pub hom: BoolHom,
}

/// A parsed and validated document.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub algebras: Vec<NamedAlgebra>,
    pub homs: Vec<NamedHom>,
}

impl Document {
    pub fn algebra(&self, name: &str) -> Result<&NamedAlgebra, CliError> {
        self.algebras
            .iter()
            .find(|a| a.doc.name == name)
            .ok_or_else(|| CliError::UnknownName {
                kind: "algebra",
                name: name.to_owned(),
            })
    }

    pub fn hom(&self, name: &str) -> Result<&NamedHom, CliError> {
        self.homs
            .iter()
            .find(|h| h.doc.name == name)
            .ok_or_else(|| CliError::UnknownName {
                kind: "hom",
                name: name.to_owned(),
            })
    }

    pub fn raw(&self) -> RawDocument {
        RawDocument {
            algebras: self.algebras.iter().map(|a| a.doc.clone()).collect(),
            homs: self.homs.iter().map(|h| h.doc.clone()).collect(),
        }
    }
}

/// Line of the first `"name": "<name>"` entry, for error context.
fn line_of(text: &str, name: &str) -> usize {
    let needle = serde_json::to_string(name).unwrap_or_default();
    text.match_indices(&needle)
        .find(|(i, _)| {
            let before = text[..*i].trim_end();
            before.ends_with(':') && before[..before.len() - 1].trim_end().ends_with("\"name\"")
        })
        .map_or(0, |(i, _)| text[..i].matches('\n').count() + 1)
}

struct Ctx<'a> {
    text: &'a str,
    path: String,
    name: &'a str,
}

impl Ctx<'_> {
    fn schema(&self, field: &str, message: impl Into<String>) -> CliError {
        CliError::Schema {
            path: format!("{}.{field}", self.path),
            line: line_of(self.text, self.name),
            message: message.into(),
        }
    }

    fn validation(&self, field: &str, source: sigmabeta_core::Error) -> CliError {
        CliError::Validation {
            path: format!("{}.{field}", self.path),
            line: line_of(self.text, self.name),
            source,
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(text, raw)
}

/// Validates an already deserialized document. `text` is only used to
/// locate errors.
pub fn build(text: &str, raw: RawDocument) -> Result<Document, CliError> {
    let mut doc = Document::default();
    for (i, a) in raw.algebras.into_iter().enumerate() {
        let ctx = Ctx {
            text,
            path: format!("algebras[{i}]"),
            name: &a.name,
        };
        if doc.algebras.iter().any(|b| b.doc.name == a.name) {
            return Err(ctx.schema("name", format!("duplicate algebra name `{}`", a.name)));
        }
        let algebra = build_algebra(&ctx, &a, &doc)?;
        doc.algebras.push(NamedAlgebra { doc: a, algebra });
    }
    for (i, h) in raw.homs.into_iter().enumerate() {
        let ctx = Ctx {
            text,
            path: format!("homs[{i}]"),
            name: &h.name,
        };
        if doc.homs.iter().any(|g| g.doc.name == h.name) {
            return Err(ctx.schema("name", format!("duplicate hom name `{}`", h.name)));
        }
        let hom = build_hom(&ctx, &h, &doc)?;
        doc.homs.push(NamedHom { doc: h, hom });
    }
    Ok(doc)
}

fn build_algebra(ctx: &Ctx, a: &AlgebraDoc, doc: &Document) -> Result<Arc<FinBoolAlg>, CliError> {
    let is_abstract = a.carrier.is_some() || a.leq.is_some() || a.complement.is_some();
    match (a.powerset, is_abstract, &a.reference) {
        (Some(n), false, None) => Ok(Arc::new(
            powerset_algebra(n).map_err(|e| ctx.validation("powerset", e))?,
        )),
        (None, true, None) => {
            let carrier = a
                .carrier
                .as_ref()
                .ok_or_else(|| ctx.schema("carrier", "missing"))?;
            let unique: BTreeSet<&String> = carrier.iter().collect();
            if unique.len() != carrier.len() {
                return Err(ctx.schema("carrier", "labels must be unique"));
            }
            let index = |field: &str, l: &String| {
                carrier
                    .iter()
                    .position(|c| c == l)
                    .ok_or_else(|| ctx.schema(field, format!("unknown label `{l}`")))
            };
            let pairs = |field: &str,
                         ps: &Option<Vec<(String, String)>>|
             -> Result<Vec<(usize, usize)>, CliError> {
                ps.iter()
                    .flatten()
                    .map(|(x, y)| Ok((index(field, x)?, index(field, y)?)))
                    .collect()
            };
            let pres = Presentation {
                labels: carrier.clone(),
                leq: pairs("leq", &a.leq)?,
                complement: pairs("complement", &a.complement)?,
            };
            Ok(Arc::new(
                validate_boolean_algebra(&pres).map_err(|e| ctx.validation("carrier", e))?,
            ))
        }
        (None, false, Some(r)) => doc
            .algebras
            .iter()
            .find(|b| &b.doc.name == r)
            .map(|b| b.algebra.clone())
            .ok_or_else(|| {
                ctx.schema(
                    "ref",
                    format!("`{r}` is not defined earlier in the document"),
                )
            }),
        _ => Err(ctx.schema(
            "name",
            "give exactly one of `powerset`, `carrier`/`leq`/`complement` or `ref`",
        )),
    }
}

fn element(ctx: &Ctx, field: &str, b: &FinBoolAlg, r: &Ref) -> Result<usize, CliError> {
    match r {
        Ref::Index(i) if *i < b.size() => Ok(*i),
        Ref::Index(i) => Err(ctx.schema(field, format!("element index {i} out of range"))),
        Ref::Label(l) => b
            .index_of_label(l)
            .ok_or_else(|| ctx.schema(field, format!("unknown element `{l}`"))),
    }
}

/// Atom number `k` (bit position) of an atom reference.
fn atom(ctx: &Ctx, field: &str, b: &FinBoolAlg, r: &Ref) -> Result<usize, CliError> {
    match r {
        Ref::Index(k) if *k < b.atom_count() => Ok(*k),
        Ref::Index(k) => Err(ctx.schema(field, format!("atom index {k} out of range"))),
        Ref::Label(_) => {
            let e = element(ctx, field, b, r)?;
            if !atoms(b).contains(e) {
                return Err(ctx.schema(field, format!("`{}` is not an atom", b.label(e))));
            }
            Ok(b.atom_mask(e).trailing_zeros() as usize)
        }
    }
}

fn build_hom(ctx: &Ctx, h: &HomDoc, doc: &Document) -> Result<BoolHom, CliError> {
    let source = doc
        .algebras
        .iter()
        .find(|a| a.doc.name == h.source)
        .ok_or_else(|| ctx.schema("source", format!("unknown algebra `{}`", h.source)))?
        .algebra
        .clone();
    let target = doc
        .algebras
        .iter()
        .find(|a| a.doc.name == h.target)
        .ok_or_else(|| ctx.schema("target", format!("unknown algebra `{}`", h.target)))?
        .algebra
        .clone();
    match (&h.map, &h.atom_map) {
        (Some(pairs), None) => {
            let mut table = vec![None; source.size()];
            for (x, y) in pairs {
                let a = element(ctx, "map", &source, x)?;
                let b = element(ctx, "map", &target, y)?;
                if table[a].is_some_and(|prev| prev != b) {
                    return Err(ctx.schema("map", format!("`{}` is mapped twice", source.label(a))));
                }
                table[a] = Some(b);
            }
            let table = table
                .iter()
                .enumerate()
                .map(|(a, t)| {
                    t.ok_or_else(|| {
                        ctx.schema("map", format!("`{}` is not mapped", source.label(a)))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            validate_hom(table, source, target).map_err(|e| ctx.validation("map", e))
        }
        (None, Some(pairs)) => {
            let mut dual = vec![None; target.atom_count()];
            for (p, q) in pairs {
                let t = atom(ctx, "atom_map", &target, p)?;
                let s = atom(ctx, "atom_map", &source, q)?;
                if dual[t].is_some_and(|prev| prev != s) {
                    return Err(ctx.schema("atom_map", format!("target atom {t} is mapped twice")));
                }
                dual[t] = Some(s);
            }
            let dual = dual
                .iter()
                .enumerate()
                .map(|(t, s)| {
                    s.ok_or_else(|| {
                        ctx.schema("atom_map", format!("target atom {t} is not mapped"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            hom_from_atom_map(source, target, &dual).map_err(|e| ctx.validation("atom_map", e))
        }
        _ => Err(ctx.schema("map", "give exactly one of `map` or `atom_map`")),
    }
}

/// Pretty JSON for a document, in the same schema it was read from.
pub fn render(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&doc.raw()).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use sigmabeta_core::Error;

    #[test]
    fn single_powerset() {
        let d = parse_document(r#"{"algebras":[{"name":"B2","powerset":1}]}"#).unwrap();
        assert_eq!(d.algebras.len(), 1);
        assert_eq!(d.algebra("B2").unwrap().algebra.size(), 2);
    }

    #[test]
    fn three_element_abstract_algebra_is_rejected() {
        let text = r#"{"algebras":[{"name":"T","carrier":["0","m","1"],
            "leq":[["0","m"],["m","1"]],"complement":[["0","1"]]}]}"#;
        let err = parse_document(text).unwrap_err();
        assert!(
            matches!(
                err,
                CliError::Validation {
                    source: Error::ComplementLawFails { .. } | Error::NotALattice { .. },
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn atom_shorthand_matches_direct_table() {
        let text = r#"{
          "algebras": [{"name": "B4", "powerset": 2}, {"name": "B2", "powerset": 1}],
          "homs": [
            {"name": "dual", "source": "B4", "target": "B2", "atom_map": [[0, 0]]},
            {"name": "direct", "source": "B4", "target": "B2",
             "map": [["{}", "{}"], ["{0}", "{0}"], ["{1}", "{}"], ["{0,1}", "{0}"]]}
          ]
        }"#;
        let d = parse_document(text).unwrap();
        let (a, b) = (&d.hom("dual").unwrap().hom, &d.hom("direct").unwrap().hom);
        assert_eq!(a.table(), b.table());
        assert!(a.is_surjective());
    }

    #[test]
    fn errors_carry_context() {
        let text = "{\n\"algebras\": [\n{\"name\": \"X\", \"powerset\": 9}\n]}";
        match parse_document(text).unwrap_err() {
            CliError::Validation { path, line, .. } => {
                assert_eq!(path, "algebras[0].powerset");
                assert_eq!(line, 3);
            }
            e => panic!("{e}"),
        }
        assert!(matches!(
            parse_document("{\"algebras\": [}").unwrap_err(),
            CliError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            parse_document(r#"{"algebras":[{"name":"A","powerset":1,"ref":"A"}]}"#).unwrap_err(),
            CliError::Schema { .. }
        ));
    }

    #[test]
    fn ref_shares_the_algebra() {
        let d =
            parse_document(r#"{"algebras":[{"name":"A","powerset":2},{"name":"B","ref":"A"}]}"#)
                .unwrap();
        assert_eq!(
            d.algebra("A").unwrap().algebra,
            d.algebra("B").unwrap().algebra
        );
        assert!(parse_document(r#"{"algebras":[{"name":"B","ref":"A"}]}"#).is_err());
    }

    #[test]
    fn render_round_trip() {
        let d = parse_document(crate::SAMPLE_DOCUMENT).unwrap();
        assert_eq!(parse_document(&render(&d)).unwrap(), d);
    }
}
