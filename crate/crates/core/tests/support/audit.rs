//! Static module-dependency audit against `ownership.toml`.
//!
//! Reads every non-test `crate::`/`super::`/`self::` path in `src/`,
//! resolves it to the module that defines the named item and checks the
//! manifest's route rules.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub struct Manifest {
    pub primitive: Vec<String>,
    pub routes: BTreeMap<String, Vec<String>>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Manifest, String> {
        let v: toml::Table = text.parse().map_err(|e| format!("manifest: {e}"))?;
        let list = |t: &toml::Value| -> Result<Vec<String>, String> {
            t.get("modules")
                .and_then(|m| m.as_array())
                .ok_or("manifest section without a modules array")?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| "module names must be strings".to_owned())
                })
                .collect()
        };
        let primitive = list(v.get("primitive").ok_or("manifest has no [primitive]")?)?;
        let mut routes = BTreeMap::new();
        for (name, r) in v
            .get("routes")
            .and_then(|r| r.as_table())
            .ok_or("manifest has no [routes]")?
        {
            routes.insert(name.clone(), list(r)?);
        }
        Ok(Manifest { primitive, routes })
    }
}

#[derive(Debug, Default)]
pub struct Audit {
    /// Module -> modules it depends on, self-edges removed.
    pub edges: BTreeMap<String, BTreeSet<String>>,
    pub violations: Vec<String>,
}

impl Audit {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn module_files(src: &Path) -> BTreeMap<String, PathBuf> {
    fn walk(dir: &Path, prefix: &str, out: &mut BTreeMap<String, PathBuf>) {
        let mut entries: Vec<_> = fs::read_dir(dir)
            .expect("readable src dir")
            .flatten()
            .collect();
        entries.sort_by_key(|e| e.path());
        for e in entries {
            let path = e.path();
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            let join = |n: &str| {
                if prefix.is_empty() {
                    n.to_owned()
                } else {
                    format!("{prefix}::{n}")
                }
            };
            if path.is_dir() {
                walk(&path, &join(&name), out);
            } else if path.extension().is_some_and(|x| x == "rs") {
                let module = match name.as_str() {
                    "lib" | "main" if prefix.is_empty() => String::new(),
                    "mod" => prefix.to_owned(),
                    _ => join(&name),
                };
                out.insert(module, path);
            }
        }
    }
    let mut out = BTreeMap::new();
    walk(src, "", &mut out);
    out
}

/// Source with test modules and comments removed.
fn production_code(text: &str) -> String {
    let body = text.split("#[cfg(test)]").next().unwrap_or("");
    body.lines()
        .map(|l| l.split("//").next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Expands `a::{b, c::{d, e as f}}` into `a::b`, `a::c::d`, `a::c::e`.
fn expand(tree: &str) -> Vec<String> {
    let mut out = Vec::new();
    expand_into("", tree, &mut out);
    out
}

fn expand_into(prefix: &str, tree: &str, out: &mut Vec<String>) {
    for part in split_top(tree) {
        let part = part.trim();
        if let (Some(open), Some(close)) = (part.find('{'), part.rfind('}')) {
            let head = part[..open].trim().trim_end_matches("::");
            expand_into(&join(prefix, head), &part[open + 1..close], out);
            continue;
        }
        let part: String = part
            .split(" as ")
            .next()
            .unwrap_or("")
            .split_whitespace()
            .collect();
        if part == "self" {
            out.push(prefix.to_owned());
        } else if !part.is_empty() {
            out.push(join(prefix, &part));
        }
    }
}

fn join(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_owned(),
        (_, true) => a.to_owned(),
        _ => format!("{a}::{b}"),
    }
}

fn split_top(s: &str) -> Vec<&str> {
    let (mut depth, mut start, mut parts) = (0, 0, Vec::new());
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Every path the code names through `use` or an inline `crate::`/`super::`
/// prefix. `use` paths are returned as written.
fn referenced_paths(code: &str) -> Vec<String> {
    let mut paths = Vec::new();
    let mut rest = code.to_owned();
    // use statements first, removed so their tails are not scanned twice
    let mut from = 0;
    while let Some(i) = rest[from..].find("use ") {
        let at = from + i;
        if rest[..at].chars().last().is_some_and(is_ident) {
            from = at + 4;
            continue;
        }
        let Some(end) = rest[at..].find(';') else {
            break;
        };
        paths.extend(expand(&rest[at + 4..at + end]));
        rest.replace_range(at..at + end + 1, "");
        from = at;
    }
    for anchor in ["crate::", "super::"] {
        let mut from = 0;
        while let Some(i) = rest[from..].find(anchor) {
            let start = from + i;
            let preceded = rest[..start]
                .chars()
                .last()
                .is_some_and(|c| is_ident(c) || c == ':');
            let end = rest[start..]
                .find(|c: char| !(is_ident(c) || c == ':'))
                .map_or(rest.len(), |e| start + e);
            if !preceded {
                paths.push(rest[start..end].trim_end_matches(':').to_owned());
            }
            from = end;
        }
    }
    paths
}

fn parent(module: &str) -> String {
    module
        .rsplit_once("::")
        .map_or(String::new(), |(p, _)| p.to_owned())
}

fn defines(text: &str, item: &str) -> bool {
    let code = production_code(text);
    ["fn", "struct", "enum", "const", "trait", "type", "static"]
        .iter()
        .any(|kw| {
            code.match_indices(&format!("{kw} {item}")).any(|(i, m)| {
                code[i + m.len()..]
                    .chars()
                    .next()
                    .is_none_or(|c| !(c.is_alphanumeric() || c == '_'))
            })
        })
}

/// The module that defines what `path` (absolute, without `crate::`) names.
fn resolve(
    path: &str,
    files: &BTreeMap<String, PathBuf>,
    texts: &BTreeMap<String, String>,
) -> Option<String> {
    let segments: Vec<&str> = path.split("::").filter(|s| !s.is_empty()).collect();
    let mut module = String::new();
    let mut used = 0;
    for (i, s) in segments.iter().enumerate() {
        let candidate = join(&module, s);
        if files.contains_key(&candidate) {
            module = candidate;
            used = i + 1;
        } else {
            break;
        }
    }
    let Some(item) = segments.get(used) else {
        return Some(module);
    };
    if *item == "*" {
        return Some(module);
    }
    if texts.get(&module).is_some_and(|t| defines(t, item)) {
        return Some(module);
    }
    // a re-export: find the child that defines it
    let prefix = format!("{module}::");
    files
        .keys()
        .filter(|m| module.is_empty() || m.starts_with(&prefix))
        .find(|m| texts.get(*m).is_some_and(|t| defines(t, item)))
        .cloned()
        .or(Some(module))
}

fn covered(module: &str, owners: &[String]) -> bool {
    owners
        .iter()
        .any(|o| module == o || module.starts_with(&format!("{o}::")))
}

pub fn run(crate_dir: &Path) -> Result<Audit, String> {
    let manifest_text =
        fs::read_to_string(crate_dir.join("ownership.toml")).map_err(|e| e.to_string())?;
    let manifest = Manifest::parse(&manifest_text)?;
    let src = crate_dir.join("src");
    let files = module_files(&src);
    let texts: BTreeMap<String, String> = files
        .iter()
        .map(|(m, p)| (m.clone(), fs::read_to_string(p).expect("readable source")))
        .collect();

    let mut audit = Audit::default();
    for (module, text) in &texts {
        let mut deps = BTreeSet::new();
        for path in referenced_paths(&production_code(text)) {
            let first = path.split("::").next().unwrap_or("");
            let absolute = if let Some(rest) = path.strip_prefix("crate::") {
                rest.to_owned()
            } else if let Some(rest) = path.strip_prefix("super::") {
                join(&parent(module), rest)
            } else if let Some(rest) = path.strip_prefix("self::") {
                join(module, rest)
            } else if files.contains_key(&join(module, first)) {
                // a child module named relative to its parent
                join(module, &path)
            } else {
                // extern crates and std
                continue;
            };
            if let Some(dep) = resolve(&absolute, &files, &texts) {
                if &dep != module && !dep.is_empty() {
                    deps.insert(dep);
                }
            }
        }
        audit.edges.insert(module.clone(), deps);
    }

    let mut groups: Vec<(&str, &[String])> = vec![("primitive", &manifest.primitive)];
    groups.extend(
        manifest
            .routes
            .iter()
            .map(|(n, m)| (n.as_str(), m.as_slice())),
    );
    for (name, owners) in &groups {
        for o in owners.iter() {
            if !files.contains_key(o) {
                audit
                    .violations
                    .push(format!("{name}: listed module `{o}` does not exist"));
            }
        }
    }
    for module in files.keys() {
        let owning: Vec<&str> = groups
            .iter()
            .filter(|(_, o)| covered(module, o))
            .map(|(n, _)| *n)
            .collect();
        if owning.len() > 1 {
            audit
                .violations
                .push(format!("`{module}` is owned by {owning:?}"));
        }
    }
    for (module, deps) in &audit.edges {
        let allowed: Option<(&str, Vec<String>)> = if covered(module, &manifest.primitive) {
            Some(("primitive", manifest.primitive.clone()))
        } else {
            manifest
                .routes
                .iter()
                .find(|(_, o)| covered(module, o))
                .map(|(n, o)| {
                    let mut a = manifest.primitive.clone();
                    a.extend(o.iter().cloned());
                    (n.as_str(), a)
                })
        };
        let Some((group, allowed)) = allowed else {
            continue;
        };
        for dep in deps {
            if !covered(dep, &allowed) {
                audit
                    .violations
                    .push(format!("`{module}` ({group}) depends on `{dep}`"));
            }
        }
    }
    Ok(audit)
}

#[cfg(test)]
mod parse_tests {
    use super::*;

    #[test]
    fn expands_nested_groups() {
        assert_eq!(
            expand("crate::a::{b, c::{d, e as f}, self}"),
            [
                "crate::a::b",
                "crate::a::c::d",
                "crate::a::c::e",
                "crate::a"
            ]
        );
    }

    #[test]
    fn finds_inline_paths() {
        let code = "fn f(x: &crate::algebra::FinBoolAlg) { super::g(); notcrate::x(); }";
        assert_eq!(
            referenced_paths(code),
            ["crate::algebra::FinBoolAlg", "super::g"]
        );
    }
}
