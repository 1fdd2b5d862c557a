//! Graphviz output.

use std::fmt::Write;

use sigmabeta_core::algebra::FinBoolAlg;
use sigmabeta_core::harness::DiagramBundle;
use sigmabeta_core::stone::phi_table;
use sigmabeta_core::Bits;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

fn point_set(s: Bits) -> String {
    let names: Vec<String> = s.iter().map(|u| format!("u{u}")).collect();
    format!("{{{}}}", names.join(","))
}

/// Hasse diagram of `b`, bottom up, each element annotated with the
/// ultrafilters containing it.
pub fn algebra_dot(name: &str, b: &FinBoolAlg) -> String {
    let phi = phi_table(b).expect("nondegenerate algebra");
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (e, &set) in phi.iter().enumerate() {
        let label = format!("{}\nin {}", b.label(e), point_set(set));
        writeln!(out, "  e{e} [label={}];", quote(&label)).unwrap();
    }
    for (lo, hi) in b.lattice().poset().covers() {
        writeln!(out, "  e{lo} -> e{hi};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

fn is_identity(table: &[usize]) -> bool {
    table.iter().enumerate().all(|(i, &t)| i == t)
}

fn table_tooltip(table: &[usize]) -> String {
    let mut s = format!("table {table:?}");
    if is_identity(table) {
        s.push_str("; identity");
    }
    s
}

/// The two-row diagram of dual, lift and dual again for one homomorphism.
pub fn diagram_dot(hom_name: &str, source: &str, target: &str, d: &DiagramBundle) -> String {
    let h = d.hom();
    let beta1: Vec<usize> = (0..d.dual_source().len())
        .map(|x| d.beta_source().embed(x))
        .collect();
    let beta2: Vec<usize> = (0..d.dual_target().len())
        .map(|x| d.beta_target().embed(x))
        .collect();
    let dd: Vec<usize> = d.double_dual().iter().map(|s| s.0 as usize).collect();
    let nodes = [
        ("B1", source.to_owned(), h.source().size()),
        ("U1", format!("Uf({source})"), d.dual_source().len()),
        ("V1", format!("β(Uf({source}))"), d.beta_source().len()),
        ("P1", format!("P(Uf({source}))"), 1 << d.dual_source().len()),
        ("B2", target.to_owned(), h.target().size()),
        ("U2", format!("Uf({target})"), d.dual_target().len()),
        ("V2", format!("β(Uf({target}))"), d.beta_target().len()),
        ("P2", format!("P(Uf({target}))"), 1 << d.dual_target().len()),
    ];
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(hom_name)).unwrap();
    writeln!(out, "  node [shape=plaintext, fontname=\"serif\"];").unwrap();
    for row in [&nodes[..4], &nodes[4..]] {
        writeln!(out, "  {{ rank=same;").unwrap();
        for (id, label, size) in row {
            writeln!(
                out,
                "    {id} [label={}, tooltip={}];",
                quote(label),
                quote(&format!("{size} elements"))
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    let functor = |out: &mut String, from: &str, to: &str, label: &str, tooltip: &str| {
        writeln!(
            out,
            "  {from} -> {to} [label={}, style=dashed, tooltip={}];",
            quote(label),
            quote(tooltip)
        )
        .unwrap();
    };
    let arrow = |out: &mut String, from: &str, to: &str, label: &str, table: &[usize]| {
        writeln!(
            out,
            "  {from} -> {to} [label={}, tooltip={}];",
            quote(label),
            quote(&table_tooltip(table))
        )
        .unwrap();
    };
    for (i, (b, u, v, p, beta)) in [
        ("B1", "U1", "V1", "P1", &beta1),
        ("B2", "U2", "V2", "P2", &beta2),
    ]
    .into_iter()
    .enumerate()
    {
        functor(&mut out, b, u, "(.)_*", "ultrafilter dual");
        arrow(&mut out, u, v, &format!("β{}", i + 1), beta);
        functor(&mut out, v, p, "(.)^*", "clopen dual");
    }
    arrow(&mut out, "B1", "B2", "h", h.table());
    arrow(&mut out, "U2", "U1", "h_*", d.h_star().table());
    arrow(&mut out, "V2", "V1", "h_*^β", d.h_star_beta().table());
    arrow(&mut out, "P1", "P2", "(h_*^β)^*", &dd);
    writeln!(out, "}}").unwrap();
    out
}
