#[path = "support/audit.rs"]
mod audit;

use std::path::Path;

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn routes_share_only_primitives() {
    let audit = audit::run(crate_dir()).unwrap();
    assert!(audit.passed(), "{:#?}", audit.violations);
}

#[test]
fn audit_sees_the_expected_edges() {
    let audit = audit::run(crate_dir()).unwrap();
    let deps = |m: &str| audit.edges[m].iter().cloned().collect::<Vec<_>>();
    assert!(deps("canext::sigma").contains(&"stone::embedding".to_owned()));
    assert!(deps("harness::diagram").contains(&"beta::space".to_owned()));
    assert!(deps("harness::diagram").contains(&"stone::functor".to_owned()));
    assert!(deps("harness::verify").contains(&"canext::sigma".to_owned()));
    assert!(deps("harness::verify").contains(&"harness::diagram".to_owned()));
    assert!(deps("beta::space").contains(&"beta::compactification".to_owned()));
}

#[test]
fn audit_catches_a_cross_route_import() {
    let dir = tempdir();
    let src = dir.join("src");
    std::fs::create_dir_all(src.join("canext")).unwrap();
    std::fs::create_dir_all(src.join("beta")).unwrap();
    std::fs::write(
        src.join("lib.rs"),
        "pub mod bits;\npub mod canext;\npub mod beta;\n",
    )
    .unwrap();
    std::fs::write(src.join("bits.rs"), "pub struct Bits;\n").unwrap();
    std::fs::write(src.join("canext/mod.rs"), "pub mod sigma;\n").unwrap();
    std::fs::write(
        src.join("canext/sigma.rs"),
        "use crate::bits::Bits;\nuse crate::beta::lift;\npub fn sigma() {}\n",
    )
    .unwrap();
    std::fs::write(
        src.join("beta/mod.rs"),
        "pub fn lift() { crate::canext::sigma::sigma(); }\n",
    )
    .unwrap();
    std::fs::write(
        dir.join("ownership.toml"),
        "[primitive]\nmodules = [\"bits\"]\n[routes.filter]\nmodules = [\"canext::sigma\"]\n[routes.chase]\nmodules = [\"beta\"]\n",
    )
    .unwrap();
    let audit = audit::run(&dir).unwrap();
    assert_eq!(
        audit.violations,
        [
            "`beta` (chase) depends on `canext::sigma`",
            "`canext::sigma` (filter) depends on `beta`",
        ]
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("sigmabeta-audit-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}
