//! Per-instance checks. This is where the two routes meet; everything else
//! keeps them apart.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{
    powerset_algebra, ultrafilters, ultrafilters_brute_force, validate_hom, BoolHom, FinBoolAlg,
    MonotoneMap, BRUTE_FORCE_CARRIER,
};
use crate::beta::{beta_extend_to_compact, beta_lift, beta_preserves, beta_space, MapProperty};
use crate::bits::Bits;
use crate::canext::{
    canonical_extension, completion_isomorphic, is_compact, is_dense, lattice_embeddings,
    sigma_extend, Compactness, Completion, Density, SigmaExtension, MAX_ISO_SEARCH,
};
use crate::error::{Error, Result};
use crate::harness::diagram::{build_diagram, preimage_membership_witness, DiagramBundle};
use crate::harness::report::{Check, InstanceKey, InstanceKind, InstanceReport, Verdict, Witness};
use crate::stone::{phi_table, stone_representation};
use crate::topology::StoneSpace;

/// Errors that describe the input rather than a failed check.
fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::BoundExceeded { .. } | Error::DegenerateAlgebra | Error::EmptySpace
    )
}

fn hom_witness(h: &BoolHom) -> Witness {
    Witness {
        algebra_sizes: Some((h.source().atom_count(), h.target().atom_count())),
        hom_table: Some(h.table().to_vec()),
        ..Witness::default()
    }
}

fn error_witness(h: &BoolHom, e: &Error) -> Witness {
    let point = match *e {
        Error::CommutationFailure { point } => Some(point),
        _ => None,
    };
    let subset = match *e {
        Error::NoClopenPreimage { subset } => Some(subset),
        _ => None,
    };
    Witness {
        point,
        subset,
        detail: e.to_string(),
        ..hom_witness(h)
    }
}

pub fn hom_key(h: &BoolHom) -> InstanceKey {
    let mut data = alloc::vec![h.source().atom_count(), h.target().atom_count()];
    data.extend_from_slice(h.table());
    InstanceKey {
        kind: InstanceKind::Hom,
        data,
    }
}

pub fn hom_descriptor(h: &BoolHom) -> alloc::string::String {
    format!(
        "hom {} -> {} atoms, table {:?}",
        h.source().atom_count(),
        h.target().atom_count(),
        h.table()
    )
}

/// `h^σ` and `(h_*^β)^*` agree on every `A ⊆ Uf(B1)`, along with the
/// commuting square and the preimage/membership and outer-rectangle checks.
pub fn verify_main_theorem(h: &BoolHom) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let diagram = match build_diagram(h) {
        Ok(d) => {
            checks.push(Check::pass("diagram_commutes"));
            Some(d)
        }
        Err(e) if is_input_error(&e) => return Err(e),
        Err(e) => {
            checks.push(Check::fail("diagram_commutes", error_witness(h, &e)));
            None
        }
    };
    let sigma = match sigma_extend(h.as_monotone()) {
        Ok(s) => {
            checks.push(Check::pass("sigma_extension_defined"));
            Some(s)
        }
        Err(e) if is_input_error(&e) => return Err(e),
        Err(e) => {
            checks.push(Check::fail("sigma_extension_defined", error_witness(h, &e)));
            None
        }
    };
    let agree = match (&diagram, &sigma) {
        (Some(d), Some(s)) => Check::from_result("extensions_agree", compare(h, d, s)),
        _ => Check::fail(
            "extensions_agree",
            Witness {
                detail: "one of the two extensions could not be computed".to_string(),
                ..hom_witness(h)
            },
        ),
    };
    checks.push(agree);
    if let Some(d) = &diagram {
        let membership = preimage_membership_witness(d).map_or(Ok(()), |(delta, a)| {
            Err(Witness {
                subset: Some(a.0),
                point: Some(delta),
                detail: "preimage of the clopen and ultrafilter membership disagree".to_string(),
                ..hom_witness(h)
            })
        });
        checks.push(Check::from_result("preimage_membership", membership));
        checks.push(Check::from_result("outer_rectangle", outer_rectangle(h, d)));
    }
    Ok(checks)
}

fn compare(h: &BoolHom, d: &DiagramBundle, s: &SigmaExtension) -> Result<(), Witness> {
    for (a, (&via_filters, &via_beta)) in s.table().iter().zip(d.double_dual()).enumerate() {
        if via_filters != via_beta {
            let diff = (via_filters | via_beta).minus(via_filters & via_beta);
            return Err(Witness {
                subset: Some(a as u64),
                point: diff.first(),
                detail: format!("filter route {via_filters:?}, diagram route {via_beta:?}"),
                ..hom_witness(h)
            });
        }
    }
    Ok(())
}

/// `(h_*^β)^*(φ1(a)) = φ2(h(a))`.
fn outer_rectangle(h: &BoolHom, d: &DiagramBundle) -> Result<(), Witness> {
    let fail = |detail: alloc::string::String, point| Witness {
        point,
        detail,
        ..hom_witness(h)
    };
    let phi1 = phi_table(h.source()).map_err(|e| fail(e.to_string(), None))?;
    let phi2 = phi_table(h.target()).map_err(|e| fail(e.to_string(), None))?;
    for a in 0..h.source().size() {
        let got = d.double_dual()[phi1[a].0 as usize];
        if got != phi2[h.apply(a)] {
            return Err(fail(
                format!("got {got:?}, expected {:?}", phi2[h.apply(a)]),
                Some(a),
            ));
        }
    }
    Ok(())
}

/// Injectivity, surjectivity and isomorphism of `h` carry over to `h^σ`,
/// which must itself be a complete Boolean homomorphism.
pub fn verify_corollary(h: &BoolHom) -> Result<Vec<Check>> {
    let sigma = match sigma_extend(h.as_monotone()) {
        Ok(s) => s,
        Err(e) if is_input_error(&e) => return Err(e),
        Err(e) => {
            let w = error_witness(h, &e);
            return Ok([
                "sigma_complete_hom",
                "injective_preserved",
                "surjective_preserved",
                "isomorphism_preserved",
            ]
            .into_iter()
            .map(|n| Check::fail(n, w.clone()))
            .collect());
        }
    };
    let complete = complete_hom(&sigma).map_err(|w| with_hom(w, h));
    let is_hom = complete.is_ok();
    let mut checks = alloc::vec![Check::from_result("sigma_complete_hom", complete)];

    let distinct = {
        let mut t: Vec<u64> = sigma.table().iter().map(|s| s.0).collect();
        t.sort_unstable();
        t.dedup();
        t.len()
    };
    let injective = distinct == sigma.table().len();
    let surjective = distinct == 1 << sigma.target_points();
    let implication = |name: &'static str, premise: bool, conclusion: bool| {
        if !premise {
            Check::vacuous(name)
        } else if conclusion {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                Witness {
                    detail: "h has the property but its extension does not".to_string(),
                    ..hom_witness(h)
                },
            )
        }
    };
    checks.push(implication(
        "injective_preserved",
        h.is_injective(),
        injective,
    ));
    checks.push(implication(
        "surjective_preserved",
        h.is_surjective(),
        surjective,
    ));
    checks.push(implication(
        "isomorphism_preserved",
        h.is_injective() && h.is_surjective(),
        injective && surjective && is_hom,
    ));
    Ok(checks)
}

fn with_hom(w: Witness, h: &BoolHom) -> Witness {
    Witness {
        subset: w.subset,
        point: w.point,
        detail: w.detail,
        ..hom_witness(h)
    }
}

/// Families are enumerated outright up to this many source points; beyond
/// it only the binary operations and bounds are checked.
pub const FAMILY_CHECK_POINTS: usize = 3;

fn complete_hom(sigma: &SigmaExtension) -> Result<(), Witness> {
    let (n1, n2) = (sigma.source_points(), sigma.target_points());
    let fail = |detail: alloc::string::String, subset: Option<u64>| Witness {
        subset,
        detail,
        ..Witness::default()
    };
    let p1 = Arc::new(powerset_algebra(n1).map_err(|e| fail(e.to_string(), None))?);
    let p2 = Arc::new(powerset_algebra(n2).map_err(|e| fail(e.to_string(), None))?);
    let table = sigma.table().iter().map(|s| s.0 as usize).collect();
    validate_hom(table, p1, p2).map_err(|e| fail(e.to_string(), None))?;
    if n1 > FAMILY_CHECK_POINTS {
        return Ok(());
    }
    let subsets = 1usize << n1;
    for family in 0u64..1 << subsets {
        let members = Bits(family);
        let union = members
            .iter()
            .fold(Bits::EMPTY, |acc, s| acc | Bits(s as u64));
        let inter = members
            .iter()
            .fold(Bits::full(n1), |acc, s| acc & Bits(s as u64));
        let union_img = members
            .iter()
            .fold(Bits::EMPTY, |acc, s| acc | sigma.table()[s]);
        let inter_img = members
            .iter()
            .fold(Bits::full(n2), |acc, s| acc & sigma.table()[s]);
        if sigma.apply(union) != union_img {
            return Err(fail(
                format!("union of family {members:?} not preserved"),
                Some(union.0),
            ));
        }
        if sigma.apply(inter) != inter_img {
            return Err(fail(
                format!("intersection of family {members:?} not preserved"),
                Some(inter.0),
            ));
        }
    }
    Ok(())
}

/// Main theorem and corollary checks for one homomorphism.
pub fn verify_hom(h: &BoolHom) -> Result<InstanceReport> {
    let mut checks = verify_main_theorem(h)?;
    checks.extend(verify_corollary(h)?);
    Ok(InstanceReport {
        key: hom_key(h),
        descriptor: hom_descriptor(h),
        checks,
        timing_ms: None,
    })
}

/// Stone embedding, ultrafilter and canonical-extension checks for one
/// algebra.
pub fn verify_algebra(b: &Arc<FinBoolAlg>) -> Result<InstanceReport> {
    let n = b.atom_count();
    let base_witness = || Witness {
        algebra_sizes: Some((n, n)),
        ..Witness::default()
    };
    let fail_at = |point: usize, detail: &str| Witness {
        point: Some(point),
        detail: detail.to_string(),
        ..base_witness()
    };
    let mut checks = Vec::new();

    let ufs = ultrafilters(b)?;
    checks.push(Check::from_result(
        "ultrafilter_count",
        if ufs.len() == n {
            Ok(())
        } else {
            Err(Witness {
                detail: format!("{} ultrafilters for {n} atoms", ufs.len()),
                ..base_witness()
            })
        },
    ));
    if b.size() <= BRUTE_FORCE_CARRIER {
        let brute: Vec<Bits> = ultrafilters_brute_force(b)?
            .iter()
            .map(|f| f.members)
            .collect();
        let fast: Vec<Bits> = ufs.iter().map(|u| u.members()).collect();
        let r = if brute == fast {
            Ok(())
        } else {
            Err(Witness {
                detail: "principal and exhaustive ultrafilter lists differ".to_string(),
                ..base_witness()
            })
        };
        checks.push(Check::from_result("ultrafilters_match_brute_force", r));
    }
    let prime = (0..b.size()).find(|&a| {
        ufs.iter()
            .any(|u| u.contains(a) == u.contains(b.complement(a)))
    });
    checks.push(Check::from_result(
        "ultrafilter_decides_complement",
        prime.map_or(Ok(()), |a| {
            Err(fail_at(
                a,
                "an ultrafilter holds both or neither of a and its complement",
            ))
        }),
    ));

    let phi = phi_table(b)?;
    let pairs = || (0..b.size()).flat_map(|x| (0..b.size()).map(move |y| (x, y)));
    let first_pair = |bad: &dyn Fn(usize, usize) -> bool| pairs().find(|&(x, y)| bad(x, y));
    let all = Bits::full(n);
    let r = first_pair(&|x, y| phi[b.meet(x, y)] != phi[x] & phi[y]);
    checks.push(Check::from_result(
        "phi_meet",
        r.map_or(Ok(()), |(x, _)| Err(fail_at(x, "meet"))),
    ));
    let r = first_pair(&|x, y| phi[b.join(x, y)] != phi[x] | phi[y]);
    checks.push(Check::from_result(
        "phi_join",
        r.map_or(Ok(()), |(x, _)| Err(fail_at(x, "join"))),
    ));
    let r = (0..b.size()).find(|&x| phi[b.complement(x)] != phi[x].complement(n));
    checks.push(Check::from_result(
        "phi_complement",
        r.map_or(Ok(()), |x| Err(fail_at(x, "complement"))),
    ));
    let bounds = phi[b.bottom()] == Bits::EMPTY && phi[b.top()] == all;
    checks.push(Check::from_result(
        "phi_bounds",
        if bounds {
            Ok(())
        } else {
            Err(fail_at(b.bottom(), "bounds"))
        },
    ));
    let r = first_pair(&|x, y| phi[x].is_subset(phi[y]) != b.leq(x, y));
    checks.push(Check::from_result(
        "phi_order_embedding",
        r.map_or(Ok(()), |(x, _)| Err(fail_at(x, "order not reflected"))),
    ));
    checks.push(Check::from_result(
        "stone_representation",
        stone_representation(b).map(|_| ()).map_err(|e| Witness {
            detail: e.to_string(),
            ..base_witness()
        }),
    ));

    let ext = canonical_extension(b);
    let (dense, compact, unique) = match &ext {
        Ok(c) => {
            let comp = c.completion();
            let dense = match is_dense(comp) {
                Density::Dense => Ok(()),
                Density::NotDense { element, .. } => Err(fail_at(element, "not dense")),
            };
            let compact = match is_compact(comp) {
                Compactness::Compact => Ok(()),
                Compactness::NotCompact { filter, .. } => Err(Witness {
                    subset: Some(filter.members.0),
                    detail: "filter meet below disjoint ideal join".to_string(),
                    ..base_witness()
                }),
            };
            (dense, compact, unique_completion(comp))
        }
        Err(e) => {
            let w = Witness {
                detail: e.to_string(),
                ..base_witness()
            };
            (Err(w.clone()), Err(w.clone()), Some(Err(w)))
        }
    };
    checks.push(Check::from_result("canonical_extension_dense", dense));
    checks.push(Check::from_result("canonical_extension_compact", compact));
    if let Some(u) = unique {
        checks.push(Check::from_result("canonical_extension_unique", u));
    }
    Ok(InstanceReport {
        key: InstanceKey {
            kind: InstanceKind::Algebra,
            data: alloc::vec![n, b.size()],
        },
        descriptor: format!("algebra with {n} atoms"),
        checks,
        timing_ms: None,
    })
}

/// Every dense compact embedding into the same carrier is isomorphic to the
/// canonical one. `None` when the carrier is beyond the search bound.
fn unique_completion(canonical: &Completion) -> Option<Result<(), Witness>> {
    if canonical.complete().size() > MAX_ISO_SEARCH {
        return None;
    }
    let embeddings = lattice_embeddings(canonical.base(), canonical.complete()).ok()?;
    for e in embeddings {
        let Ok(other) = Completion::new(
            canonical.base().clone(),
            canonical.complete().clone(),
            e.clone(),
        ) else {
            continue;
        };
        if is_dense(&other) != Density::Dense || is_compact(&other) != Compactness::Compact {
            continue;
        }
        if !matches!(completion_isomorphic(canonical, &other), Ok(Some(_))) {
            return Some(Err(Witness {
                hom_table: Some(e),
                detail: "dense compact completion not isomorphic to the canonical one".to_string(),
                ..Witness::default()
            }));
        }
    }
    Some(Ok(()))
}

/// Stone-Čech checks for a map `f: X -> Y` of finite discrete spaces.
pub fn verify_beta_map(y_len: usize, f: &[usize]) -> Result<InstanceReport> {
    let x_len = f.len();
    let mut data = alloc::vec![x_len, y_len];
    data.extend_from_slice(f);
    let witness = |detail: alloc::string::String, point: Option<usize>| Witness {
        algebra_sizes: Some((x_len, y_len)),
        hom_table: Some(f.to_vec()),
        point,
        detail,
        ..Witness::default()
    };
    let bx = beta_space(x_len)?;
    let by = beta_space(y_len)?;
    let y = StoneSpace::discrete_n(y_len)?;
    let mut checks = Vec::new();

    let extension = beta_extend_to_compact(&bx, f, &y);
    let commutes = extension
        .as_ref()
        .map_err(|e| witness(e.to_string(), None))
        .and_then(|g| {
            (0..x_len)
                .find(|&x| g.apply(bx.embed(x)) != f[x])
                .map_or(Ok(()), |x| {
                    Err(witness(
                        "extension does not restrict to f".to_string(),
                        Some(x),
                    ))
                })
        });
    checks.push(Check::from_result("beta_universal_property", commutes));

    let lift = beta_lift(&bx, &by, f);
    let by_after_f: Vec<usize> = f.iter().map(|&v| by.embed(v)).collect();
    let lift_check = match (&lift, &beta_extend_to_compact(&bx, &by_after_f, by.space())) {
        (Ok(l), Ok(g)) => (0..bx.len())
            .find(|&p| l.apply(p) != g.apply(p))
            .map_or(Ok(()), |p| {
                Err(witness("lift and extension differ".to_string(), Some(p)))
            }),
        (Err(e), _) | (_, Err(e)) => Err(witness(e.to_string(), None)),
    };
    checks.push(Check::from_result("beta_lift_is_extension", lift_check));

    // A ∈ ∇ implies f[A] ∈ f^β(∇)
    let image_check = match &lift {
        Ok(l) => {
            let (px, py) = (bx.algebra(), by.algebra());
            let mut bad = None;
            'outer: for p in 0..bx.len() {
                let nabla = bx.space().point(p);
                let target = by.space().point(l.apply(p));
                for a in Bits::subsets_of(x_len) {
                    let fa: Bits = a.iter().map(|x| f[x]).collect();
                    if nabla.contains(px.from_atom_mask(a.0 as u32))
                        && !target.contains(py.from_atom_mask(fa.0 as u32))
                    {
                        bad = Some(p);
                        break 'outer;
                    }
                }
            }
            bad.map_or(Ok(()), |p| {
                Err(witness(
                    "image of a member is not a member".to_string(),
                    Some(p),
                ))
            })
        }
        Err(e) => Err(witness(e.to_string(), None)),
    };
    checks.push(Check::from_result("beta_image_membership", image_check));

    for (name, property) in [
        ("beta_injective_preserved", MapProperty::Injective),
        ("beta_surjective_preserved", MapProperty::Surjective),
        ("beta_bijective_preserved", MapProperty::Bijective),
    ] {
        let check = match beta_preserves(f, y_len, property) {
            Ok(p) if !p.premise => Check::vacuous(name),
            Ok(p) if p.conclusion => Check::pass(name),
            Ok(_) => Check::fail(
                name,
                witness("property lost under the lift".to_string(), None),
            ),
            Err(e) => Check::fail(name, witness(e.to_string(), None)),
        };
        checks.push(check);
    }
    Ok(InstanceReport {
        key: InstanceKey {
            kind: InstanceKind::BetaMap,
            data,
        },
        descriptor: format!("beta map {x_len} -> {y_len} points, table {f:?}"),
        checks,
        timing_ms: None,
    })
}

/// Runs both routes on a monotone map that need not be a homomorphism.
/// Every check is exploratory: the outcome is recorded, never asserted.
pub fn verify_monotone(m: &MonotoneMap) -> Result<InstanceReport> {
    let (b1, b2) = (m.source(), m.target());
    let mut data = alloc::vec![b1.atom_count(), b2.atom_count()];
    data.extend_from_slice(m.table());
    let recorded = |name, holds: bool, detail: &str| {
        let c = if holds {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                Witness {
                    algebra_sizes: Some((b1.atom_count(), b2.atom_count())),
                    hom_table: Some(m.table().to_vec()),
                    detail: detail.to_string(),
                    ..Witness::default()
                },
            )
        };
        c.exploratory()
    };
    let mut checks = Vec::new();
    let hom = m.to_hom();
    checks.push(recorded(
        "monotone_is_hom",
        hom.is_ok(),
        "map is not a homomorphism",
    ));

    let u1 = ultrafilters(b1)?;
    let u2 = ultrafilters(b2)?;
    // h⁻¹[v] for each v, as an index into Uf(B1) when it is an ultrafilter
    let pulled: Vec<Option<usize>> = u2
        .iter()
        .map(|v| {
            let pre: Bits = (0..b1.size()).filter(|&a| v.contains(m.apply(a))).collect();
            u1.iter().position(|u| u.members() == pre)
        })
        .collect();
    checks.push(recorded(
        "monotone_dual_defined",
        pulled.iter().all(Option::is_some),
        "some preimage of an ultrafilter is not an ultrafilter",
    ));

    let sigma = sigma_extend(m)?;
    let other: Vec<Bits> = match &hom {
        Ok(h) => build_diagram(h)?.double_dual().to_vec(),
        Err(_) => Bits::subsets_of(u1.len())
            .map(|a| {
                (0..u2.len())
                    .filter(|&v| pulled[v].is_some_and(|u| a.contains(u)))
                    .collect()
            })
            .collect(),
    };
    checks.push(recorded(
        "monotone_extensions_agree",
        sigma.table() == other.as_slice(),
        "filter route and pointwise preimage route differ",
    ));
    Ok(InstanceReport {
        key: InstanceKey {
            kind: InstanceKind::Monotone,
            data,
        },
        descriptor: format!(
            "monotone {} -> {} atoms, table {:?}",
            b1.atom_count(),
            b2.atom_count(),
            m.table()
        ),
        checks,
        timing_ms: None,
    })
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{all_homs, hom_from_atom_map};

    fn p(n: usize) -> Arc<FinBoolAlg> {
        Arc::new(powerset_algebra(n).unwrap())
    }

    #[test]
    fn identity_passes_everything() {
        let r = verify_hom(&BoolHom::identity(p(2))).unwrap();
        assert!(r.passed(), "{r:?}");
        for name in [
            "injective_preserved",
            "surjective_preserved",
            "isomorphism_preserved",
        ] {
            assert_eq!(r.check(name).unwrap().verdict, Verdict::Pass);
        }
    }

    #[test]
    fn non_injective_is_vacuous() {
        let h = hom_from_atom_map(p(2), p(1), &[0]).unwrap();
        let r = verify_hom(&h).unwrap();
        assert!(r.passed());
        assert_eq!(
            r.check("injective_preserved").unwrap().verdict,
            Verdict::Vacuous
        );
        assert_eq!(
            r.check("surjective_preserved").unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn every_small_hom_passes() {
        for k1 in 1..=2 {
            for k2 in 1..=2 {
                for h in all_homs(&p(k1), &p(k2)).unwrap() {
                    assert!(verify_hom(&h).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn algebras_pass() {
        for n in 1..=3 {
            let r = verify_algebra(&p(n)).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.check("canonical_extension_unique").is_some());
        }
    }

    #[test]
    fn beta_maps_pass() {
        let r = verify_beta_map(2, &[0, 1, 1]).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(
            r.check("beta_surjective_preserved").unwrap().verdict,
            Verdict::Pass
        );
        assert_eq!(
            r.check("beta_injective_preserved").unwrap().verdict,
            Verdict::Vacuous
        );
    }

    #[test]
    fn monotone_non_hom_is_recorded_only() {
        // 0 ↦ 0, everything else ↦ top
        let m = MonotoneMap::new(p(1), p(1), alloc::vec![0, 1]).unwrap();
        assert!(verify_monotone(&m)
            .unwrap()
            .checks
            .iter()
            .all(|c| c.verdict == Verdict::Pass));
        let m = MonotoneMap::new(p(2), p(1), alloc::vec![0, 1, 1, 1]).unwrap();
        let r = verify_monotone(&m).unwrap();
        assert!(r.passed());
        assert!(r.checks.iter().all(|c| !c.asserted));
        assert_eq!(r.check("monotone_is_hom").unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn degenerate_is_an_error() {
        assert!(verify_hom(&BoolHom::identity(p(0))).is_err());
    }
}
