//! Exhaustive checks against values computed independently here.

use std::sync::Arc;

use sigmabeta_core::algebra::{
    all_homs, powerset_algebra, ultrafilters, ultrafilters_brute_force, validate_boolean_algebra,
    validate_hom, FinBoolAlg, Presentation,
};
use sigmabeta_core::beta::{
    beta_extend_to_compact, beta_space, compactification_equivalent, compactification_leq,
    Compactification,
};
use sigmabeta_core::canext::{canonical_extension, completion_isomorphic, Completion};
use sigmabeta_core::harness::{exhaustive_suite, InstanceKind, SamplePolicy};
use sigmabeta_core::topology::{all_maps, StoneSpace};
use sigmabeta_core::{Bits, Error};

fn p(n: usize) -> Arc<FinBoolAlg> {
    Arc::new(powerset_algebra(n).unwrap())
}

#[test]
fn hom_counts_follow_the_duality_formula() {
    let mut total = 0;
    for k1 in 1..=4usize {
        for k2 in 1..=4usize {
            let n = all_homs(&p(k1), &p(k2)).unwrap().len();
            assert_eq!(n, k1.pow(k2 as u32), "P({k1}) -> P({k2})");
            if k1 <= 3 && k2 <= 3 {
                total += n;
            }
        }
    }
    assert_eq!(total, 1 + 1 + 1 + 2 + 4 + 8 + 3 + 9 + 27);
}

#[test]
fn homs_found_by_brute_force_table_search() {
    // every monotone-or-not table P(2) -> P(2), filtered by the validator
    let count = all_maps(4, 4)
        .unwrap()
        .filter(|t| validate_hom(t.clone(), p(2), p(2)).is_ok())
        .count();
    assert_eq!(count, all_homs(&p(2), &p(2)).unwrap().len());
}

#[test]
fn ultrafilters_agree_with_maximal_proper_filters() {
    for n in 1..=4 {
        let b = powerset_algebra(n).unwrap();
        let fast: Vec<Bits> = ultrafilters(&b)
            .unwrap()
            .iter()
            .map(|u| u.members())
            .collect();
        let slow: Vec<Bits> = ultrafilters_brute_force(&b)
            .unwrap()
            .iter()
            .map(|f| f.members)
            .collect();
        assert_eq!(fast, slow);
        assert_eq!(fast.len(), n);
    }
}

#[test]
fn small_carriers_that_are_not_boolean() {
    // a three-element chain
    let chain = Presentation {
        labels: vec!["0".into(), "m".into(), "1".into()],
        leq: vec![(0, 1), (1, 2)],
        complement: vec![(0, 2)],
    };
    assert!(matches!(
        validate_boolean_algebra(&chain),
        Err(Error::ComplementLawFails { .. })
    ));
    // the diamond with three middle elements
    let m3 = Presentation {
        labels: ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        leq: vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        complement: vec![(0, 4), (1, 2), (2, 3), (3, 1)],
    };
    assert!(matches!(
        validate_boolean_algebra(&m3),
        Err(Error::NotDistributive { .. })
    ));
}

/// Every base over `n` points that makes a valid Stone space.
fn stone_spaces(n: usize) -> Vec<StoneSpace<usize>> {
    let subsets: Vec<Bits> = Bits::subsets_of(n).collect();
    (0u64..1 << subsets.len())
        .filter_map(|family| {
            let base = Bits(family).iter().map(|i| subsets[i]).collect();
            StoneSpace::new((0..n).collect(), base).ok()
        })
        .collect()
}

#[test]
fn universal_property_over_every_small_stone_space() {
    let mut instances = 0;
    for ny in 1..=3 {
        let spaces = stone_spaces(ny);
        // a finite Hausdorff space is discrete, however its base is presented
        assert!(spaces.iter().all(|y| y.is_discrete()));
        for y in &spaces {
            for nx in 1..=3 {
                let bx = beta_space(nx).unwrap();
                for f in all_maps(nx, ny).unwrap() {
                    let g = beta_extend_to_compact(&bx, &f, y).unwrap();
                    for (x, &fx) in f.iter().enumerate() {
                        assert_eq!(g.apply(bx.embed(x)), fx);
                    }
                    instances += 1;
                }
            }
        }
    }
    assert!(instances > 0);
}

/// Partitions of `0..n` as block-index tables in restricted growth form.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    fn go(prefix: &mut Vec<usize>, n: usize, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            go(prefix, n, blocks.max(b + 1), out);
            prefix.pop();
        }
    }
    go(&mut vec![], n, 0, &mut out);
    out
}

#[test]
fn beta_is_the_greatest_compactification() {
    let bell = [1, 2, 5, 15];
    for n in 1..=4 {
        let beta = beta_space(n).unwrap();
        let parts = partitions(n);
        assert_eq!(parts.len(), bell[n - 1]);
        for q in parts {
            let blocks = q.iter().max().unwrap() + 1;
            let c = Compactification::dense_image(
                n,
                StoneSpace::discrete_n(blocks).unwrap(),
                q.clone(),
            )
            .unwrap();
            assert!(compactification_leq(&c, beta.compactification())
                .unwrap()
                .is_some());
            let bijective = blocks == n;
            assert_eq!(
                compactification_leq(beta.compactification(), &c)
                    .unwrap()
                    .is_some(),
                bijective
            );
            assert_eq!(
                compactification_equivalent(&c, beta.compactification())
                    .unwrap()
                    .is_some(),
                bijective
            );
        }
    }
}

#[test]
fn completions_are_unique_up_to_isomorphism() {
    for n in 1..=3 {
        let b = powerset_algebra(n).unwrap();
        let identity = Completion::identity(b.lattice().clone());
        let canonical = canonical_extension(&b).unwrap();
        let iso = completion_isomorphic(&identity, canonical.completion()).unwrap();
        assert!(iso.is_some(), "{n} atoms");
    }
}

#[test]
fn suite_counts_at_three_atoms() {
    let r = exhaustive_suite(3, SamplePolicy::Exhaustive).unwrap();
    assert!(r.passed(), "{:?}", r.failures().next());
    assert_eq!(r.count(InstanceKind::Algebra), 3);
    let formula: usize = (1..=3usize)
        .flat_map(|k1| (1..=3u32).map(move |k2| k1.pow(k2)))
        .sum();
    assert_eq!(formula, 56);
    assert_eq!(r.count(InstanceKind::Hom), formula);
    // Σ_{x,y ≤ 3} y^x
    assert_eq!(r.count(InstanceKind::BetaMap), 6 + 14 + 36);
}

#[test]
fn suite_at_one_atom() {
    let r = exhaustive_suite(1, SamplePolicy::Exhaustive).unwrap();
    assert!(r.passed());
    assert_eq!(r.count(InstanceKind::Hom), 1);
}
