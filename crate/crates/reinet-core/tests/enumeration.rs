mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use reinet_core::enumeration::cases::{case_census, valence2_vectors, Case};
use reinet_core::enumeration::census::{reproduce_tables, Category, PUBLISHED_COUNTS};
use reinet_core::enumeration::families::{
    ah_families, expand_families, fig9_complete_families, fig9_families, nh_1_3_families,
};
use reinet_core::enumeration::published::{table1_supports, Table};
use reinet_core::enumeration::{
    connected_supports, enumerate_valence_le2, valence_le2_vectors, MultiplicityVector, Param, SupportPattern,
};
use reinet_core::synchrony::balanced_partitions;

/// Indices into `(alpha, delta, tau, beta1, beta2, beta3, beta4, gamma1, gamma2)`.
const INPUTS: [[usize; 3]; 3] = [[0, 5, 7], [4, 1, 8], [3, 6, 2]];
const LINK_GROUPS: [[usize; 4]; 3] = [[3, 4, 5, 7], [4, 5, 6, 8], [3, 6, 7, 8]];

fn connected(v: &[u32; 9]) -> bool {
    LINK_GROUPS.iter().all(|g| g.iter().any(|&k| v[k] > 0))
}

/// Every connected parameter array with every node receiving at most two arrows.
fn brute_universe() -> Vec<[u32; 9]> {
    let mut out = Vec::new();
    for code in 0..3u32.pow(9) {
        let mut v = [0u32; 9];
        let mut c = code;
        for x in v.iter_mut() {
            *x = c % 3;
            c /= 3;
        }
        if INPUTS.iter().all(|ins| ins.iter().map(|&k| v[k]).sum::<u32>() <= 2) && connected(&v) {
            out.push(v);
        }
    }
    out
}

#[test]
fn supports_brute_force() {
    let links = [3, 4, 5, 6, 7, 8];
    let mut found = BTreeSet::new();
    for mask in 0u32..64 {
        let mut v = [0u32; 9];
        for (b, &k) in links.iter().enumerate() {
            v[k] = mask >> b & 1;
        }
        if connected(&v) {
            found.insert(mask);
        }
    }
    assert_eq!(found.len(), 54);
    let ours = connected_supports();
    assert_eq!(ours.len(), 54);

    let published: BTreeSet<SupportPattern> = table1_supports().into_iter().collect();
    assert_eq!(published.len(), 51);
    assert!(published.is_subset(&ours));
    let extra: BTreeSet<String> = ours.difference(&published).map(|s| s.to_string()).collect();
    let expect: BTreeSet<String> = ["b2 b3 g1", "b2 b3 g2", "b2 b3 g1 g2"].map(String::from).into();
    assert_eq!(extra, expect);
    for s in ours.difference(&published) {
        assert!(s.contains(Param::Beta2) && s.contains(Param::Beta3));
        assert!(!s.contains(Param::Beta1) && !s.contains(Param::Beta4));
    }
}

#[test]
fn universe_counts() {
    let brute = brute_universe();
    assert_eq!(brute.len(), 730);
    let ours: BTreeSet<[u32; 9]> = valence_le2_vectors().into_iter().map(MultiplicityVector::to_array).collect();
    assert_eq!(ours, brute.iter().copied().collect());

    // the only nontrivial type-preserving relabeling swaps the E nodes
    let classes: BTreeSet<[u32; 9]> = brute.iter().map(|&v| v.min(oracle_swap(v))).collect();
    assert_eq!(classes.len(), 376);
    let nets = enumerate_valence_le2();
    assert_eq!(nets.len(), 376);

    let v2: BTreeSet<[u32; 9]> = brute
        .iter()
        .filter(|v| INPUTS.iter().all(|ins| ins.iter().map(|&k| v[k]).sum::<u32>() == 2))
        .copied()
        .collect();
    assert_eq!(v2.len(), 191);
    assert_eq!(valence2_vectors().len(), 191);
    assert_eq!(v2.iter().map(|&v| v.min(oracle_swap(v))).collect::<BTreeSet<_>>().len(), 100);
}

#[test]
fn universe_outputs_are_clean() {
    let nets = enumerate_valence_le2();
    for (k, a) in nets.iter().enumerate() {
        assert!(a.validate().is_ok());
        assert!(a.is_connected());
        assert!((0..3).all(|i| a.input_profile(i).unwrap().valence <= 2));
        assert_eq!(&a.canonical_form(), a);
        for b in &nets[k + 1..] {
            assert!(!a.is_isomorphic(b));
        }
    }
}

#[test]
fn drawn_families_fall_short() {
    let drawn = expand_families(&fig9_families());
    assert_eq!(fig9_families().len(), 24);
    assert_eq!(drawn.len(), 326);
    let complete = expand_families(&fig9_complete_families());
    assert_eq!(fig9_complete_families().len(), 36);
    assert_eq!(complete, enumerate_valence_le2());
}

#[test]
fn ah_has_one_nontrivial_balanced_partition() {
    let nets = expand_families(&ah_families());
    assert_eq!(nets.len(), 4);
    for net in nets {
        let nontrivial: Vec<_> = balanced_partitions(&net).into_iter().filter(|p| !p.is_trivial()).collect();
        assert_eq!(nontrivial.len(), 1, "{net:?}");
        assert_eq!(nontrivial[0].to_string(), "1,2|3");
    }
}

#[test]
fn census_against_span_oracle() {
    let r = reproduce_tables();
    // derived independently by brute force over the labelled universe
    assert_eq!(r.counts, [97, 38, 62, 35]);
    assert_eq!(r.counts[1..], PUBLISHED_COUNTS[1..]);
    assert!(!r.matches_published());

    // classes up to relabeling, from the test-side span oracle
    let mut by_key: BTreeMap<Vec<Vec<num_rational::Ratio<i64>>>, Vec<[u32; 9]>> = BTreeMap::new();
    for v in brute_universe() {
        let k = oracle_span(&oracle_bundle(v)).min(oracle_span(&oracle_bundle(oracle_swap(v))));
        by_key.entry(k).or_default().push(v);
    }
    assert_eq!(r.relabeling_invariant_counts.iter().sum::<usize>(), by_key.len());

    // every census class is ODE-closed within itself
    for c in &r.classes {
        let ks: BTreeSet<_> = c
            .members
            .iter()
            .map(|m| {
                let v = m.to_array();
                oracle_span(&oracle_bundle(v)).min(oracle_span(&oracle_bundle(oracle_swap(v))))
            })
            .collect();
        assert_eq!(ks.len(), 1, "{}", c.key);
        assert_eq!(c.category, Category::of(c.key));
    }
}

#[test]
fn census_row_audit() {
    let r = reproduce_tables();
    let bad: Vec<_> = r.rows.iter().filter(|a| !a.ok()).map(|a| (a.table, a.row, a.stated, a.found)).collect();
    assert_eq!(bad, vec![(Table::T5, 5, 2, 1)]);
    assert!(r.listed_not_found.is_empty());
    // six classes no row describes: five in the first table, one in the third
    let mut per = [0usize; 4];
    for v in &r.unlisted {
        per[Category::of(*v).table().number() as usize - 3] += 1;
    }
    assert_eq!(per, [5, 0, 1, 0]);
    for v in &r.unlisted {
        let s = v.support();
        assert!(s.contains(Param::Beta2) && s.contains(Param::Beta3));
        assert!(v.beta1 == 0 && v.beta4 == 0);
    }
}

#[test]
fn case_reports() {
    let i = case_census(Case::I);
    assert!(i.matches());
    assert_eq!(i.census.len(), 4);
    let ii = case_census(Case::II);
    assert!(ii.matches());
    assert_eq!(ii.census.len(), 10);
    assert_eq!(expand_families(&nh_1_3_families()), ii.census);

    let iii = case_census(Case::III);
    assert_eq!((iii.census.len(), iii.family.len(), iii.missing.len()), (15, 11, 4));
    assert!(iii.extra.is_empty());
    let iv = case_census(Case::IV);
    assert_eq!((iv.census.len(), iv.family.len(), iv.missing.len()), (16, 6, 10));
    assert!(iv.extra.is_empty());
    assert_eq!(iv.missing_ode_classes, 10);

    // the four cases cover the valence-2 networks that have a mixed node
    let all: usize = [&i, &ii, &iii, &iv].iter().map(|r| r.census.len()).sum();
    let with_mixed = valence2_vectors()
        .into_iter()
        .filter(|v| Case::ALL.iter().any(|c| c.matches(*v)))
        .map(|v| v.to_network().canonical_form())
        .collect::<BTreeSet<_>>()
        .len();
    assert_eq!(all, with_mixed);
}
