//! The four cases of connected networks in which every node has valence
//! exactly 2, compared with the family listings.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::families::{ah_families, expand_families, fig16_families, nh_1_3_families, nh_4_11_families, FamilySpec};
use super::{valence_bounded_vectors, MultiplicityVector};
use crate::equiv::ode_class_key;
use crate::network::ReiNetwork;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    /// Every node receives one arrow of each type.
    I,
    /// Exactly the two E nodes do.
    II,
    /// Node 3 and exactly one E node do.
    III,
    /// One node receives one arrow of each type, one receives two
    /// excitatory, one receives two inhibitory.
    IV,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::I, Case::II, Case::III, Case::IV];

    pub fn label(self) -> &'static str {
        match self {
            Case::I => "i",
            Case::II => "ii",
            Case::III => "iii",
            Case::IV => "iv",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.label() == s)
    }

    pub fn matches(self, v: MultiplicityVector) -> bool {
        let ins = v.inputs();
        let mixed = ins.map(|x| x == (1, 1));
        match self {
            Case::I => mixed.iter().all(|&m| m),
            Case::II => mixed[0] && mixed[1] && !mixed[2],
            Case::III => mixed[2] && mixed[0] != mixed[1],
            Case::IV => {
                let mut s = ins;
                s.sort();
                s == [(0, 2), (1, 1), (2, 0)]
            }
        }
    }

    /// Families listed for this case.
    pub fn families(self) -> Vec<FamilySpec> {
        match self {
            Case::I => ah_families(),
            Case::II => nh_1_3_families(),
            Case::III => nh_4_11_families(),
            Case::IV => fig16_families(),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Connected vectors in which every node has valence exactly 2.
pub fn valence2_vectors() -> Vec<MultiplicityVector> {
    valence_bounded_vectors(2).into_iter().filter(|v| v.valences() == [2, 2, 2]).collect()
}

/// Networks in the case, one per isomorphism class, canonical form.
pub fn case_networks(case: Case) -> Vec<ReiNetwork> {
    let set: BTreeSet<ReiNetwork> = valence2_vectors()
        .into_iter()
        .filter(|&v| case.matches(v))
        .map(|v| v.to_network().canonical_form())
        .collect();
    set.into_iter().collect()
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub case: Case,
    /// Networks found by filtering the valence-2 universe.
    pub census: Vec<ReiNetwork>,
    /// Networks from the family listing.
    pub family: Vec<ReiNetwork>,
    /// In the census but not listed.
    pub missing: Vec<ReiNetwork>,
    /// Listed but not in the census.
    pub extra: Vec<ReiNetwork>,
    /// Census networks whose ODE-class has no listed member.
    pub missing_ode_classes: usize,
}

impl CaseReport {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn case_census(case: Case) -> CaseReport {
    let census = case_networks(case);
    let family = expand_families(&case.families());
    let missing: Vec<ReiNetwork> = census.iter().filter(|n| !family.contains(n)).cloned().collect();
    let extra: Vec<ReiNetwork> = family.iter().filter(|n| !census.contains(n)).cloned().collect();
    let listed: BTreeSet<_> = family.iter().map(ode_class_key).collect();
    let missing_ode_classes = missing.iter().filter(|n| !listed.contains(&ode_class_key(n))).count();
    CaseReport { case, census, family, missing, extra, missing_ode_classes }
}

/// Reports for cases (i) to (iv).
pub fn valence2_case_census() -> Vec<CaseReport> {
    Case::ALL.into_iter().map(case_census).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicates() {
        use crate::enumeration::Param::*;
        let ah1 = ah_families()[0].vectors()[0];
        assert!(Case::I.matches(ah1));
        assert!(!Case::II.matches(ah1) && !Case::III.matches(ah1) && !Case::IV.matches(ah1));
        let d16 = MultiplicityVector::default()
            .with(Gamma1, 2)
            .with(Delta, 2)
            .with(Beta4, 1)
            .with(Tau, 1);
        assert!(Case::IV.matches(d16));
        assert!(!Case::III.matches(d16));
        assert_eq!(Case::parse("iii"), Some(Case::III));
    }

    #[test]
    fn universe_and_disjointness() {
        let vs = valence2_vectors();
        assert_eq!(vs.len(), 191);
        for v in vs {
            let hits = Case::ALL.iter().filter(|c| c.matches(v)).count();
            assert!(hits <= 1, "{v}");
        }
    }

    #[test]
    fn first_two_cases_agree_with_listing() {
        assert!(case_census(Case::I).matches());
        assert_eq!(case_census(Case::I).census.len(), 4);
        assert!(case_census(Case::II).matches());
    }
}
