//! Parametrised families of 3-node networks as drawn in the catalog
//! figures.
//!
//! Family ids:
//! - `a` .. `o`, `D1` .. `D9`: a connected (resp. disconnected) 2-node
//!   network on nodes 2, 3 plus every way of attaching node 1.
//! - `AH.1` .. `AH.4`: every node receives one arrow of each type.
//! - `NH.1` .. `NH.3`: only the two E nodes do; `a + b + c = 2`, `a != 1`.
//! - `NH.4` .. `NH.11`: only node 3 and one E node do; `a + b = 2`, `a != b`.
//! - `a.9`, `a.11`, `c.3`, `c.5`, `c.8`, `d.16`: the remaining valence-2
//!   networks with one node of each input profile.
//!
//! Groups: `fig9`, `fig9-complete`, `AH`, `NH.1-3`, `NH.4-11`, `fig16`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

use super::{MultiplicityVector, Param};
use crate::network::ReiNetwork;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family id {0:?}")]
    Unknown(String),
}

/// Constraint on the free parameters of a family, listed in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Free parameters `(a, b, c)` with `a + b + c = 2` and `a != 1`.
    SumTwoFirstNotOne,
    /// Free parameters `(a, b)` with `a + b = 2` and `a != b`.
    SumTwoUnequal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Nodes 2 and 3 form the 2-node network with the given `delta`,
    /// `gamma2`, `tau`, `beta4`. Node 1 attaches by `beta2 = a` and
    /// `beta1 = b` (bounded so nodes 2 and 3 keep valence at most 2) and
    /// receives `beta3 = c`, `gamma1 = d`, `alpha = e` with `c + d + e <= 2`.
    /// Disconnected results are dropped.
    Attach { delta: u32, gamma2: u32, tau: u32, beta4: u32 },
    /// A single network.
    Fixed(MultiplicityVector),
    /// `base` with the listed parameters set to values in `0..=2` allowed
    /// by `rule`.
    Constrained { base: MultiplicityVector, free: Vec<Param>, rule: Rule },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub id: String,
    pub kind: FamilyKind,
}

impl FamilySpec {
    fn new(id: &str, kind: FamilyKind) -> Self {
        FamilySpec { id: id.to_string(), kind }
    }

    /// Labelled vectors of the family before isomorphism dedup.
    pub fn vectors(&self) -> Vec<MultiplicityVector> {
        let mut out = Vec::new();
        match &self.kind {
            FamilyKind::Attach { delta, gamma2, tau, beta4 } => {
                for a in 0..=2u32.saturating_sub(delta + gamma2) {
                    for b in 0..=2u32.saturating_sub(tau + beta4) {
                        for c in 0..=2 {
                            for d in 0..=2 - c {
                                for e in 0..=2 - c - d {
                                    let v = MultiplicityVector {
                                        alpha: e,
                                        delta: *delta,
                                        tau: *tau,
                                        beta1: b,
                                        beta2: a,
                                        beta3: c,
                                        beta4: *beta4,
                                        gamma1: d,
                                        gamma2: *gamma2,
                                    };
                                    if v.is_connected() {
                                        out.push(v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            FamilyKind::Fixed(v) => out.push(*v),
            FamilyKind::Constrained { base, free, rule } => {
                let k = free.len() as u32;
                for code in 0..3u32.pow(k) {
                    let vals: Vec<u32> = (0..k).map(|i| code / 3u32.pow(k - 1 - i) % 3).collect();
                    let ok = match rule {
                        Rule::SumTwoFirstNotOne => vals.iter().sum::<u32>() == 2 && vals[0] != 1,
                        Rule::SumTwoUnequal => vals.iter().sum::<u32>() == 2 && vals[0] != vals[1],
                    };
                    if ok {
                        let mut v = *base;
                        for (&p, &x) in free.iter().zip(&vals) {
                            v.set(p, x);
                        }
                        out.push(v);
                    }
                }
            }
        }
        out
    }
}

/// Networks of the family, one per isomorphism class, in canonical form.
pub fn expand_family(spec: &FamilySpec) -> Vec<ReiNetwork> {
    dedup(spec.vectors())
}

/// Union over several families, one per isomorphism class.
pub fn expand_families(specs: &[FamilySpec]) -> Vec<ReiNetwork> {
    dedup(specs.iter().flat_map(FamilySpec::vectors).collect())
}

fn dedup(vs: Vec<MultiplicityVector>) -> Vec<ReiNetwork> {
    let set: BTreeSet<ReiNetwork> = vs.into_iter().map(|v| v.to_network().canonical_form()).collect();
    set.into_iter().collect()
}

fn vector(ones: &[Param]) -> MultiplicityVector {
    ones.iter().fold(MultiplicityVector::default(), |v, &p| v.with(p, 1))
}

/// The 2-node networks on nodes 2, 3 as drawn: 15 connected, 9 disconnected,
/// as `(id, delta, gamma2, tau, beta4)`.
const TWO_NODE: [(&str, u32, u32, u32, u32); 24] = [
    ("a", 0, 0, 0, 1),
    ("b", 0, 0, 0, 2),
    ("c", 0, 0, 1, 1),
    ("d", 1, 0, 0, 1),
    ("e", 0, 1, 0, 1),
    ("f", 2, 0, 0, 1),
    ("g", 1, 1, 0, 1),
    ("h", 1, 0, 0, 2),
    ("i", 1, 0, 1, 1),
    ("j", 0, 2, 0, 1),
    ("k", 2, 0, 0, 2),
    ("l", 2, 0, 1, 1),
    ("m", 1, 1, 0, 2),
    ("n", 1, 1, 1, 1),
    ("o", 0, 2, 0, 2),
    ("D1", 0, 0, 0, 0),
    ("D2", 1, 0, 0, 0),
    ("D3", 0, 0, 1, 0),
    ("D4", 1, 0, 1, 0),
    ("D5", 2, 0, 0, 0),
    ("D6", 0, 0, 2, 0),
    ("D7", 2, 0, 1, 0),
    ("D8", 2, 0, 2, 0),
    ("D9", 1, 0, 2, 0),
];

/// The 24 attachment families as drawn.
pub fn fig9_families() -> Vec<FamilySpec> {
    TWO_NODE
        .iter()
        .map(|&(id, delta, gamma2, tau, beta4)| {
            FamilySpec::new(id, FamilyKind::Attach { delta, gamma2, tau, beta4 })
        })
        .collect()
}

/// Attachment families over every 2-node network with valence at most 2 on
/// nodes 2 and 3 (36 of them). Networks not drawn get ids of the form
/// `S(d,g2,t,b4)`.
pub fn fig9_complete_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for delta in 0..=2 {
        for gamma2 in 0..=2 - delta {
            for tau in 0..=2 {
                for beta4 in 0..=2 - tau {
                    let id = TWO_NODE
                        .iter()
                        .find(|t| (t.1, t.2, t.3, t.4) == (delta, gamma2, tau, beta4))
                        .map_or_else(|| format!("S({delta},{gamma2},{tau},{beta4})"), |t| t.0.to_string());
                    out.push(FamilySpec { id, kind: FamilyKind::Attach { delta, gamma2, tau, beta4 } });
                }
            }
        }
    }
    out
}

pub fn ah_families() -> Vec<FamilySpec> {
    use Param::*;
    [
        ("AH.1", [Alpha, Delta, Tau, Beta1, Gamma1, Gamma2]),
        ("AH.2", [Alpha, Beta1, Beta2, Tau, Gamma1, Gamma2]),
        ("AH.3", [Alpha, Beta2, Beta4, Tau, Gamma1, Gamma2]),
        ("AH.4", [Beta1, Beta3, Beta2, Tau, Gamma1, Gamma2]),
    ]
    .iter()
    .map(|(id, ones)| FamilySpec::new(id, FamilyKind::Fixed(vector(ones))))
    .collect()
}

/// `NH.1` .. `NH.3`; free parameters `(a, b, c) = (tau, beta4, beta1)`.
pub fn nh_1_3_families() -> Vec<FamilySpec> {
    use Param::*;
    [
        ("NH.1", [Delta, Alpha, Gamma1, Gamma2]),
        ("NH.2", [Delta, Beta3, Gamma1, Gamma2]),
        ("NH.3", [Beta2, Beta3, Gamma1, Gamma2]),
    ]
    .iter()
    .map(|(id, ones)| {
        FamilySpec::new(
            id,
            FamilyKind::Constrained {
                base: vector(ones),
                free: alloc::vec![Tau, Beta4, Beta1],
                rule: Rule::SumTwoFirstNotOne,
            },
        )
    })
    .collect()
}

/// `NH.4` .. `NH.11`; for `NH.5` on the free parameters are
/// `(a, b) = (gamma2, x)` with `x` the second listed parameter.
pub fn nh_4_11_families() -> Vec<FamilySpec> {
    use Param::*;
    let mut out = alloc::vec![FamilySpec::new(
        "NH.4",
        FamilyKind::Fixed(vector(&[Beta1, Alpha, Gamma1, Tau]).with(Gamma2, 2)),
    )];
    for (id, ones, b) in [
        ("NH.5", [Beta4, Alpha], Delta),
        ("NH.6", [Alpha, Beta1], Beta2),
        ("NH.7", [Alpha, Beta4], Beta2),
        ("NH.8", [Beta3, Beta1], Beta2),
        ("NH.9", [Beta3, Beta4], Beta2),
        ("NH.10", [Beta3, Beta1], Delta),
        ("NH.11", [Beta3, Beta4], Delta),
    ] {
        let base = vector(&ones).with(Gamma1, 1).with(Tau, 1);
        out.push(FamilySpec::new(
            id,
            FamilyKind::Constrained { base, free: alloc::vec![Gamma2, b], rule: Rule::SumTwoUnequal },
        ));
    }
    out
}

pub fn fig16_families() -> Vec<FamilySpec> {
    use Param::*;
    let v = |pairs: &[(Param, u32)]| {
        pairs.iter().fold(MultiplicityVector::default(), |v, &(p, x)| v.with(p, x))
    };
    [
        ("a.9", v(&[(Gamma1, 1), (Gamma2, 2), (Alpha, 1), (Beta1, 2)])),
        ("a.11", v(&[(Gamma1, 1), (Gamma2, 2), (Alpha, 1), (Beta4, 2)])),
        ("c.3", v(&[(Gamma1, 1), (Tau, 2), (Alpha, 1), (Beta2, 2)])),
        ("c.5", v(&[(Gamma1, 1), (Tau, 2), (Beta3, 1), (Beta2, 2)])),
        ("c.8", v(&[(Gamma1, 1), (Tau, 2), (Delta, 2), (Beta3, 1)])),
        ("d.16", v(&[(Gamma1, 2), (Delta, 2), (Beta4, 1), (Tau, 1)])),
    ]
    .into_iter()
    .map(|(id, x)| FamilySpec::new(id, FamilyKind::Fixed(x)))
    .collect()
}

/// Every individual family.
pub fn all_families() -> Vec<FamilySpec> {
    let mut out = fig9_complete_families();
    out.extend(ah_families());
    out.extend(nh_1_3_families());
    out.extend(nh_4_11_families());
    out.extend(fig16_families());
    out
}

pub fn family(id: &str) -> Result<FamilySpec, FamilyError> {
    all_families().into_iter().find(|f| f.id == id).ok_or_else(|| FamilyError::Unknown(id.to_string()))
}

/// A group name or a single family id.
pub fn family_group(id: &str) -> Result<Vec<FamilySpec>, FamilyError> {
    Ok(match id {
        "fig9" => fig9_families(),
        "fig9-complete" => fig9_complete_families(),
        "AH" => ah_families(),
        "NH.1-3" => nh_1_3_families(),
        "NH.4-11" => nh_4_11_families(),
        "fig16" => fig16_families(),
        _ => alloc::vec![family(id)?],
    })
}
