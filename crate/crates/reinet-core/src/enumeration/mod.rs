//! The general 3-node network with node types `[E, E, I]`, its connectivity
//! supports, and the valence-bounded universe.
//!
//! Parameter layout, arrows written tail -> head:
//!
//! | symbol | arrow  |     | symbol | arrow  |
//! |--------|--------|-----|--------|--------|
//! | alpha  | 1 -> 1 |     | beta3  | 2 -> 1 |
//! | delta  | 2 -> 2 |     | beta4  | 2 -> 3 |
//! | tau    | 3 -> 3 |     | gamma1 | 3 -> 1 |
//! | beta1  | 1 -> 3 |     | gamma2 | 3 -> 2 |
//! | beta2  | 1 -> 2 |     |        |        |

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::network::{NodeType, ReiNetwork};

pub mod cases;
pub mod census;
pub mod families;
pub mod published;

/// One of the nine arrow multiplicities of the general 3-node network.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Alpha,
    Delta,
    Tau,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    Gamma1,
    Gamma2,
}

impl Param {
    pub const ALL: [Param; 9] = [
        Param::Alpha,
        Param::Delta,
        Param::Tau,
        Param::Beta1,
        Param::Beta2,
        Param::Beta3,
        Param::Beta4,
        Param::Gamma1,
        Param::Gamma2,
    ];

    /// The six arrows between distinct nodes.
    pub const LINKS: [Param; 6] =
        [Param::Beta1, Param::Beta2, Param::Beta3, Param::Beta4, Param::Gamma1, Param::Gamma2];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Short ASCII name: `a d t b1 b2 b3 b4 g1 g2`.
    pub fn short(self) -> &'static str {
        ["a", "d", "t", "b1", "b2", "b3", "b4", "g1", "g2"][self.index()]
    }

    pub fn name(self) -> &'static str {
        ["alpha", "delta", "tau", "beta1", "beta2", "beta3", "beta4", "gamma1", "gamma2"]
            [self.index()]
    }

    pub fn parse(s: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.short() == s || p.name() == s)
    }

    /// (tail, head), 0-based.
    pub fn arrow(self) -> (usize, usize) {
        match self {
            Param::Alpha => (0, 0),
            Param::Delta => (1, 1),
            Param::Tau => (2, 2),
            Param::Beta1 => (0, 2),
            Param::Beta2 => (0, 1),
            Param::Beta3 => (1, 0),
            Param::Beta4 => (1, 2),
            Param::Gamma1 => (2, 0),
            Param::Gamma2 => (2, 1),
        }
    }

    /// Image under the transposition of the two E nodes.
    pub fn swapped(self) -> Param {
        match self {
            Param::Alpha => Param::Delta,
            Param::Delta => Param::Alpha,
            Param::Tau => Param::Tau,
            Param::Beta1 => Param::Beta4,
            Param::Beta4 => Param::Beta1,
            Param::Beta2 => Param::Beta3,
            Param::Beta3 => Param::Beta2,
            Param::Gamma1 => Param::Gamma2,
            Param::Gamma2 => Param::Gamma1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("expected node types [E, E, I], got a different layout")]
    NotEei,
}

/// Arrow multiplicities of a network with node types `[E, E, I]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiplicityVector {
    pub alpha: u32,
    pub delta: u32,
    pub tau: u32,
    pub beta1: u32,
    pub beta2: u32,
    pub beta3: u32,
    pub beta4: u32,
    pub gamma1: u32,
    pub gamma2: u32,
}

impl MultiplicityVector {
    pub fn from_array(v: [u32; 9]) -> Self {
        let [alpha, delta, tau, beta1, beta2, beta3, beta4, gamma1, gamma2] = v;
        MultiplicityVector { alpha, delta, tau, beta1, beta2, beta3, beta4, gamma1, gamma2 }
    }

    pub fn to_array(self) -> [u32; 9] {
        [
            self.alpha,
            self.delta,
            self.tau,
            self.beta1,
            self.beta2,
            self.beta3,
            self.beta4,
            self.gamma1,
            self.gamma2,
        ]
    }

    pub fn get(self, p: Param) -> u32 {
        self.to_array()[p.index()]
    }

    pub fn set(&mut self, p: Param, value: u32) {
        let mut a = self.to_array();
        a[p.index()] = value;
        *self = MultiplicityVector::from_array(a);
    }

    pub fn with(mut self, p: Param, value: u32) -> Self {
        self.set(p, value);
        self
    }

    pub fn to_network(self) -> ReiNetwork {
        let mut net = ReiNetwork::empty(vec![NodeType::E, NodeType::E, NodeType::I]);
        for p in Param::ALL {
            let (tail, head) = p.arrow();
            net.add_arrow(tail, head, self.get(p));
        }
        net
    }

    /// Reads the parameters off a valid network with node types `[E, E, I]`.
    pub fn from_network(net: &ReiNetwork) -> Result<Self, LayoutError> {
        if net.types != [NodeType::E, NodeType::E, NodeType::I] {
            return Err(LayoutError::NotEei);
        }
        let mut v = MultiplicityVector::default();
        for p in Param::ALL {
            let (tail, head) = p.arrow();
            let m = if tail == 2 { net.inh[head][tail] } else { net.exc[head][tail] };
            v.set(p, m);
        }
        Ok(v)
    }

    /// Relabel by exchanging the two E nodes.
    pub fn swap_e(self) -> Self {
        let mut out = MultiplicityVector::default();
        for p in Param::ALL {
            out.set(p.swapped(), self.get(p));
        }
        out
    }

    pub fn support(self) -> SupportPattern {
        let mut s = SupportPattern::EMPTY;
        for p in Param::LINKS {
            if self.get(p) > 0 {
                s = s.with(p);
            }
        }
        s
    }

    pub fn is_connected(self) -> bool {
        self.support().is_connected()
    }

    /// Valences of nodes 1, 2, 3.
    pub fn valences(self) -> [u32; 3] {
        [
            self.alpha + self.beta3 + self.gamma1,
            self.beta2 + self.delta + self.gamma2,
            self.tau + self.beta1 + self.beta4,
        ]
    }

    /// (excitatory, inhibitory) input counts of nodes 1, 2, 3.
    pub fn inputs(self) -> [(u32, u32); 3] {
        [
            (self.alpha + self.beta3, self.gamma1),
            (self.beta2 + self.delta, self.gamma2),
            (self.beta1 + self.beta4, self.tau),
        ]
    }

    pub fn arrow_count(self) -> u32 {
        self.to_array().iter().sum()
    }

    pub fn has_autoregulation(self) -> bool {
        self.alpha + self.delta + self.tau > 0
    }

    /// Uses both excitatory and inhibitory arrows.
    pub fn uses_both_types(self) -> bool {
        let e = self.alpha + self.delta + self.beta1 + self.beta2 + self.beta3 + self.beta4;
        let i = self.tau + self.gamma1 + self.gamma2;
        e > 0 && i > 0
    }

    /// Reduction to a minimal ODE-equivalent vector.
    ///
    /// Removes the I loop, cancels the common part of the two E loops,
    /// makes the inhibitory multiplicities coprime, and then makes the
    /// excitatory multiplicities coprime together with the remaining E loop.
    /// A lone E loop is placed on node 1; when excitatory links are present
    /// and the loop sits on node 2, the E nodes are exchanged first.
    pub fn normal_form(self) -> Self {
        let mut v = self;
        v.tau = 0;
        let m = v.alpha.min(v.delta);
        v.alpha -= m;
        v.delta -= m;
        let g = gcd_nonzero(&[v.gamma1, v.gamma2]);
        if g > 1 {
            v.gamma1 /= g;
            v.gamma2 /= g;
        }
        let betas = [v.beta1, v.beta2, v.beta3, v.beta4];
        if betas.iter().all(|&b| b == 0) {
            // A1 - diag(1,0,0) = diag(0,1,0): any single E loop spans the same
            // space, so the loop count is irrelevant and node 1 carries it.
            if v.alpha + v.delta > 0 {
                v.alpha = 1;
                v.delta = 0;
            }
            return v;
        }
        if v.delta > 0 {
            v = v.swap_e();
        }
        let g = gcd_nonzero(&[v.alpha, v.beta1, v.beta2, v.beta3, v.beta4]);
        if g > 1 {
            v.alpha /= g;
            v.beta1 /= g;
            v.beta2 /= g;
            v.beta3 /= g;
            v.beta4 /= g;
        }
        v
    }
}

fn gcd_nonzero(xs: &[u32]) -> u32 {
    xs.iter().filter(|&&x| x > 0).fold(0, |g, &x| g.gcd(&x))
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Param::ALL
            .into_iter()
            .filter(|&p| self.get(p) > 0)
            .map(|p| alloc::format!("{}={}", p.short(), self.get(p)))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Which of the six links between distinct nodes are present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportPattern(u8);

impl SupportPattern {
    pub const EMPTY: SupportPattern = SupportPattern(0);

    fn bit(p: Param) -> u8 {
        let k = Param::LINKS.iter().position(|&q| q == p).expect("loops have no support bit");
        1 << k
    }

    pub fn with(self, p: Param) -> Self {
        SupportPattern(self.0 | Self::bit(p))
    }

    pub fn contains(self, p: Param) -> bool {
        self.0 & Self::bit(p) != 0
    }

    pub fn from_params(ps: &[Param]) -> Self {
        ps.iter().fold(Self::EMPTY, |s, &p| s.with(p))
    }

    /// All 64 patterns.
    pub fn all() -> impl Iterator<Item = SupportPattern> {
        (0u8..64).map(SupportPattern)
    }

    pub fn params(self) -> Vec<Param> {
        Param::LINKS.into_iter().filter(|&p| self.contains(p)).collect()
    }

    /// Every node has a link to or from another node.
    pub fn is_connected(self) -> bool {
        use Param::*;
        let any = |ps: &[Param]| ps.iter().any(|&p| self.contains(p));
        any(&[Beta1, Beta2, Beta3, Gamma1])
            && any(&[Beta2, Beta3, Beta4, Gamma2])
            && any(&[Beta1, Beta4, Gamma1, Gamma2])
    }
}

impl fmt::Display for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.params().into_iter().map(Param::short).collect();
        f.write_str(&names.join(" "))
    }
}

/// Support patterns of connected networks.
pub fn connected_supports() -> BTreeSet<SupportPattern> {
    SupportPattern::all().filter(|s| s.is_connected()).collect()
}

/// All connected vectors with every valence at most `max_valence`, in
/// lexicographic order of the parameter array.
pub fn valence_bounded_vectors(max_valence: u32) -> Vec<MultiplicityVector> {
    let m = max_valence;
    let mut out = Vec::new();
    for alpha in 0..=m {
        for delta in 0..=m {
            for tau in 0..=m {
                for beta1 in 0..=m - tau {
                    for beta2 in 0..=m - delta {
                        for beta3 in 0..=m - alpha {
                            for beta4 in 0..=m - tau - beta1 {
                                for gamma1 in 0..=m - alpha - beta3 {
                                    for gamma2 in 0..=m - delta - beta2 {
                                        let v = MultiplicityVector {
                                            alpha,
                                            delta,
                                            tau,
                                            beta1,
                                            beta2,
                                            beta3,
                                            beta4,
                                            gamma1,
                                            gamma2,
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
            }
        }
    }
    out
}

/// Connected vectors with valence at most 2, as labelled vectors.
pub fn valence_le2_vectors() -> Vec<MultiplicityVector> {
    valence_bounded_vectors(2)
}

/// Connected networks with valence at most 2, one per isomorphism class,
/// each in canonical form.
pub fn enumerate_valence_le2() -> Vec<ReiNetwork> {
    let set: BTreeSet<ReiNetwork> =
        valence_le2_vectors().into_iter().map(|v| v.to_network().canonical_form()).collect();
    set.into_iter().collect()
}
