//! Restricted excitatory-inhibitory networks.
//!
//! A network on `n` nodes carries a node type per node and two arrow
//! multiplicity matrices. Entry `exc[i][j]` counts excitatory arrows from
//! node `j` to node `i`; `inh` uses the same orientation. Excitatory arrows
//! may only leave E nodes and inhibitory arrows may only leave I nodes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Node type. `E < I` in the canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeType {
    E,
    I,
}

impl NodeType {
    pub fn dual(self) -> NodeType {
        match self {
            NodeType::E => NodeType::I,
            NodeType::I => NodeType::E,
        }
    }

    /// Sign used in admissible ODE notation: `+` for E, `-` for I.
    pub fn sign(self) -> char {
        match self {
            NodeType::E => '+',
            NodeType::I => '-',
        }
    }
}

impl fmt::Display for NodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeType::E => f.write_str("E"),
            NodeType::I => f.write_str("I"),
        }
    }
}

/// One offending matrix entry: an arrow whose type disagrees with its tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Head node (0-based).
    pub head: usize,
    /// Tail node (0-based).
    pub tail: usize,
    pub arrow: NodeType,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}): {} arrow from {} node {} to node {}",
            self.head + 1,
            self.tail + 1,
            self.arrow,
            self.arrow,
            self.arrow.dual(),
            self.tail + 1,
            self.head + 1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("dimension mismatch: {0}")]
    Dimension(&'static str),
    #[error("network has no nodes")]
    Empty,
    #[error("{} arrow(s) violate the tail constraint", .0.len())]
    Rei(Vec<Violation>),
    #[error("node index {index} out of range for {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a permutation of {0} nodes")]
    BadPermutation(usize),
}

/// Input counts of a single node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InputProfile {
    pub node: usize,
    pub exc_in: u32,
    pub inh_in: u32,
    pub valence: u32,
}

/// A typed directed multigraph with excitatory and inhibitory arrows.
///
/// Field order matters: the derived `Ord` is the canonical encoding order
/// (types, then excitatory rows, then inhibitory rows).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReiNetwork {
    pub types: Vec<NodeType>,
    pub exc: Vec<Vec<u32>>,
    pub inh: Vec<Vec<u32>>,
}

impl ReiNetwork {
    /// Builds and validates a network.
    pub fn new(
        types: Vec<NodeType>,
        exc: Vec<Vec<u32>>,
        inh: Vec<Vec<u32>>,
    ) -> Result<Self, NetworkError> {
        let net = ReiNetwork { types, exc, inh };
        net.validate()?;
        Ok(net)
    }

    /// Network with the given node types and no arrows.
    pub fn empty(types: Vec<NodeType>) -> Self {
        let n = types.len();
        ReiNetwork {
            types,
            exc: vec![vec![0; n]; n],
            inh: vec![vec![0; n]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.types.len()
    }

    /// Adds `mult` arrows of the tail's type from `tail` to `head`.
    pub fn add_arrow(&mut self, tail: usize, head: usize, mult: u32) {
        match self.types[tail] {
            NodeType::E => self.exc[head][tail] += mult,
            NodeType::I => self.inh[head][tail] += mult,
        }
    }

    fn check_dims(&self) -> Result<(), NetworkError> {
        let n = self.n();
        if n == 0 {
            return Err(NetworkError::Empty);
        }
        if self.exc.len() != n || self.exc.iter().any(|r| r.len() != n) {
            return Err(NetworkError::Dimension("excitatory matrix is not n x n"));
        }
        if self.inh.len() != n || self.inh.iter().any(|r| r.len() != n) {
            return Err(NetworkError::Dimension("inhibitory matrix is not n x n"));
        }
        Ok(())
    }

    /// Checks dimensions, then the tail constraint on every entry.
    pub fn validate(&self) -> Result<(), NetworkError> {
        self.check_dims()?;
        let n = self.n();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.exc[i][j] > 0 && self.types[j] != NodeType::E {
                    bad.push(Violation { head: i, tail: j, arrow: NodeType::E });
                }
                if self.inh[i][j] > 0 && self.types[j] != NodeType::I {
                    bad.push(Violation { head: i, tail: j, arrow: NodeType::I });
                }
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(NetworkError::Rei(bad))
        }
    }

    /// Swaps node types and the roles of the two arrow matrices.
    pub fn dual(&self) -> ReiNetwork {
        ReiNetwork {
            types: self.types.iter().map(|t| t.dual()).collect(),
            exc: self.inh.clone(),
            inh: self.exc.clone(),
        }
    }

    pub fn input_profile(&self, i: usize) -> Result<InputProfile, NetworkError> {
        self.check_index(i)?;
        let exc_in: u32 = self.exc[i].iter().sum();
        let inh_in: u32 = self.inh[i].iter().sum();
        Ok(InputProfile { node: i, exc_in, inh_in, valence: exc_in + inh_in })
    }

    pub fn input_equivalent(&self, i: usize, j: usize) -> Result<bool, NetworkError> {
        let (a, b) = (self.input_profile(i)?, self.input_profile(j)?);
        Ok(self.types[i] == self.types[j] && a.exc_in == b.exc_in && a.inh_in == b.inh_in)
    }

    fn check_index(&self, i: usize) -> Result<(), NetworkError> {
        if i < self.n() {
            Ok(())
        } else {
            Err(NetworkError::IndexOutOfRange { index: i, n: self.n() })
        }
    }

    /// Total number of arrows, loops included.
    pub fn arrow_count(&self) -> u32 {
        self.exc.iter().chain(self.inh.iter()).flatten().sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.exc.iter().chain(self.inh.iter()).flatten().copied().max().unwrap_or(0)
    }

    fn linked(&self, head: usize, tail: usize) -> bool {
        self.exc[head][tail] + self.inh[head][tail] > 0
    }

    /// Underlying undirected simple graph, loops ignored, is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !seen[v] && v != u && (self.linked(u, v) || self.linked(v, u)) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Directed graph, loops ignored, is strongly connected. One node counts
    /// as transitive.
    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in 0..n {
                    let arc = if forward { self.linked(v, u) } else { self.linked(u, v) };
                    if !seen[v] && v != u && arc {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        reach(true) && reach(false)
    }

    pub fn is_feedforward(&self) -> bool {
        self.is_connected() && !self.is_transitive()
    }

    /// Relabels nodes: new node `k` is old node `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<ReiNetwork, NetworkError> {
        let n = self.n();
        let mut hit = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || core::mem::replace(&mut hit[p], true)) {
            return Err(NetworkError::BadPermutation(n));
        }
        Ok(self.permuted_unchecked(perm))
    }

    pub(crate) fn permuted_unchecked(&self, perm: &[usize]) -> ReiNetwork {
        let pick = |m: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            perm.iter().map(|&i| perm.iter().map(|&j| m[i][j]).collect()).collect()
        };
        ReiNetwork {
            types: perm.iter().map(|&i| self.types[i]).collect(),
            exc: pick(&self.exc),
            inh: pick(&self.inh),
        }
    }

    /// Relabelings that list every E node before every I node.
    pub fn type_sorting_permutations(&self) -> Vec<Vec<usize>> {
        let es: Vec<usize> = (0..self.n()).filter(|&i| self.types[i] == NodeType::E).collect();
        let is: Vec<usize> = (0..self.n()).filter(|&i| self.types[i] == NodeType::I).collect();
        let mut out = Vec::new();
        for pe in permutations_of(&es) {
            for pi in permutations_of(&is) {
                let mut p = pe.clone();
                p.extend_from_slice(&pi);
                out.push(p);
            }
        }
        out
    }

    /// Least relabeling under the encoding order. E nodes always come first,
    /// so two networks with the same type census compare on equal footing.
    pub fn canonical_form(&self) -> ReiNetwork {
        self.type_sorting_permutations()
            .iter()
            .map(|p| self.permuted_unchecked(p))
            .min()
            .expect("at least one permutation")
    }

    pub fn canonical_form_with_duality(&self) -> ReiNetwork {
        core::cmp::min(self.canonical_form(), self.dual().canonical_form())
    }

    pub fn is_isomorphic(&self, other: &ReiNetwork) -> bool {
        self.n() == other.n() && self.canonical_form() == other.canonical_form()
    }

    /// Number of E and I nodes.
    pub fn type_census(&self) -> (usize, usize) {
        let e = self.types.iter().filter(|&&t| t == NodeType::E).count();
        (e, self.n() - e)
    }
}

/// All orderings of `items`, lexicographic in positions.
pub fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..items.len()).collect();
    let mut out = vec![idx.iter().map(|&k| items[k]).collect()];
    // next_permutation
    loop {
        let Some(i) = (1..idx.len()).rev().find(|&i| idx[i - 1] < idx[i]) else {
            return out;
        };
        let j = (i..idx.len()).rev().find(|&j| idx[j] > idx[i - 1]).unwrap();
        idx.swap(i - 1, j);
        idx[i..].reverse();
        out.push(idx.iter().map(|&k| items[k]).collect());
    }
}
