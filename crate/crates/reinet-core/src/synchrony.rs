//! Balanced partitions and quotient networks.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::equiv::adjacency_bundle;
use crate::network::{NodeType, ReiNetwork};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("empty block")]
    EmptyBlock,
    /// 0-based; displayed 1-based.
    #[error("node {} appears in more than one block", .0 + 1)]
    Repeated(usize),
    #[error("node {} is not covered", .0 + 1)]
    Uncovered(usize),
    #[error("node {} out of range for {n} nodes", .node + 1)]
    OutOfRange { node: usize, n: usize },
    #[error("partition is not balanced")]
    Unbalanced,
}

/// Partition of the nodes `0..n` into nonempty blocks. Blocks are sorted
/// internally and ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &x in b.iter() {
                if x >= n {
                    return Err(PartitionError::OutOfRange { node: x, n });
                }
                if core::mem::replace(&mut seen[x], true) {
                    return Err(PartitionError::Repeated(x));
                }
            }
            b.sort_unstable();
        }
        if let Some(x) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered(x));
        }
        blocks.sort();
        Ok(Partition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Partition { blocks: (0..n).map(|i| vec![i]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Block index of every node.
    pub fn block_map(&self) -> Vec<usize> {
        let mut m = vec![0; self.n()];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                m[x] = k;
            }
        }
        m
    }

    /// Dimension of the synchrony subspace for the given node dimension.
    pub fn synchrony_dim(&self, node_dim: usize) -> usize {
        self.blocks.len() * node_dim
    }

    /// Restricted growth string labels: block of node `i`, numbered in order
    /// of first appearance.
    fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i);
        }
        Partition { blocks }
    }
}

/// 1-based, `1,2|3`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| alloc::format!("{}", x + 1)).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&s.join("|"))
    }
}

fn check(net: &ReiNetwork, p: &Partition) -> Result<(), PartitionError> {
    if p.n() != net.n() {
        return Err(PartitionError::Uncovered(p.n().min(net.n())));
    }
    Ok(())
}

fn block_sum(row: &[u32], block: &[usize]) -> u32 {
    block.iter().map(|&k| row[k]).sum()
}

/// Blocks are type-homogeneous and nodes in a block receive equally many
/// arrows of each type from every block.
pub fn is_balanced(net: &ReiNetwork, p: &Partition) -> Result<bool, PartitionError> {
    check(net, p)?;
    for b in &p.blocks {
        let i = b[0];
        for &j in &b[1..] {
            if net.types[i] != net.types[j] {
                return Ok(false);
            }
            for src in &p.blocks {
                for m in [&net.exc, &net.inh] {
                    if block_sum(&m[i], src) != block_sum(&m[j], src) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Every bundle matrix maps the polydiagonal `{x : x_i = x_j whenever i, j
/// share a block}` into itself. Checked on the block indicator basis.
pub fn polydiagonal_invariant(net: &ReiNetwork, p: &Partition) -> Result<bool, PartitionError> {
    check(net, p)?;
    let map = p.block_map();
    for m in adjacency_bundle(net) {
        for b in &p.blocks {
            // image of the indicator of b: row sums over b
            let img: Vec<i64> = m.iter().map(|row| b.iter().map(|&k| row[k]).sum()).collect();
            for i in 0..net.n() {
                for j in i + 1..net.n() {
                    if map[i] == map[j] && img[i] != img[j] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// All set partitions of `0..n` whose blocks only join input-equivalent
/// nodes, as restricted growth strings.
fn candidates(net: &ReiNetwork) -> Vec<Partition> {
    let n = net.n();
    let class: Vec<(NodeType, u32, u32)> = (0..n)
        .map(|i| {
            let p = net.input_profile(i).expect("index in range");
            (net.types[i], p.exc_in, p.inh_in)
        })
        .collect();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    fn go(
        k: usize,
        next: usize,
        labels: &mut Vec<usize>,
        class: &[(NodeType, u32, u32)],
        out: &mut Vec<Partition>,
    ) {
        if k == labels.len() {
            out.push(Partition::from_labels(labels));
            return;
        }
        for l in 0..=next {
            if l < next {
                let rep = labels[..k].iter().position(|&x| x == l).unwrap();
                if class[rep] != class[k] {
                    continue;
                }
            }
            labels[k] = l;
            go(k + 1, next.max(l + 1), labels, class, out);
        }
    }
    go(0, 0, &mut labels, &class, &mut out);
    out
}

/// Balanced partitions, coarsest first (fewest blocks, then block order).
pub fn balanced_partitions(net: &ReiNetwork) -> Vec<Partition> {
    let mut out: Vec<Partition> =
        candidates(net).into_iter().filter(|p| is_balanced(net, p).unwrap_or(false)).collect();
    out.sort_by(|a, b| a.blocks.len().cmp(&b.blocks.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientNetwork {
    pub net: ReiNetwork,
    /// Block of each original node.
    pub block_map: Vec<usize>,
}

/// One node per block; multiplicity from block `K` into block `B` is the
/// number of arrows a node of `B` receives from `K`.
pub fn quotient(net: &ReiNetwork, p: &Partition) -> Result<QuotientNetwork, PartitionError> {
    if !is_balanced(net, p)? {
        return Err(PartitionError::Unbalanced);
    }
    let types = p.blocks.iter().map(|b| net.types[b[0]]).collect();
    let mut q = ReiNetwork::empty(types);
    for (bi, b) in p.blocks.iter().enumerate() {
        for (ki, k) in p.blocks.iter().enumerate() {
            q.exc[bi][ki] = block_sum(&net.exc[b[0]], k);
            q.inh[bi][ki] = block_sum(&net.inh[b[0]], k);
        }
    }
    Ok(QuotientNetwork { net: q, block_map: p.block_map() })
}
