//! ODE-equivalence of networks with the same number of nodes.
//!
//! Two networks are ODE-equivalent when, after a type-preserving
//! identification of nodes, their node-type and arrow-type adjacency
//! matrices span the same vector space.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::enumeration::{LayoutError, MultiplicityVector};
use crate::linalg::{span_key, IntMatrix, SpanKey};
use crate::network::{NodeType, ReiNetwork};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error("networks have {0} and {1} nodes")]
    SizeMismatch(usize, usize),
    #[error("joint and blockwise span tests disagree under bijection {0:?}")]
    Inconsistent(Vec<usize>),
    #[error(transparent)]
    Layout(#[from] LayoutError),
}

fn to_int(m: &[Vec<u32>]) -> IntMatrix {
    m.iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect()
}

fn node_type_matrix(net: &ReiNetwork, t: NodeType) -> IntMatrix {
    let n = net.n();
    let mut m = vec![vec![0; n]; n];
    for (i, &ti) in net.types.iter().enumerate() {
        if ti == t {
            m[i][i] = 1;
        }
    }
    m
}

/// Node-type matrices for each type present (E first), then the
/// excitatory and inhibitory arrow matrices.
pub fn adjacency_bundle(net: &ReiNetwork) -> Vec<IntMatrix> {
    let mut out = Vec::new();
    for t in [NodeType::E, NodeType::I] {
        if net.types.contains(&t) {
            out.push(node_type_matrix(net, t));
        }
    }
    out.push(to_int(&net.exc));
    out.push(to_int(&net.inh));
    out
}

/// Span key at the network's own node labelling.
pub fn bundle_key(net: &ReiNetwork) -> SpanKey {
    span_key(&adjacency_bundle(net)).expect("bundle matrices are square")
}

/// Span keys of the E-column block `{A_E, exc}` and the I-column block
/// `{A_I, inh}`. The joint span is their direct sum.
fn block_keys(net: &ReiNetwork) -> (SpanKey, SpanKey) {
    let e = span_key(&[node_type_matrix(net, NodeType::E), to_int(&net.exc)]).unwrap();
    let i = span_key(&[node_type_matrix(net, NodeType::I), to_int(&net.inh)]).unwrap();
    (e, i)
}

/// Least span key over all relabelings that list E nodes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OdeClassKey {
    pub types: Vec<NodeType>,
    pub key: SpanKey,
}

pub fn ode_class_key(net: &ReiNetwork) -> OdeClassKey {
    let key = net
        .type_sorting_permutations()
        .iter()
        .map(|p| bundle_key(&net.permuted_unchecked(p)))
        .min()
        .expect("at least one permutation");
    let mut types = net.types.clone();
    types.sort();
    OdeClassKey { types, key }
}

/// A bijection `sigma` (node `i` of `a` corresponds to node `sigma[i]` of
/// `b`) under which the two spans agree, if one exists. Every candidate is
/// decided both jointly and blockwise; disagreement is an error.
pub fn ode_equivalence_witness(
    a: &ReiNetwork,
    b: &ReiNetwork,
) -> Result<Option<Vec<usize>>, EquivError> {
    if a.n() != b.n() {
        return Err(EquivError::SizeMismatch(a.n(), b.n()));
    }
    if a.type_census() != b.type_census() {
        return Ok(None);
    }
    let ka = bundle_key(a);
    let (ea, ia) = block_keys(a);
    // sort both sides so that candidates are exactly the type-preserving maps
    let pa = &a.type_sorting_permutations()[0];
    for pb in b.type_sorting_permutations() {
        let mut sigma = vec![0; a.n()];
        for k in 0..a.n() {
            sigma[pa[k]] = pb[k];
        }
        // node i of the candidate is node sigma[i] of b
        let cand = b.permuted_unchecked(&sigma);
        let joint = bundle_key(&cand) == ka;
        let (ec, ic) = block_keys(&cand);
        let blockwise = ec == ea && ic == ia;
        if joint != blockwise {
            return Err(EquivError::Inconsistent(sigma));
        }
        if joint {
            return Ok(Some(sigma));
        }
    }
    Ok(None)
}

pub fn ode_equivalent(a: &ReiNetwork, b: &ReiNetwork) -> Result<bool, EquivError> {
    Ok(ode_equivalence_witness(a, b)?.is_some())
}

/// Minimal reduction of a network with node types `[E, E, I]`; see
/// [`MultiplicityVector::normal_form`].
pub fn normal_form_3node(net: &ReiNetwork) -> Result<ReiNetwork, EquivError> {
    Ok(MultiplicityVector::from_network(net)?.normal_form().to_network())
}

/// How minimality of a [`MinimalForm`] was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalityBound {
    /// Closed-form reduction for three nodes, two of type E (or its dual).
    NormalForm,
    /// Exhaustive search in order of arrow count over candidates with
    /// entries at most `cap`.
    Search { cap: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalForm {
    pub net: ReiNetwork,
    pub arrow_count: u32,
    pub bound: MinimalityBound,
}

/// A member of the ODE-class of `net` with the fewest arrows, in canonical
/// form. Among several minimal members the canonical-form-least one is
/// returned when the search path is used.
pub fn minimal_representative(net: &ReiNetwork) -> MinimalForm {
    let c = net.canonical_form();
    if c.types == [NodeType::E, NodeType::E, NodeType::I] {
        let m = normal_form_3node(&c).expect("layout checked").canonical_form();
        return MinimalForm { arrow_count: m.arrow_count(), net: m, bound: MinimalityBound::NormalForm };
    }
    let d = c.dual().canonical_form();
    if d.types == [NodeType::E, NodeType::E, NodeType::I] {
        let m = normal_form_3node(&d).expect("layout checked").dual().canonical_form();
        return MinimalForm { arrow_count: m.arrow_count(), net: m, bound: MinimalityBound::NormalForm };
    }
    let cap = c.max_entry().max(2);
    let target = ode_class_key(&c);
    let slots: Vec<(usize, usize)> = (0..c.n())
        .flat_map(|i| (0..c.n()).map(move |j| (i, j)))
        .collect();
    for total in 0..=c.arrow_count() {
        let mut best: Option<ReiNetwork> = None;
        let mut cand = ReiNetwork::empty(c.types.clone());
        fill(&mut cand, &slots, 0, total, cap, &mut |x| {
            if ode_class_key(x) == target {
                let f = x.canonical_form();
                if best.as_ref().is_none_or(|b| f < *b) {
                    best = Some(f);
                }
            }
        });
        if let Some(m) = best {
            return MinimalForm { arrow_count: total, net: m, bound: MinimalityBound::Search { cap } };
        }
    }
    unreachable!("the network itself is a candidate")
}

/// Visits every network over `slots[k..]` whose remaining arrows total
/// exactly `left`, each entry at most `cap`. Slot (i, j) carries the arrow
/// type of tail j.
fn fill(
    net: &mut ReiNetwork,
    slots: &[(usize, usize)],
    k: usize,
    left: u32,
    cap: u32,
    visit: &mut dyn FnMut(&ReiNetwork),
) {
    if k == slots.len() {
        if left == 0 {
            visit(net);
        }
        return;
    }
    let (i, j) = slots[k];
    for m in 0..=left.min(cap) {
        match net.types[j] {
            NodeType::E => net.exc[i][j] = m,
            NodeType::I => net.inh[i][j] = m,
        }
        fill(net, slots, k + 1, left - m, cap, visit);
    }
    match net.types[j] {
        NodeType::E => net.exc[i][j] = 0,
        NodeType::I => net.inh[i][j] = 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeClass {
    pub members: Vec<ReiNetwork>,
    pub minimal: MinimalForm,
}

/// Groups networks by [`OdeClassKey`]; iteration order is key order.
pub fn classify(nets: &[ReiNetwork]) -> Result<BTreeMap<OdeClassKey, OdeClass>, EquivError> {
    let mut groups: BTreeMap<OdeClassKey, Vec<ReiNetwork>> = BTreeMap::new();
    if let Some(first) = nets.first() {
        for net in nets {
            if net.n() != first.n() {
                return Err(EquivError::SizeMismatch(first.n(), net.n()));
            }
            groups.entry(ode_class_key(net)).or_default().push(net.clone());
        }
    }
    Ok(groups
        .into_iter()
        .map(|(k, members)| {
            let minimal = minimal_representative(&members[0]);
            (k, OdeClass { members, minimal })
        })
        .collect())
}
