//! JSON network files.
//!
//! ```json
//! {
//!   "nodes": [{"id": 1, "type": "E"}, {"id": 2, "type": "I"}],
//!   "arrows": [{"tail": 1, "head": 2, "type": "E", "mult": 1}]
//! }
//! ```
//!
//! Ids are 1-based and must be `1..=n` after sorting. Arrow records with the
//! same `(tail, head, type)` are summed.

use std::collections::BTreeMap;
use std::fmt;

use reinet_core::network::{NetworkError, NodeType, Violation};
use reinet_core::ReiNetwork;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    E,
    I,
}

impl From<TypeTag> for NodeType {
    fn from(t: TypeTag) -> Self {
        match t {
            TypeTag::E => NodeType::E,
            TypeTag::I => NodeType::I,
        }
    }
}

impl From<NodeType> for TypeTag {
    fn from(t: NodeType) -> Self {
        match t {
            NodeType::E => TypeTag::E,
            NodeType::I => TypeTag::I,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeRecord {
    pub id: u64,
    #[serde(rename = "type")]
    pub node_type: TypeTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowRecord {
    pub tail: u64,
    pub head: u64,
    #[serde(rename = "type")]
    pub arrow_type: TypeTag,
    pub mult: u64,
}

/// Wire form of a network.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub nodes: Vec<NodeRecord>,
    #[serde(default)]
    pub arrows: Vec<ArrowRecord>,
}

/// A problem located by field path, e.g. `arrows[2].head`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{}", join(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("REI violation: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Rei(Vec<Violation>),
    #[error("{0}")]
    Network(NetworkError),
}

fn join(d: &[Diagnostic]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// A parsed file: node types and summed arrow multiplicities, not yet
/// checked against the tail constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub types: Vec<NodeType>,
    pub exc: Vec<Vec<u32>>,
    pub inh: Vec<Vec<u32>>,
    pub warnings: Vec<Diagnostic>,
}

impl Document {
    /// Arrows whose declared type disagrees with their tail.
    pub fn violations(&self) -> Vec<Violation> {
        match ReiNetwork::new(self.types.clone(), self.exc.clone(), self.inh.clone()) {
            Err(NetworkError::Rei(v)) => v,
            _ => Vec::new(),
        }
    }

    pub fn into_network(self) -> Result<ReiNetwork, FormatError> {
        ReiNetwork::new(self.types, self.exc, self.inh).map_err(|e| match e {
            NetworkError::Rei(v) => FormatError::Rei(v),
            e => FormatError::Network(e),
        })
    }
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let file: NetworkFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_document()
}

impl NetworkFile {
    pub fn to_document(&self) -> Result<Document, FormatError> {
        let mut errs = Vec::new();
        let mut diag = |path: String, message: String| errs.push(Diagnostic { path, message });
        if self.nodes.is_empty() {
            diag("nodes".into(), "at least one node is required".into());
        }
        let n = self.nodes.len();
        let mut types: Vec<Option<NodeType>> = vec![None; n];
        for (k, node) in self.nodes.iter().enumerate() {
            let path = format!("nodes[{k}].id");
            if node.id == 0 || node.id > n as u64 {
                diag(path, format!("id {} is not in 1..={n}; ids must be contiguous", node.id));
            } else if types[node.id as usize - 1].replace(node.node_type.into()).is_some() {
                diag(path, format!("duplicate id {}", node.id));
            }
        }
        let mut sums: BTreeMap<(u64, u64, TypeTag), (u64, usize)> = BTreeMap::new();
        let mut warnings = Vec::new();
        for (k, a) in self.arrows.iter().enumerate() {
            for (field, id) in [("tail", a.tail), ("head", a.head)] {
                if id == 0 || id > n as u64 {
                    diag(format!("arrows[{k}].{field}"), format!("unknown node id {id}"));
                }
            }
            if a.mult == 0 {
                diag(format!("arrows[{k}].mult"), "multiplicity must be positive".into());
            }
            let key = (a.tail, a.head, a.arrow_type);
            match sums.get_mut(&key) {
                Some((m, first)) => {
                    *m += a.mult;
                    warnings.push(Diagnostic {
                        path: format!("arrows[{k}]"),
                        message: format!("repeats arrows[{first}]; multiplicities summed"),
                    });
                }
                None => {
                    sums.insert(key, (a.mult, k));
                }
            }
        }
        for (&(tail, head, _), &(m, k)) in &sums {
            if m > u64::from(u32::MAX) && tail <= n as u64 && head <= n as u64 {
                diag(format!("arrows[{k}].mult"), format!("total multiplicity {m} too large"));
            }
        }
        if !errs.is_empty() {
            return Err(FormatError::Invalid(errs));
        }
        let types: Vec<NodeType> = types.into_iter().map(|t| t.expect("ids checked")).collect();
        let mut exc = vec![vec![0u32; n]; n];
        let mut inh = vec![vec![0u32; n]; n];
        for ((tail, head, t), (m, _)) in sums {
            let target = match t {
                TypeTag::E => &mut exc,
                TypeTag::I => &mut inh,
            };
            target[head as usize - 1][tail as usize - 1] = m as u32;
        }
        Ok(Document { types, exc, inh, warnings })
    }

    /// Arrows ordered by tail, then head.
    pub fn from_network(net: &ReiNetwork) -> Self {
        let n = net.n();
        let nodes = (0..n).map(|i| NodeRecord { id: i as u64 + 1, node_type: net.types[i].into() }).collect();
        let mut arrows = Vec::new();
        for tail in 0..n {
            for head in 0..n {
                for (m, t) in [(net.exc[head][tail], TypeTag::E), (net.inh[head][tail], TypeTag::I)] {
                    if m > 0 {
                        arrows.push(ArrowRecord { tail: tail as u64 + 1, head: head as u64 + 1, arrow_type: t, mult: u64::from(m) });
                    }
                }
            }
        }
        NetworkFile { nodes, arrows }
    }
}

/// Parses and checks the tail constraint.
pub fn load_str(text: &str) -> Result<(ReiNetwork, Vec<Diagnostic>), FormatError> {
    let doc = parse_document(text)?;
    let warnings = doc.warnings.clone();
    Ok((doc.into_network()?, warnings))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(net: &ReiNetwork) -> String {
    let mut s = serde_json::to_string_pretty(&NetworkFile::from_network(net)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Single-line JSON, for streams.
pub fn to_line(net: &ReiNetwork) -> String {
    serde_json::to_string(&NetworkFile::from_network(net)).expect("plain data serializes")
}
