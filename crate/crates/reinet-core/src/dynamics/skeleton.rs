//! Symbolic admissible ODEs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::network::{NodeType, ReiNetwork};

const SYMBOLS: [&str; 10] = ["f", "g", "h", "k", "l", "m", "p", "q", "r", "s"];

/// Right-hand side of one node's equation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeEquation {
    pub node: usize,
    pub node_type: NodeType,
    /// Shared by input-equivalent nodes.
    pub symbol: String,
    /// Tails of excitatory inputs, repeated by multiplicity, ascending.
    pub exc_args: Vec<usize>,
    /// Tails of inhibitory inputs, repeated by multiplicity, ascending.
    pub inh_args: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OdeSkeleton {
    pub types: Vec<NodeType>,
    pub equations: Vec<NodeEquation>,
}

fn symbol(k: usize) -> String {
    match SYMBOLS.get(k) {
        Some(s) => String::from(*s),
        None => format!("f{}", k + 1),
    }
}

fn expand(row: &[u32]) -> Vec<usize> {
    row.iter().enumerate().flat_map(|(j, &m)| core::iter::repeat_n(j, m as usize)).collect()
}

/// One equation per node; function symbols are assigned to input classes
/// in order of first appearance.
pub fn skeleton(net: &ReiNetwork) -> OdeSkeleton {
    let mut classes: Vec<(NodeType, u32, u32)> = Vec::new();
    let mut equations = Vec::new();
    for i in 0..net.n() {
        let p = net.input_profile(i).expect("index in range");
        let c = (net.types[i], p.exc_in, p.inh_in);
        let k = match classes.iter().position(|&x| x == c) {
            Some(k) => k,
            None => {
                classes.push(c);
                classes.len() - 1
            }
        };
        equations.push(NodeEquation {
            node: i,
            node_type: net.types[i],
            symbol: symbol(k),
            exc_args: expand(&net.exc[i]),
            inh_args: expand(&net.inh[i]),
        });
    }
    OdeSkeleton { types: net.types.clone(), equations }
}

const SUP: [char; 2] = ['\u{207a}', '\u{207b}'];
const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

impl OdeSkeleton {
    fn var(&self, i: usize, unicode: bool) -> String {
        let t = self.types[i];
        if unicode {
            let mut s = String::from("x");
            s.push(SUP[(t == NodeType::I) as usize]);
            for d in format!("{}", i + 1).bytes() {
                s.push(SUB[(d - b'0') as usize]);
            }
            s
        } else {
            format!("x{}{}", i + 1, t.sign())
        }
    }

    fn group(&self, args: &[usize], unicode: bool) -> Option<String> {
        let vars: Vec<String> = args.iter().map(|&j| self.var(j, unicode)).collect();
        match vars.len() {
            0 => None,
            1 => Some(vars[0].clone()),
            _ => Some(format!("{{{}}}", vars.join(", "))),
        }
    }

    fn line(&self, eq: &NodeEquation, unicode: bool) -> String {
        let mut parts = alloc::vec![self.var(eq.node, unicode)];
        parts.extend(self.group(&eq.exc_args, unicode));
        parts.extend(self.group(&eq.inh_args, unicode));
        let lhs = if unicode {
            let v = self.var(eq.node, true);
            format!("\u{1e8b}{}", &v[1..])
        } else {
            format!("{}'", self.var(eq.node, false))
        };
        format!("{lhs} = {}({})", eq.symbol, parts.join("; "))
    }

    /// ASCII text, one equation per line: `x2+' = g(x2+; x1+; x3-)`.
    /// Groups of two or more symmetric arguments are braced.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for eq in &self.equations {
            let _ = writeln!(s, "{}", self.line(eq, false));
        }
        s
    }

    /// Same as [`render`](Self::render) with sub- and superscripts:
    /// `ẋ⁺₂ = g(x⁺₂; x⁺₁; x⁻₃)`.
    pub fn render_unicode(&self) -> String {
        let mut s = String::new();
        for eq in &self.equations {
            let _ = writeln!(s, "{}", self.line(eq, true));
        }
        s
    }
}
