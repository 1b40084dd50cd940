//! Graphviz export.

use std::fmt::Write as _;

use reinet_core::network::NodeType;
use reinet_core::ReiNetwork;

/// Multiplicities above this become one labelled edge.
const MAX_PARALLEL: u32 = 3;

/// DOT digraph. Nodes in index order, edges ordered by tail, then head.
pub fn to_dot(net: &ReiNetwork) -> String {
    let mut s = String::from("digraph reinet {\n");
    for (i, t) in net.types.iter().enumerate() {
        let fill = match t {
            NodeType::E => "white",
            NodeType::I => "gray",
        };
        writeln!(s, "  {} [shape=circle, style=filled, fillcolor={fill}];", i + 1).unwrap();
    }
    let n = net.n();
    for tail in 0..n {
        for head in 0..n {
            for (m, style) in [(net.exc[head][tail], "solid"), (net.inh[head][tail], "dashed")] {
                if m == 0 {
                    continue;
                }
                if m <= MAX_PARALLEL {
                    for _ in 0..m {
                        writeln!(s, "  {} -> {} [style={style}];", tail + 1, head + 1).unwrap();
                    }
                } else {
                    writeln!(s, "  {} -> {} [style={style}, label=\"{m}\"];", tail + 1, head + 1).unwrap();
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
