#![allow(dead_code)]

use proptest::prelude::*;
use reinet_core::network::NodeType::{self, E, I};
use reinet_core::ReiNetwork;

pub fn net(types: &[NodeType], arrows: &[(usize, usize, u32)]) -> ReiNetwork {
    let mut n = ReiNetwork::empty(types.to_vec());
    for &(tail, head, m) in arrows {
        n.add_arrow(tail - 1, head - 1, m);
    }
    n
}

/// Three-gene motif: genes 1, 2 repress themselves and each other, gene 3
/// activates gene 2.
pub fn fig2_left() -> ReiNetwork {
    net(&[I, I, E], &[(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1), (3, 2, 1)])
}

pub fn fig2_right() -> ReiNetwork {
    net(&[I, I, E], &[(2, 1, 1), (1, 2, 1), (3, 2, 1)])
}

pub fn example_2_7() -> ReiNetwork {
    net(&[E, E, I], &[(1, 2, 1), (1, 3, 1), (3, 2, 1), (3, 3, 1)])
}

pub fn fig4() -> ReiNetwork {
    net(&[E, E, I], &[(1, 2, 1), (1, 3, 1), (3, 2, 1)])
}

pub fn fig5_left() -> ReiNetwork {
    net(&[E, E, I], &[(1, 3, 1), (3, 1, 1), (3, 2, 1)])
}

pub fn fig5_right() -> ReiNetwork {
    net(&[E, I], &[(1, 2, 1), (2, 1, 1)])
}

/// Every network on `n` nodes with entries at most `cap`, every type layout.
pub fn all_networks(n: usize, cap: u32) -> Vec<ReiNetwork> {
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        let types: Vec<NodeType> = (0..n).map(|i| if mask >> i & 1 == 1 { I } else { E }).collect();
        let slots = n * n;
        let total = (cap + 1).pow(slots as u32);
        for code in 0..total {
            let mut x = ReiNetwork::empty(types.clone());
            let mut c = code;
            for s in 0..slots {
                let m = c % (cap + 1);
                c /= cap + 1;
                x.add_arrow(s % n, s / n, m);
            }
            out.push(x);
        }
    }
    out
}

pub fn arb_network(max_n: usize, max_entry: u32) -> impl Strategy<Value = ReiNetwork> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                proptest::collection::vec(prop_oneof![Just(E), Just(I)], n),
                proptest::collection::vec(0..=max_entry, n * n),
            )
        })
        .prop_map(|(types, ms)| {
            let n = types.len();
            let mut x = ReiNetwork::empty(types);
            for (s, &m) in ms.iter().enumerate() {
                x.add_arrow(s % n, s / n, m);
            }
            x
        })
}

/// Random permutation of `0..n` from a seed vector.
pub fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Independent span oracle: Gauss-Jordan over `Ratio<i64>` on the
/// row-major flattening. Small entries only.
pub fn oracle_span(mats: &[Vec<Vec<i64>>]) -> Vec<Vec<num_rational::Ratio<i64>>> {
    use num_rational::Ratio;
    let mut rows: Vec<Vec<Ratio<i64>>> =
        mats.iter().map(|m| m.concat().into_iter().map(Ratio::from_integer).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != Ratio::from_integer(0)) else { continue };
        rows.swap(r, p);
        let pv = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= pv;
        }
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i][c];
                for k in 0..cols {
                    let sub = f * rows[r][k];
                    rows[i][k] -= sub;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// The four matrices of a network with node types `[E, E, I]` from its
/// parameter array `(alpha, delta, tau, beta1, beta2, beta3, beta4, gamma1, gamma2)`.
pub fn oracle_bundle(v: [u32; 9]) -> Vec<Vec<Vec<i64>>> {
    let [a, d, t, b1, b2, b3, b4, g1, g2] = v.map(i64::from);
    vec![
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]],
        vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]],
        vec![vec![a, b3, 0], vec![b2, d, 0], vec![b1, b4, 0]],
        vec![vec![0, 0, g1], vec![0, 0, g2], vec![0, 0, t]],
    ]
}

pub fn oracle_swap(v: [u32; 9]) -> [u32; 9] {
    let [a, d, t, b1, b2, b3, b4, g1, g2] = v;
    [d, a, t, b4, b3, b2, b1, g2, g1]
}
