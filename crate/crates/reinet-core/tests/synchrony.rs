mod common;

use common::*;
use proptest::prelude::*;
use reinet_core::synchrony::{balanced_partitions, is_balanced, polydiagonal_invariant, quotient, Partition};
use reinet_core::ReiNetwork;

/// All set partitions of `0..n`, no pruning.
fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(k: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Partition>) {
        if k == n {
            out.push(Partition::new(n, blocks.clone()).unwrap());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(k);
            go(k + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![k]);
        go(k + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Direct definition: equal types within blocks and, for every pair of
/// nodes in one block and every block, equal counts of arrows of each type.
fn oracle_balanced(net: &ReiNetwork, p: &Partition) -> bool {
    let n = net.n();
    let map = p.block_map();
    (0..n).all(|i| {
        (0..n).all(|j| {
            map[i] != map[j]
                || net.types[i] == net.types[j]
                    && p.blocks().iter().all(|b| {
                        let c = |m: &Vec<Vec<u32>>, x: usize| b.iter().map(|&k| m[x][k]).sum::<u32>();
                        c(&net.exc, i) == c(&net.exc, j) && c(&net.inh, i) == c(&net.inh, j)
                    })
        })
    })
}

#[test]
fn balanced_iff_polydiagonal_sweep() {
    for n in 1..=3 {
        let parts = all_partitions(n);
        assert_eq!(parts.len(), [1, 2, 5][n - 1]);
        for net in all_networks(n, 2) {
            let mut expect = Vec::new();
            for p in &parts {
                let b = is_balanced(&net, p).unwrap();
                assert_eq!(b, oracle_balanced(&net, p), "{net:?} {p}");
                assert_eq!(b, polydiagonal_invariant(&net, p).unwrap(), "{net:?} {p}");
                if b {
                    expect.push(p.clone());
                }
            }
            let mut got = balanced_partitions(&net);
            assert!(got.windows(2).all(|w| w[0].blocks().len() <= w[1].blocks().len()));
            got.sort();
            expect.sort();
            assert_eq!(got, expect);
        }
    }
}

#[test]
fn quotients_are_valid() {
    for net in all_networks(3, 1) {
        assert_eq!(quotient(&net, &Partition::singletons(3)).unwrap().net, net);
        for p in balanced_partitions(&net) {
            let q = quotient(&net, &p).unwrap();
            assert!(q.net.validate().is_ok());
            assert_eq!(q.net.n(), p.blocks().len());
            for (k, b) in p.blocks().iter().enumerate() {
                // blocks lie inside input classes, and the quotient node keeps
                // the input profile
                for &x in b {
                    assert!(net.input_equivalent(b[0], x).unwrap());
                    let (a, c) = (net.input_profile(x).unwrap(), q.net.input_profile(k).unwrap());
                    assert_eq!((a.exc_in, a.inh_in), (c.exc_in, c.inh_in));
                    assert_eq!(q.block_map[x], k);
                }
            }
        }
    }
}

proptest! {
    /// Quotienting by a coarser balanced partition in two steps gives the
    /// same network as doing it at once.
    #[test]
    fn quotient_composes(net in arb_network(4, 2)) {
        let parts = balanced_partitions(&net);
        for fine in &parts {
            for coarse in &parts {
                let fm = fine.block_map();
                let cm = coarse.block_map();
                let refines = (0..net.n()).all(|i| (0..net.n()).all(|j| fm[i] != fm[j] || cm[i] == cm[j]));
                if !refines {
                    continue;
                }
                let q1 = quotient(&net, fine).unwrap();
                let mut induced: Vec<Vec<usize>> = vec![Vec::new(); coarse.blocks().len()];
                for (k, b) in fine.blocks().iter().enumerate() {
                    induced[cm[b[0]]].push(k);
                }
                let ip = Partition::new(q1.net.n(), induced).unwrap();
                let q2 = quotient(&q1.net, &ip).unwrap();
                prop_assert_eq!(q2.net, quotient(&net, coarse).unwrap().net);
            }
        }
    }

    #[test]
    fn relabeling_carries_partitions(net in arb_network(4, 2), perm in (1usize..=4).prop_flat_map(arb_perm)) {
        prop_assume!(perm.len() == net.n());
        let m = net.permuted(&perm).unwrap();
        // node k of m is node perm[k] of net
        let mut inv = vec![0; perm.len()];
        for (k, &o) in perm.iter().enumerate() {
            inv[o] = k;
        }
        let moved = |p: &Partition| {
            Partition::new(p.n(), p.blocks().iter().map(|b| b.iter().map(|&x| inv[x]).collect()).collect()).unwrap()
        };
        let mut a: Vec<Partition> = balanced_partitions(&net).iter().map(moved).collect();
        let mut b = balanced_partitions(&m);
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn named_examples() {
    let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
    assert!(is_balanced(&fig5_left(), &p).unwrap());
    assert!(!is_balanced(&fig4(), &p).unwrap());
    let q = quotient(&fig5_left(), &p).unwrap();
    assert_eq!(q.net, fig5_right());
}
