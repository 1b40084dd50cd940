//! Acceptance criteria. Runs without the test harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::time::Instant;

use num_rational::Ratio;
use reinet::format::load_str;
use reinet_core::dynamics::integrate::{integrate, SimConfig, VectorField};
use reinet_core::dynamics::{skeleton, verify_synchrony, GrnParams};
use reinet_core::enumeration::cases::{case_census, Case};
use reinet_core::enumeration::census::{reproduce_tables, PUBLISHED_COUNTS};
use reinet_core::enumeration::families::{expand_families, family_group};
use reinet_core::enumeration::published::table1_supports;
use reinet_core::enumeration::{connected_supports, enumerate_valence_le2, valence_le2_vectors, SupportPattern};
use reinet_core::equiv::{minimal_representative, normal_form_3node, ode_equivalent};
use reinet_core::network::NodeType;
use reinet_core::synchrony::{balanced_partitions, is_balanced, polydiagonal_invariant, quotient, Partition};
use reinet_core::ReiNetwork;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn fixture(name: &str) -> ReiNetwork {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", &format!("{name}.json")].iter().collect();
    load_str(&std::fs::read_to_string(p).expect("fixture exists")).expect("fixture parses").0
}

/// Parameter array `(alpha, delta, tau, beta1, beta2, beta3, beta4, gamma1, gamma2)`.
type Params = [u32; 9];

/// Link indices into the parameter array, and the three sets of which each
/// must contain a present link for the network to be connected.
const LINKS: [usize; 6] = [3, 4, 5, 6, 7, 8];
const LINK_GROUPS: [[usize; 4]; 3] = [[3, 4, 5, 7], [4, 5, 6, 8], [3, 6, 7, 8]];

fn swap(v: Params) -> Params {
    let [a, d, t, b1, b2, b3, b4, g1, g2] = v;
    [d, a, t, b4, b3, b2, b1, g2, g1]
}

/// Row-reduced span of the four matrices (two node-type, two arrow-type)
/// of the network, over `Ratio<i64>`.
fn span(v: Params) -> Vec<Vec<Ratio<i64>>> {
    let [a, d, t, b1, b2, b3, b4, g1, g2] = v.map(i64::from);
    let mats = [
        [1, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1],
        [a, b3, 0, b2, d, 0, b1, b4, 0],
        [0, 0, g1, 0, 0, g2, 0, 0, t],
    ];
    let mut rows: Vec<Vec<Ratio<i64>>> = mats.iter().map(|m| m.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut r = 0;
    for c in 0..9 {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != Ratio::from_integer(0)) else { continue };
        rows.swap(r, p);
        let pv = rows[r][c];
        rows[r].iter_mut().for_each(|x| *x /= pv);
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i][c];
                for k in 0..9 {
                    let s = f * rows[r][k];
                    rows[i][k] -= s;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn class_key(v: Params) -> Vec<Vec<Ratio<i64>>> {
    span(v).min(span(swap(v)))
}

fn c1_supports() -> Outcome {
    let mut brute = BTreeSet::new();
    for mask in 0u32..64 {
        let mut v = [0u32; 9];
        for (b, &k) in LINKS.iter().enumerate() {
            v[k] = mask >> b & 1;
        }
        if LINK_GROUPS.iter().all(|g| g.iter().any(|&k| v[k] > 0)) {
            brute.insert(mask);
        }
    }
    let ours = connected_supports();
    let published: BTreeSet<SupportPattern> = table1_supports().into_iter().collect();
    let extra: Vec<String> = ours.difference(&published).map(|s| format!("{{{s}}}")).collect();
    let missing = published.difference(&ours).count();
    let ok = brute.len() == 51 && ours.len() == 51 && ours == published;
    (
        ok,
        format!(
            "brute force {}, library {}, published {}; not published: {}; published but not found: {missing}",
            brute.len(),
            ours.len(),
            published.len(),
            if extra.is_empty() { "none".into() } else { extra.join(" ") }
        ),
    )
}

fn c2_census() -> Outcome {
    let r = reproduce_tables();
    (
        r.counts == PUBLISHED_COUNTS,
        format!("found {:?} (total {}), expected {:?} (total 227)", r.counts, r.total(), PUBLISHED_COUNTS),
    )
}

fn c3_rows() -> Outcome {
    let r = reproduce_tables();
    let bad: Vec<String> = r
        .rows
        .iter()
        .filter(|a| !a.ok())
        .map(|a| format!("table {} row {}: stated {}, found {}", a.table.number(), a.row, a.stated, a.found))
        .collect();
    let detail = if bad.is_empty() { "all agree".to_string() } else { bad.join("; ") };
    (bad.is_empty(), format!("{} rows audited; {detail}", r.rows.len()))
}

fn c4_worked_pairs() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (a, b) in [("fig2_left", "fig2_right"), ("example_2_7", "fig4")] {
        let (x, y) = (fixture(a), fixture(b));
        let eq = ode_equivalent(&x, &y).unwrap();
        let m = minimal_representative(&x);
        ok &= eq && m.arrow_count == 3;
        parts.push(format!("{a} ~ {b}: {eq}, minimal arrows {}", m.arrow_count));
    }
    (ok, parts.join("; "))
}

fn c5_minimality() -> Outcome {
    // minimum arrow count per class over every network with node types
    // E, E, I and entries at most 2
    let mut best: BTreeMap<Vec<Vec<Ratio<i64>>>, u32> = BTreeMap::new();
    for code in 0..3u32.pow(9) {
        let mut v = [0u32; 9];
        let mut c = code;
        for x in v.iter_mut() {
            *x = c % 3;
            c /= 3;
        }
        let n: u32 = v.iter().sum();
        let e = best.entry(class_key(v)).or_insert(n);
        *e = (*e).min(n);
    }
    let mut failures = 0;
    let universe = valence_le2_vectors();
    for v in &universe {
        let nf = normal_form_3node(&v.to_network()).unwrap();
        if nf.arrow_count() != best[&class_key(v.to_array())] {
            failures += 1;
        }
    }
    (failures == 0, format!("{} networks, {failures} not minimal", universe.len()))
}

fn c6_cases() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for c in Case::ALL {
        let r = case_census(c);
        let good = r.matches() && (c != Case::IV || r.census.len() == 6);
        ok &= good;
        parts.push(format!(
            "({}) found {}, listed {}, unlisted {}",
            c.label(),
            r.census.len(),
            r.family.len(),
            r.missing.len()
        ));
    }
    (ok, parts.join("; "))
}

fn c7_uniqueness() -> Outcome {
    let target = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
    let mut nets = expand_families(&family_group("AH").unwrap());
    nets.extend(expand_families(&family_group("NH.1-3").unwrap()));
    let bad = nets
        .iter()
        .filter(|n| {
            let nt: Vec<Partition> = balanced_partitions(n).into_iter().filter(|p| !p.is_trivial()).collect();
            nt != [target.clone()]
        })
        .count();
    (bad == 0, format!("{} networks, {bad} without a unique nontrivial balanced partition", nets.len()))
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in set_partitions(n - 1) {
        for k in 0..p.len() {
            let mut q = p.clone();
            q[k].push(n - 1);
            out.push(q);
        }
        let mut q = p;
        q.push(vec![n - 1]);
        out.push(q);
    }
    out
}

fn c8_balance() -> Outcome {
    let mut checked = 0usize;
    let mut disagree = 0usize;
    for n in 1..=3 {
        let parts = set_partitions(n);
        for mask in 0..1u32 << n {
            let types: Vec<NodeType> = (0..n).map(|i| if mask >> i & 1 == 1 { NodeType::I } else { NodeType::E }).collect();
            let compatible: Vec<Partition> = parts
                .iter()
                .filter(|p| p.iter().all(|b| b.iter().all(|&x| types[x] == types[b[0]])))
                .map(|p| Partition::new(n, p.clone()).unwrap())
                .collect();
            let slots = n * n;
            for code in 0..3u32.pow(slots as u32) {
                let mut net = ReiNetwork::empty(types.clone());
                let mut c = code;
                for s in 0..slots {
                    net.add_arrow(s % n, s / n, c % 3);
                    c /= 3;
                }
                for p in &compatible {
                    checked += 1;
                    if is_balanced(&net, p).unwrap() != polydiagonal_invariant(&net, p).unwrap() {
                        disagree += 1;
                    }
                }
            }
        }
    }
    (disagree == 0, format!("{checked} (network, partition) pairs, {disagree} disagreements"))
}

fn c9_quotients() -> Outcome {
    let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
    let q = quotient(&fixture("fig5_left"), &p).unwrap();
    let fig5 = q.net == fixture("fig5_right");
    let mut total = 0;
    let mut invalid = 0;
    for net in enumerate_valence_le2() {
        for p in balanced_partitions(&net) {
            total += 1;
            if quotient(&net, &p).map(|q| q.net.validate().is_ok()) != Ok(true) {
                invalid += 1;
            }
        }
    }
    (fig5 && invalid == 0, format!("fig5 quotient matches: {fig5}; {total} quotients, {invalid} invalid"))
}

struct Decay;

impl VectorField for Decay {
    fn dim(&self) -> usize {
        1
    }
    fn eval(&self, x: &[f64], dx: &mut [f64]) {
        dx[0] = -x[0];
    }
}

fn c10_dynamics() -> Outcome {
    let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
    let cfg = SimConfig { dt: 0.01, t_end: 50.0, x0: vec![0.3, 0.7, 0.3, 0.7, 1.2, 0.1], tolerance: 1e-9 };
    let r = verify_synchrony(&fixture("fig5_left"), &p, &GrnParams::default(), &cfg).unwrap();
    let exact = (-1.0f64).exp();
    let err = |dt: f64| {
        let c = SimConfig { dt, t_end: 1.0, x0: vec![1.0], tolerance: 0.0 };
        (integrate(&Decay, &c).unwrap().last()[0] - exact).abs()
    };
    let ratio = err(0.1) / err(0.05);
    let ok = r.passed() && (8.0..=32.0).contains(&ratio);
    (
        ok,
        format!(
            "divergence {:.1e}, quotient deviation {:.1e}, RK4 halving ratio {ratio:.2}",
            r.max_divergence, r.quotient_deviation
        ),
    )
}

fn c11_skeleton() -> Outcome {
    let got = skeleton(&fixture("example_2_7")).render_unicode();
    let norm = |s: &str| s.split_whitespace().collect::<String>();
    let expect = "ẋ⁺₁ = f(x⁺₁)\nẋ⁺₂ = g(x⁺₂; x⁺₁; x⁻₃)\nẋ⁻₃ = h(x⁻₃; x⁺₁; x⁻₃)";
    let ok = norm(&got) == norm(expect);
    (ok, got.trim_end().replace('\n', " | "))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("connectivity supports", c1_supports),
        ("ODE-class census", c2_census),
        ("per-row table audit", c3_rows),
        ("worked ODE-equivalences", c4_worked_pairs),
        ("minimality oracle", c5_minimality),
        ("valence-2 case censuses", c6_cases),
        ("synchrony uniqueness", c7_uniqueness),
        ("balanced iff polydiagonal-invariant", c8_balance),
        ("quotient reproduction", c9_quotients),
        ("dynamics", c10_dynamics),
        ("skeleton fidelity", c11_skeleton),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({detail}) [{:.2}s]",
            k + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
