//! Admissible ODEs: symbolic skeletons, the Hill-function gene regulatory
//! model, fixed-step integration and dynamical synchrony checks.

use alloc::vec::Vec;

use thiserror::Error;

use crate::network::ReiNetwork;
use crate::synchrony::{is_balanced, quotient, Partition, PartitionError};

pub mod grn;
pub mod integrate;
pub mod skeleton;

pub use grn::{grn_field, hill_exc, hill_inh, GrnModel, GrnParams, Hill, RateParams, Term};
pub use integrate::{integrate, SimConfig, Trajectory, VectorField};
pub use skeleton::{skeleton, NodeEquation, OdeSkeleton};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum DynamicsError {
    #[error("parameter {0} must be positive")]
    NonPositive(&'static str),
    #[error("invalid configuration: {0}")]
    Config(&'static str),
    #[error("state has length {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("non-finite state at step {step} (t = {t}); step size too large")]
    NonFinite { step: usize, t: f64 },
    #[error("negative concentration {value} in component {index} at step {step}")]
    Negative { step: usize, index: usize, value: f64 },
    #[error("initial state differs between nodes {0} and {1} of one block")]
    NotSynchronous(usize, usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Integrates the Hill model and checks that concentrations stay
/// nonnegative.
pub fn simulate(net: &ReiNetwork, params: &GrnParams, cfg: &SimConfig) -> Result<Trajectory, DynamicsError> {
    let field = grn_field(net, params)?;
    let traj = integrate(&field, cfg)?;
    for (step, x) in traj.states.iter().enumerate() {
        if let Some(index) = x.iter().position(|&v| v < 0.0) {
            return Err(DynamicsError::Negative { step, index, value: x[index] });
        }
    }
    Ok(traj)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SyncReport {
    /// Max over time of the largest state difference within a block.
    pub max_divergence: f64,
    /// Max over time of the difference between the quotient trajectory and
    /// the full trajectory at each block's first node.
    pub quotient_deviation: f64,
    pub tolerance: f64,
}

impl SyncReport {
    pub fn passed(&self) -> bool {
        self.max_divergence <= self.tolerance && self.quotient_deviation <= self.tolerance
    }
}

fn absdiff(a: f64, b: f64) -> f64 {
    if a > b { a - b } else { b - a }
}

/// Integrates the network from block-constant initial data and measures how
/// far the blocks drift apart; also integrates the quotient and compares.
pub fn verify_synchrony(
    net: &ReiNetwork,
    p: &Partition,
    params: &GrnParams,
    cfg: &SimConfig,
) -> Result<SyncReport, DynamicsError> {
    if !is_balanced(net, p)? {
        return Err(PartitionError::Unbalanced.into());
    }
    if cfg.x0.len() != 2 * net.n() {
        return Err(DynamicsError::Dimension { expected: 2 * net.n(), got: cfg.x0.len() });
    }
    for b in p.blocks() {
        for &j in &b[1..] {
            if cfg.x0[2 * j..2 * j + 2] != cfg.x0[2 * b[0]..2 * b[0] + 2] {
                return Err(DynamicsError::NotSynchronous(b[0], j));
            }
        }
    }
    let full = simulate(net, params, cfg)?;
    let mut max_divergence: f64 = 0.0;
    for x in &full.states {
        for b in p.blocks() {
            for &j in &b[1..] {
                for c in 0..2 {
                    max_divergence = max_divergence.max(absdiff(x[2 * j + c], x[2 * b[0] + c]));
                }
            }
        }
    }

    let q = quotient(net, p)?;
    let x0q: Vec<f64> = p.blocks().iter().flat_map(|b| [cfg.x0[2 * b[0]], cfg.x0[2 * b[0] + 1]]).collect();
    let qcfg = SimConfig { x0: x0q, ..cfg.clone() };
    let reduced = simulate(&q.net, params, &qcfg)?;
    let mut quotient_deviation: f64 = 0.0;
    for (x, y) in full.states.iter().zip(&reduced.states) {
        for (k, b) in p.blocks().iter().enumerate() {
            for c in 0..2 {
                quotient_deviation = quotient_deviation.max(absdiff(x[2 * b[0] + c], y[2 * k + c]));
            }
        }
    }
    Ok(SyncReport { max_divergence, quotient_deviation, tolerance: cfg.tolerance })
}
