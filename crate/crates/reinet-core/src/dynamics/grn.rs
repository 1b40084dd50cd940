//! Gene regulatory network model with additive Hill-function coupling.
//!
//! Each node `i` carries an mRNA concentration `m_i` and a protein
//! concentration `p_i`, stored interleaved as `[m_1, p_1, m_2, p_2, ...]`:
//!
//! ```text
//! m_i' = -mrna_decay * m_i + sum_j exc[i][j] H+(p_j) + sum_j inh[i][j] H-(p_j)
//! p_i' = translation * m_i - protein_decay * p_i
//! ```
//!
//! with `H-(z) = 1 / (1 + z^n)` and `H+(z) = z^n* / (1 + z^n*)`. Rates and
//! exponents are shared by all nodes of one type and taken from the
//! receiving node.

use alloc::vec::Vec;

use super::integrate::VectorField;
use super::DynamicsError;
use crate::network::{NodeType, ReiNetwork};

/// Rates for the nodes of one type.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateParams {
    pub mrna_decay: f64,
    pub translation: f64,
    pub protein_decay: f64,
    pub hill_inh_exponent: u32,
    pub hill_exc_exponent: u32,
}

impl Default for RateParams {
    fn default() -> Self {
        RateParams {
            mrna_decay: 1.0,
            translation: 1.0,
            protein_decay: 1.0,
            hill_inh_exponent: 2,
            hill_exc_exponent: 2,
        }
    }
}

impl RateParams {
    fn validate(&self) -> Result<(), DynamicsError> {
        let pos = |x: f64| x > 0.0 && x.is_finite();
        if !pos(self.mrna_decay) {
            return Err(DynamicsError::NonPositive("mrna_decay"));
        }
        if !pos(self.translation) {
            return Err(DynamicsError::NonPositive("translation"));
        }
        if !pos(self.protein_decay) {
            return Err(DynamicsError::NonPositive("protein_decay"));
        }
        if self.hill_inh_exponent == 0 {
            return Err(DynamicsError::NonPositive("hill_inh_exponent"));
        }
        if self.hill_exc_exponent == 0 {
            return Err(DynamicsError::NonPositive("hill_exc_exponent"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GrnParams {
    pub e: RateParams,
    pub i: RateParams,
}

impl GrnParams {
    pub fn for_type(&self, t: NodeType) -> &RateParams {
        match t {
            NodeType::E => &self.e,
            NodeType::I => &self.i,
        }
    }
}

fn powu(z: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * z)
}

/// Repression `1 / (1 + z^n)`.
pub fn hill_inh(z: f64, n: u32) -> f64 {
    1.0 / (1.0 + powu(z, n))
}

/// Activation `z^n / (1 + z^n)`, computed as `1 - hill_inh(z, n)` so the
/// two sum to exactly 1 for equal exponents.
pub fn hill_exc(z: f64, n: u32) -> f64 {
    1.0 - hill_inh(z, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hill {
    Exc,
    Inh,
}

/// One synthesis term `mult * H(p_source)` in an mRNA equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub hill: Hill,
    pub source: usize,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrnModel {
    net: ReiNetwork,
    params: GrnParams,
}

pub fn grn_field(net: &ReiNetwork, params: &GrnParams) -> Result<GrnModel, DynamicsError> {
    params.e.validate()?;
    params.i.validate()?;
    Ok(GrnModel { net: net.clone(), params: *params })
}

impl GrnModel {
    pub fn network(&self) -> &ReiNetwork {
        &self.net
    }

    /// Synthesis terms of node `i`'s mRNA equation, by source node.
    pub fn synthesis_terms(&self, i: usize) -> Vec<Term> {
        let mut out = Vec::new();
        for j in 0..self.net.n() {
            if self.net.exc[i][j] > 0 {
                out.push(Term { hill: Hill::Exc, source: j, mult: self.net.exc[i][j] });
            }
            if self.net.inh[i][j] > 0 {
                out.push(Term { hill: Hill::Inh, source: j, mult: self.net.inh[i][j] });
            }
        }
        out
    }
}

impl VectorField for GrnModel {
    fn dim(&self) -> usize {
        2 * self.net.n()
    }

    fn eval(&self, x: &[f64], dx: &mut [f64]) {
        for i in 0..self.net.n() {
            let r = self.params.for_type(self.net.types[i]);
            let (m, p) = (x[2 * i], x[2 * i + 1]);
            let mut s = -r.mrna_decay * m;
            for j in 0..self.net.n() {
                let pj = x[2 * j + 1];
                if self.net.exc[i][j] > 0 {
                    s += f64::from(self.net.exc[i][j]) * hill_exc(pj, r.hill_exc_exponent);
                }
                if self.net.inh[i][j] > 0 {
                    s += f64::from(self.net.inh[i][j]) * hill_inh(pj, r.hill_inh_exponent);
                }
            }
            dx[2 * i] = s;
            dx[2 * i + 1] = r.translation * m - r.protein_decay * p;
        }
    }
}
