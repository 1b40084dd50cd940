//! Classical fixed-step fourth-order Runge-Kutta.

use alloc::vec;
use alloc::vec::Vec;

use super::DynamicsError;

/// Autonomous vector field on `R^dim`.
pub trait VectorField {
    fn dim(&self) -> usize;
    fn eval(&self, x: &[f64], dx: &mut [f64]);
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    pub dt: f64,
    pub t_end: f64,
    pub x0: Vec<f64>,
    /// Tolerance for synchrony checks.
    pub tolerance: f64,
}

impl SimConfig {
    pub fn validate(&self) -> Result<(), DynamicsError> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(DynamicsError::Config("dt must be positive"));
        }
        if !(self.t_end >= self.dt && self.t_end.is_finite()) {
            return Err(DynamicsError::Config("t_end must be at least dt"));
        }
        if self.tolerance.is_nan() || self.tolerance < 0.0 {
            return Err(DynamicsError::Config("tolerance must be nonnegative"));
        }
        Ok(())
    }

    /// Number of steps: `t_end / dt` rounded to the nearest integer.
    pub fn steps(&self) -> usize {
        (self.t_end / self.dt + 0.5) as usize
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn last(&self) -> &[f64] {
        self.states.last().expect("trajectory holds the initial state")
    }
}

/// Integrates from `cfg.x0` and records every step, the initial state
/// included. Times are `k * dt`.
pub fn integrate<F: VectorField + ?Sized>(field: &F, cfg: &SimConfig) -> Result<Trajectory, DynamicsError> {
    cfg.validate()?;
    let d = field.dim();
    if cfg.x0.len() != d {
        return Err(DynamicsError::Dimension { expected: d, got: cfg.x0.len() });
    }
    let steps = cfg.steps();
    let h = cfg.dt;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    let mut x = cfg.x0.clone();
    let (mut k1, mut k2, mut k3, mut k4, mut tmp) = (vec![0.0; d], vec![0.0; d], vec![0.0; d], vec![0.0; d], vec![0.0; d]);
    times.push(0.0);
    states.push(x.clone());
    for step in 1..=steps {
        field.eval(&x, &mut k1);
        for k in 0..d {
            tmp[k] = x[k] + 0.5 * h * k1[k];
        }
        field.eval(&tmp, &mut k2);
        for k in 0..d {
            tmp[k] = x[k] + 0.5 * h * k2[k];
        }
        field.eval(&tmp, &mut k3);
        for k in 0..d {
            tmp[k] = x[k] + h * k3[k];
        }
        field.eval(&tmp, &mut k4);
        for k in 0..d {
            x[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
        }
        let t = step as f64 * h;
        if x.iter().any(|v| !v.is_finite()) {
            return Err(DynamicsError::NonFinite { step, t });
        }
        times.push(t);
        states.push(x.clone());
    }
    Ok(Trajectory { times, states })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Linear(f64);

    impl VectorField for Linear {
        fn dim(&self) -> usize {
            1
        }
        fn eval(&self, x: &[f64], dx: &mut [f64]) {
            dx[0] = self.0 * x[0];
        }
    }

    struct Zero;

    impl VectorField for Zero {
        fn dim(&self) -> usize {
            2
        }
        fn eval(&self, _: &[f64], dx: &mut [f64]) {
            dx.fill(0.0);
        }
    }

    fn cfg(dt: f64, t_end: f64, x0: Vec<f64>) -> SimConfig {
        SimConfig { dt, t_end, x0, tolerance: 1e-9 }
    }

    // e^-1 to 20 digits
    const INV_E: f64 = 0.367_879_441_171_442_32;

    #[test]
    fn constant_field() {
        let tr = integrate(&Zero, &cfg(0.1, 1.0, vec![1.5, -2.0])).unwrap();
        assert_eq!(tr.states.len(), 11);
        assert!(tr.states.iter().all(|s| s == &[1.5, -2.0]));
    }

    #[test]
    fn exponential_decay() {
        let tr = integrate(&Linear(-1.0), &cfg(0.01, 1.0, vec![1.0])).unwrap();
        assert!((tr.last()[0] - INV_E).abs() < 1e-6);
        assert!((tr.times[100] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fourth_order() {
        let err = |dt| (integrate(&Linear(-1.0), &cfg(dt, 1.0, vec![1.0])).unwrap().last()[0] - INV_E).abs();
        let ratio = err(0.1) / err(0.05);
        assert!((8.0..=32.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn blow_up_is_reported() {
        let r = integrate(&Linear(1.0e3), &cfg(1.0, 200.0, vec![1.0]));
        assert!(matches!(r, Err(DynamicsError::NonFinite { .. })));
    }

    #[test]
    fn config_errors() {
        assert!(integrate(&Zero, &cfg(0.0, 1.0, vec![0.0, 0.0])).is_err());
        assert!(integrate(&Zero, &cfg(0.5, 0.1, vec![0.0, 0.0])).is_err());
        assert_eq!(
            integrate(&Zero, &cfg(0.1, 1.0, vec![0.0])),
            Err(DynamicsError::Dimension { expected: 2, got: 1 })
        );
    }
}
