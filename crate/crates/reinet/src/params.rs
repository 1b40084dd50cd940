//! Rate parameter files.
//!
//! ```json
//! {"e": {"mrna_decay": 1.0, "hill_exc_exponent": 3}, "i": {}}
//! ```
//!
//! Missing fields take their defaults.

use reinet_core::dynamics::{GrnParams, RateParams};
use serde::Deserialize;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RateFile {
    mrna_decay: Option<f64>,
    translation: Option<f64>,
    protein_decay: Option<f64>,
    hill_inh_exponent: Option<u32>,
    hill_exc_exponent: Option<u32>,
}

impl RateFile {
    fn resolve(self) -> RateParams {
        let d = RateParams::default();
        RateParams {
            mrna_decay: self.mrna_decay.unwrap_or(d.mrna_decay),
            translation: self.translation.unwrap_or(d.translation),
            protein_decay: self.protein_decay.unwrap_or(d.protein_decay),
            hill_inh_exponent: self.hill_inh_exponent.unwrap_or(d.hill_inh_exponent),
            hill_exc_exponent: self.hill_exc_exponent.unwrap_or(d.hill_exc_exponent),
        }
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct ParamsFile {
    e: RateFile,
    i: RateFile,
}

pub fn parse_params(text: &str) -> Result<GrnParams, serde_json::Error> {
    let f: ParamsFile = serde_json::from_str(text)?;
    Ok(GrnParams { e: f.e.resolve(), i: f.i.resolve() })
}
