//! Restricted excitatory-inhibitory (REI) coupled-cell networks.
//!
//! - [`network`]: the data model, validity, duality, canonical relabeling.
//! - [`linalg`]: exact rational row reduction and span keys.
//! - [`equiv`]: ODE-equivalence, class keys, minimal representatives.
//! - [`enumeration`]: the 3-node parametrisation, supports, catalogs and
//!   the class census.
//! - [`synchrony`]: balanced partitions and quotients.
//! - [`dynamics`]: admissible ODE skeletons and the Hill-function model.
//!
//! Everything here is `no_std` with `alloc`.

#![no_std]
extern crate alloc;

pub mod dynamics;
pub mod enumeration;
pub mod equiv;
pub mod linalg;
pub mod network;
pub mod synchrony;

pub use enumeration::{MultiplicityVector, Param, SupportPattern};
pub use equiv::{minimal_representative, ode_class_key, ode_equivalent, MinimalForm, OdeClassKey};
pub use linalg::{span_key, SpanKey};
pub use network::{NodeType, ReiNetwork};
pub use synchrony::Partition;
