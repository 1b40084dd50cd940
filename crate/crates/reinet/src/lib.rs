//! File formats, reports and the command line for `reinet-core`.

pub mod cli;
pub mod dot;
pub mod format;
pub mod params;
pub mod partition;
pub mod report;
