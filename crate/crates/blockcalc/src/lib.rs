//! File formats, report rendering and the `blockcalc` command line on top of
//! [`blockcalc_core`].

pub mod cli;
pub mod datum;
mod error;
pub mod json;
pub mod report;

pub use datum::{parse_cocycle, parse_datum};
pub use error::InputError;
pub use report::{emit_report, ReportFormat};
