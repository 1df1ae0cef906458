//! Experiment runner for `charvar`: TOML manifests in, JSON reports and
//! CSV/JSON data files out.

pub mod experiments;
pub mod figure;
pub mod manifest;
pub mod report;
pub mod table;

pub use experiments::run;
pub use manifest::{Experiment, Format, Manifest, ManifestError, Output};
pub use report::{Check, Report};
pub use table::{Cell, Table};
