//! Randomized verification suite for the `gruss` crate: seeded instance
//! generation, suite execution, tightness scans, instance files and report
//! output. The `gruss` binary wraps these in a command-line interface.

pub mod checks;
pub mod config;
pub mod error;
pub mod instance;
pub mod io;
pub mod report;
pub mod rng;
pub mod scan;
pub mod suite;

pub use config::{FlavorChoice, SuiteConfig};
pub use error::{HarnessError, Result};
pub use instance::{random_instance, ModuleInstance};
pub use io::{load_instance, save_instance};
pub use report::{emit_report, ReportFormat, SectionReport, SuiteReport};
pub use scan::tightness_scan;
pub use suite::run_suite;
