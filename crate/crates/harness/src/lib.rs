//! Verification harness for `dickson-core`: suite configuration, parameter
//! sampling, batch residual runs, reports and convergence tables.

pub mod config;
pub mod eval;
pub mod parse;
pub mod report;
pub mod sampling;
pub mod suite;
pub mod table;

mod error;

pub use config::SuiteConfig;
pub use error::HarnessError;
pub use suite::{evaluate_suite, run_suite, RunSummary};
pub use table::{convergence_table, table_csv, TableRow};
