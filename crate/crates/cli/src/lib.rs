//! Library surface of the verification front end: suite runners producing
//! machine-readable reports, and CSV tables of the headline results. The
//! `weilrep` binary is a thin wrapper over these.

pub mod report;
pub mod suites;
pub mod table;

pub use report::{CheckRecord, Status, SuiteParams, SuiteReport};
pub use suites::{run_suite, Backend, SuiteError, SuiteOptions, SUITE_NAMES};
pub use table::{emit_table, TableKind};
