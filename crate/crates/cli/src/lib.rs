//! File formats, report rendering and orchestration for the `linshap`
//! command-line tool. The algorithms live in `linshap-core`.

pub mod error;
pub mod parallel;
pub mod random;
pub mod run;
pub mod spec_file;

pub use error::CliError;
pub use run::{Options, Outcome};
