//! Library half of the `verify` command: configuration, suite sweeps and
//! report rendering.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{Cli, ConfigError, Suite, SuiteConfig};
pub use report::{emit, Format, Params, RelError, VerificationReport};
pub use suites::run_suite;
