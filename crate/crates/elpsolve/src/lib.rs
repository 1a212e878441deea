//! Text front end for `elp-core`: the program reader, worldview reporting
//! and the `elpsolve` command-line driver.

pub mod cli;
pub mod parser;
pub mod report;

pub use parser::{parse_program, DiagnosticKind, ParseDiagnostic, Parsed, Severity};
