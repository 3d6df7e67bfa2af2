//! Library side of the `ordmix` command-line tool: distribution-spec
//! parsing, the verification suite, and output formatting shared by the
//! binary and the test targets.

pub mod output;
pub mod spec;
pub mod suite;
