//! Library surface of the `kappa` binary: argument types, command
//! implementations, the JSON report, and the seeded instance generator used
//! by the verification suites.

pub mod cli;
pub mod commands;
pub mod gen;
pub mod report;
