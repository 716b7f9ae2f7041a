//! Library surface of the CLI crate: the random-instance experiment harness
//! and the bound-table emitter, shared by the binary and the test suites.

pub mod experiment;
pub mod table;
