//! Library surface of the CLI: report serialization, the verify suites, and
//! the census renderer, shared between the binary and its integration tests.

pub mod census;
pub mod report;
pub mod verify;
