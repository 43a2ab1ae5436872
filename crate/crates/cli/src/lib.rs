//! Library surface behind the `fracsq` binary.
//!
//! The binary itself only parses arguments and wires input to these
//! modules, so everything testable lives here: JSON classification reports
//! ([`report`]), deterministic PGM rendering of iterates ([`render`]), and
//! family sweeps with invariant cross-checks ([`scan`]).

pub mod render;
pub mod report;
pub mod scan;
