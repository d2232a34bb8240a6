//! Verification suites shared by the `qsp` binary and the acceptance run.
//!
//! Each check compares two independently computed routes (or a computed
//! value against a known table) and returns an [`checks::Outcome`] listing
//! how many cases it looked at and what disagreed.

pub mod checks;
