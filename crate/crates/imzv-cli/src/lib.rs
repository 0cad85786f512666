//! Suite runners, report types, and JSON encodings behind the `imzv`
//! verification binary.

pub mod formats;
pub mod report;
pub mod suites;
