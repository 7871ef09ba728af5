//! File formats, reports and the command-line front end for `twistor-core`.

pub mod acceptance;
pub mod cli;
pub mod document;
pub mod report;
