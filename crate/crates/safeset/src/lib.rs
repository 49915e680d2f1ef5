//! File formats, structured reports, the scaling benchmark and the
//! command-line front end for `safeset-core`.

pub mod bench;
pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;
