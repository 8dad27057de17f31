//! File formats, verification reports, the claim catalog and the
//! command-line driver built on `engel-core`.

pub mod catalog;
pub mod cli;
pub mod drivers;
pub mod io;
pub mod report;
