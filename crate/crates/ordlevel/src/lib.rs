//! File formats, reports, parallel search and the command-line front-end
//! for `ordlevel-core`.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod random;
pub mod report;
pub mod search;
