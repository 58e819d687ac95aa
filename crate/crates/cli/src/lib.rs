//! File formats and job execution behind the `f1hall` command-line tool.

pub mod format;
pub mod job;

pub use job::{run, Command, JobSpec, OutputFormat};
