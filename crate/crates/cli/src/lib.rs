//! Command-line front end: load a JSON specification, run checks, render
//! reports.

pub mod commands;
pub mod spec;

pub use commands::{execute, Command, Outcome, RunOptions, TheoremCommand, VerifyKind};
pub use spec::{load_spec, load_spec_str, LoadError, Loaded, Object};
