//! Exact verification of Hopf-algebraic structures given by structure constants.

pub mod algebroid;
pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod hopf;
pub mod report;
pub mod twist;
pub mod yd;

pub use error::{Error, Result};
pub use report::{Check, Report, Witness};
