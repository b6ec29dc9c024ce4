//! Optimal locally repairable codes via multigraph extremal problems.

pub mod codec;
pub mod constructions;
pub mod decider;
pub mod error;
pub mod extremal;
pub mod multigraph;
pub mod params;
pub mod random;
pub mod sweep;
pub mod tanner;

pub use error::{Error, Result};
pub use params::{derive_params, CodeParams};
