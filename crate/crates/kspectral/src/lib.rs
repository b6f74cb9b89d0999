//! K-spectral-set bounds for matrix functional calculus.

pub mod blaschke;
pub mod cauchykit;
pub mod cli;
pub mod error;
pub mod jordanoracle;
pub mod matkernel;
pub mod regions;
pub mod spectralset;
pub mod verify;

pub use error::{Error, Result};
