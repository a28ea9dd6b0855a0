//! Exact equivariant Schubert calculus on weighted flag varieties.

pub mod cli;
pub mod config;
pub mod error;
pub mod exactpoly;
pub mod fixtures;
pub mod positivity;
pub mod rootdata;
pub mod schubert;
pub mod weighted;

pub use error::{Error, Result};
