//! Exact cohomology of nilpotent radicals of Lie superalgebras.

pub mod cache;
pub mod cohomology;
pub mod error;
pub mod koszul;
pub mod linalg;
pub mod realize;
pub mod spectral;
pub mod supercore;
pub mod tables;

pub use error::{Error, Result};
