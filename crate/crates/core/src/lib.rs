//! Spectral clustering on finite samples next to the integral operators it
//! approximates.
//!
//! The crate builds similarity matrices and graph Laplacians from seeded
//! samples, discretizes the limit operators on quadrature grids, extends
//! sample eigenvectors to functions on the whole support, flags eigenvalues
//! that fall into the range of the degree function, and runs the seeded
//! convergence studies behind the `speclab` binary.

pub mod cli;
pub mod diagnostics;
pub mod error;
pub mod experiments;
pub mod limit;
pub mod linalg;
pub mod model;
pub mod quadrature;
pub mod spectral;
pub mod svg;

pub use error::{Error, Result};
