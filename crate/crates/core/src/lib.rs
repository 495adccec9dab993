//! Linear programming bounds for connected regular graphs with few distinct
//! eigenvalues, built on the orthogonal polynomials of the homogeneous tree,
//! and certification of graphs that minimise the second-largest eigenvalue.

pub mod certify;
pub mod error;
pub mod families;
pub mod graph;
pub mod lpbound;
pub mod orthopoly;
pub mod scalar;
pub mod simplex;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::Graph;
