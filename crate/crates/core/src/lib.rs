//! Approximation algorithms for vertex cover, connected vertex cover,
//! colouring and triangle packing whose error is bounded by the size of a
//! modulator to a tractable graph class.

pub mod bench;
pub mod check;
pub mod color;
pub mod cvc;
pub mod error;
pub mod exec;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pack;
pub mod recognize;
pub mod report;
pub mod solvers;
pub mod vc;
pub mod vertex_set;
pub mod weight;

pub use error::{Error, GraphError, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
pub use weight::{Weight, WeightFn};
