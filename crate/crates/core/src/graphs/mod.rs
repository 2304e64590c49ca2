//! Simple undirected graphs, red-blue graphs and the graph operations that
//! token interchanges induce on decoded instances.

mod dense;
mod graph;
mod red_blue;

pub use dense::DenseGraph;
pub use graph::{Graph, GraphJson, Vertex};
pub use red_blue::{RbVertex, RedBlueGraph, RedBlueJson};
