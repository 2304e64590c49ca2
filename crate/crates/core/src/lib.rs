pub mod automata;
pub mod error;
pub mod encoding;
pub mod engine;
pub mod graphs;
pub mod json;
pub mod problems;
pub mod reps;

pub use error::{Error, Result};
