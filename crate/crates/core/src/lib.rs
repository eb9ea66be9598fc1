pub mod analysis;
pub mod cli;
pub mod construction;
pub mod drawing;
pub mod error;
pub mod exact_solver;
pub mod graph;
pub mod heuristic_solver;
pub mod planarity;

pub use error::{Error, Result};
