//! SAT-backed model expansion for four problem families: shortest paths,
//! stemma consistency, minimum common supergraphs of partially labeled
//! graphs, and minimal DFA identification.

pub mod dfa;
pub mod encode;
pub mod report;
mod error;
pub mod sat;
pub mod shortest_path;
pub mod stemma;
pub mod supergraph;

pub use error::ParseError;
