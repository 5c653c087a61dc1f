//! Cubulation of Artin groups: verdicts from labeled defining graphs,
//! explicit nonpositively curved cube complexes, cubical geometry on finite
//! CAT(0) cube complexes, and Garside word algebra.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod construct;
pub mod graph;
pub mod report;
pub mod toolkit;
pub mod word;
