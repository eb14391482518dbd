//! A symbolic tau-tilting workbench for Nakayama algebras.
//!
//! The crate computes, exactly and at desk scale: Hom spaces of uniserial
//! modules in two independent models (combinatorial windows and matrix
//! representations over a prime field), Bongartz and co-Bongartz
//! completions, tau-perpendicular (Jasso) reductions with their object
//! bijections, the E/V maps, the bijection between ordered tau-rigid
//! pairs and signed tau-exceptional sequences, TF-orders, the six-case
//! left mutation of TF-ordered modules with its orbits and mutation
//! graph, and the punctured-disk arc model.

pub mod algebra;
pub mod disk;
pub mod fp;
pub mod mutation;
pub mod named;
pub mod oracle;
pub mod reduction;
pub mod sequences;
pub mod tilting;

pub use algebra::{Algebra, Component, IndModule, Pair, QuiverKind, SignedInd, Window};
