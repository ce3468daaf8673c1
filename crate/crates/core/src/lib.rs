//! Decision procedures, witnesses and verification harnesses for wheel
//! configurations inside disc-planar separations of small graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: dense bitset graphs, graph6 / JSON I/O, edits, disjoint paths,
//!   connectivity and canonical labelling.
//! * [`embedding`]: rotation systems, planarity, disc-planarity with a
//!   prescribed boundary, faces and cofaciality.
//! * [`separations`]: k-separations and the disc-planar-side filter.
//! * [`wheels`]: wheels cut out of disc embeddings, goodness and extendability.
//! * [`linkage`]: the two-disjoint-paths dichotomy with witnesses.
//! * [`subdivision`]: K5-subdivision certificates (search, assembly, verification).
//! * [`coloring`]: exact 4-colouring and greedy extension.
//! * [`obstructions`]: the derived catalogue of good-wheel obstructions.
//! * [`harness`]: corpora, lemma-shaped verification suites and reports.

pub mod coloring;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod harness;
pub mod linkage;
pub mod obstructions;
pub mod separations;
pub mod subdivision;
pub mod wheels;

pub use error::{Error, Result};
pub use graph::{Graph, PathSystem, VertexSet};
