//! Surface-embedded graph algorithms and ball-cover tooling.
//!
//! The crate is organised bottom-up: [`graph`] and [`embedding`] hold the
//! carriers, [`surgery`] and [`homology`] cut and test cycles, [`nonsep`] and
//! [`planarize`] build on them, while [`ballcover`] and [`treedecomp`] work on
//! plain graphs.

pub mod ballcover;
pub mod clique;
pub mod embedding;
pub mod error;
pub mod generate;
pub mod graph;
pub mod homology;
pub mod io;
pub mod named;
pub mod nonsep;
pub mod planarize;
pub mod surgery;
pub mod treedecomp;

pub use embedding::{Dart, Embedding, Face, FaceSet, FaceStep, Genus, Norms, Sign};
pub use error::{Error, Result};
pub use graph::Graph;
