//! Knot signatures from checkerboard surfaces.
//!
//! `knotform` reads knot diagrams (PD codes or braid words), builds the planar
//! map, its faces and checkerboard colorings, and computes the Goeritz matrix
//! and the correction term `μ` so that `σ(K) = sign(G) − μ(K)`. The same
//! signature is computed independently from a Seifert matrix of a braid
//! closure, and again from the linking matrix of the doubled black surface.
//! The `surfaces` module models the two S*-moves on (form, Euler number)
//! pairs, and `obstructions` turns signatures and Arf invariants into bounds
//! on unknotting, crosscap and non-orientable slice genus questions.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example seven_six`.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod forms;
pub mod goeritz;
pub mod obstructions;
pub mod seifert;
pub mod surfaces;
pub mod table;

pub use diagram::{Braid, Coloring, CrossingClass, CrossingType, FaceSet, KnotDiagram, Shade};
pub use error::{Error, Result};
pub use forms::{Inertia, IntMatrix, SymIntMatrix};
pub use goeritz::{alternating_signature, gl_signature, goeritz, knot_determinant, GoeritzData};
pub use seifert::{arf, seifert_matrix_from_braid, symmetrized_signature, SeifertMatrix};

pub use surfaces::{BandSurface, SurfaceState};
