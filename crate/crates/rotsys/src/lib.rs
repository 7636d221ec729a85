//! Random orientable 2-cell embeddings of multigraphs.
//!
//! An orientable 2-cell embedding of a multigraph is determined, up to
//! equivalence, by a rotation system: a cyclic order of the incident darts
//! (half-edges) at every vertex. This crate works with embeddings entirely
//! through that combinatorial view:
//!
//! - [`multigraph`]: dart-based multigraphs with loops and parallel edges,
//!   plus a small text file format.
//! - [`rotation`]: rotation systems, face tracing as orbits of
//!   `sigma . alpha`, per-component genus via Euler's formula, and uniform
//!   direct sampling of rotation systems.
//! - [`enumeration`]: the exact brute-force oracle — iterate every rotation
//!   system and aggregate the face distribution and E[F] as a rational.
//! - [`process`]: the incremental pairing process with live partial-face
//!   bookkeeping, its greedy edge ordering, and per-edge closure counts.
//!   Every edge ordering samples embeddings uniformly.
//! - [`analytics`]: harmonic numbers, the closed-form dipole expectation,
//!   upper and lower bounds on E[F], Monte Carlo estimation with confidence
//!   intervals, and bound-compliance reports.
//! - [`generators`]: dipoles, dipole chains, triangle chains, bouquets and
//!   the usual small test graphs.
//! - [`cli`]: the `rotsys` binary's subcommands (`gen`, `exact`,
//!   `estimate`, `bounds`, `verify`).
//!
//! The runnable `examples/` directory is the best starting point; each file
//! exercises one capability end to end. Sampling is deterministic under a
//! fixed seed, including across worker counts.

pub mod analytics;
pub mod cli;
pub mod enumeration;
pub mod generators;
pub mod multigraph;
pub mod process;
pub mod rotation;

pub use analytics::{
    bound_corollary, bound_main, bound_simple, bound_stahl, bounds_report, dipole_expected_faces,
    harmonic, lower_bound_cycles, monte_carlo_expected_faces, BoundsReport, FaceValue, McEstimate,
};
pub use enumeration::{enumerate_rotations, exact_face_stats, ExactStats, DEFAULT_BUDGET};
pub use multigraph::{DartId, EdgeId, GraphError, MultiGraph, Vertex};
pub use process::{sample_embedding, ProcessState, ProcessTrace, Sampler, Strategy};
pub use rotation::{genus_from_counts, rotation_count, FaceCensus, RotationSystem};
