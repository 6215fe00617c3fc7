//! Exact construction and verification of the generalized Brocard
//! configuration: the Miquel points of two triangles inscribed in a common
//! circle, the circle through them, and the generalized Brocard triangles.

// Errors carry exact points for diagnostics.
#![allow(clippy::result_large_err)]

pub mod exact_geom;
pub mod scene_gen;
pub mod brocard_pipeline;
pub mod theorem_suite;
pub mod cli_io;
