//! Command-line front end and exact JSON/SVG persistence.
//!
//! Rationals are written as `"n/d"` strings in lowest terms, so files round
//! trip exactly and their bytes are deterministic.

mod commands;
mod files;
mod svg;

pub use commands::{
    cmd_classical, cmd_generate, cmd_render, cmd_verify, run, verify_scenes, Cli, CliError, Command,
    Exit,
};
pub use files::{
    sha256_hex, FileError, Provenance, ReportFile, SceneEntry, SceneFile, SceneOutcome, Summary,
    REPORT_FORMAT, SCENE_FORMAT,
};
pub use svg::{render_svg, RenderOptions, DEFAULT_DIGITS, LAYERS};
