use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exact_geom::{Point, Scalar};
use crate::scene_gen::Scene;
use crate::theorem_suite::{Status, SuiteReport};

pub const SCENE_FORMAT: &str = "brocard-scenes/1";
pub const REPORT_FORMAT: &str = "brocard-report/1";

/// How the scenes of a file were produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Random {
        seed: u64,
        count: usize,
        center: Point,
        radius: Scalar,
        max_numerator: u32,
        max_denominator: u32,
        strict_segments: bool,
    },
    Classical {
        params: Vec<Scalar>,
        center: Point,
        radius: Scalar,
    },
    Collapse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SceneFile {
    pub format: String,
    pub generator: Provenance,
    pub scenes: Vec<Scene>,
}

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format {found:?}, expected {expected:?}")]
    Format { found: String, expected: &'static str },
}

fn to_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("serializable");
    bytes.push(b'\n');
    bytes
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl SceneFile {
    pub fn new(generator: Provenance, scenes: Vec<Scene>) -> Self {
        SceneFile { format: SCENE_FORMAT.to_string(), generator, scenes }
    }

    /// Canonical bytes: pretty JSON with a trailing newline.
    pub fn to_bytes(&self) -> Vec<u8> {
        to_bytes(self)
    }

    /// Rejects unknown formats and any coordinate not in lowest terms.
    pub fn parse(bytes: &[u8]) -> Result<Self, FileError> {
        let file: SceneFile = serde_json::from_slice(bytes)?;
        if file.format != SCENE_FORMAT {
            return Err(FileError::Format { found: file.format, expected: SCENE_FORMAT });
        }
        Ok(file)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub scenes: usize,
    pub pass: usize,
    pub fail: usize,
    pub degenerate: usize,
    /// Scenes rejected before any check ran.
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SceneOutcome {
    Report(SuiteReport),
    Error { message: String, violations: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SceneEntry {
    pub index: usize,
    #[serde(flatten)]
    pub outcome: SceneOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format: String,
    pub tool_version: String,
    pub input_digest: String,
    pub summary: Summary,
    pub scenes: Vec<SceneEntry>,
}

impl ReportFile {
    /// Entries are sorted by scene index.
    pub fn new(input_digest: String, mut scenes: Vec<SceneEntry>) -> Self {
        scenes.sort_by_key(|e| e.index);
        let mut summary = Summary { scenes: scenes.len(), ..Summary::default() };
        for entry in &scenes {
            match &entry.outcome {
                SceneOutcome::Report(r) => {
                    summary.pass += r.pass;
                    summary.fail += r.fail;
                    summary.degenerate += r.degenerate;
                }
                SceneOutcome::Error { .. } => summary.errors += 1,
            }
        }
        ReportFile {
            format: REPORT_FORMAT.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest,
            summary,
            scenes,
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        to_bytes(self)
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, FileError> {
        let file: ReportFile = serde_json::from_slice(bytes)?;
        if file.format != REPORT_FORMAT {
            return Err(FileError::Format { found: file.format, expected: REPORT_FORMAT });
        }
        Ok(file)
    }

    /// Zero FAILs and no rejected scenes.
    pub fn clean(&self) -> bool {
        self.summary.fail == 0 && self.summary.errors == 0
    }

    /// `(scene index, check id, failing assertion labels)` for every FAIL.
    pub fn failures(&self) -> Vec<(usize, String, Vec<String>)> {
        let mut out = Vec::new();
        for entry in &self.scenes {
            if let SceneOutcome::Report(r) = &entry.outcome {
                for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
                    out.push((entry.index, c.check_id.clone(), c.failed().map(|a| a.label.clone()).collect()));
                }
            }
        }
        out
    }
}
