//! Reproducibility sidecars.
//!
//! Every data file written by the CLI gets a `*.manifest.json` neighbor
//! recording the tool version, the full command configuration, and a SHA-256
//! digest of the payload. The pipeline draws no random numbers, so feeding
//! the recorded config back through `--config` must reproduce the payload
//! byte for byte.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Payload layout for `run` and `trace`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DataFormat {
    Csv,
    Json,
}

/// The command and arguments that produced a data file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum CommandConfig {
    Run {
        steps: usize,
        dt0: Vec<f64>,
        classical: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lattice_halfwidth: Option<usize>,
        format: DataFormat,
    },
    Trace {
        site: i64,
        max_steps: usize,
        dt0: Vec<f64>,
        classical: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lattice_halfwidth: Option<usize>,
        format: DataFormat,
    },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OutputRecord {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Manifest {
    /// Version of the tool that wrote the file.
    pub version: String,
    pub timestamp: String,
    /// No randomness anywhere in the pipeline: the config pins the bytes.
    pub seed_free: bool,
    pub config: CommandConfig,
    pub outputs: Vec<OutputRecord>,
}

impl Manifest {
    pub fn for_output(config: CommandConfig, data_path: &Path, payload: &str) -> Manifest {
        Manifest {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            seed_free: true,
            config,
            outputs: vec![OutputRecord {
                path: data_path.display().to_string(),
                sha256: sha256_hex(payload.as_bytes()),
            }],
        }
    }

    /// Where the sidecar for a data file lives: the full data file name plus
    /// `.manifest.json`, so `a.csv` and `a.json` never share a sidecar.
    pub fn sidecar_path(data_path: &Path) -> PathBuf {
        let mut name = data_path
            .file_name()
            .map(|n| n.to_os_string())
            .unwrap_or_default();
        name.push(".manifest.json");
        data_path.with_file_name(name)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Extracts the config from a manifest file; a bare config object (no
/// surrounding manifest) is accepted too.
pub fn load_config(path: &Path) -> Result<CommandConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| format!("{} is not valid JSON: {e}", path.display()))?;
    let config_value = value.get("config").cloned().unwrap_or(value);
    serde_json::from_value(config_value)
        .map_err(|e| format!("{} holds no usable config: {e}", path.display()))
}
