//! Run manifests: what was run, with which caps, and digests of every input
//! and output. Wall time is recorded here and nowhere else.

use serde::Serialize;
use sha2::{Digest as _, Sha256};

#[derive(Debug, Clone, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

impl FileDigest {
    pub fn of(path: impl Into<String>, bytes: &[u8]) -> Self {
        FileDigest {
            path: path.into(),
            sha256: sha256_hex(bytes),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Caps {
    pub max_n: usize,
    pub max_nodes: Option<u64>,
    pub time_budget_s: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub seed: u64,
    pub threads: usize,
    pub caps: Caps,
    pub version: &'static str,
    pub exit_code: i32,
    pub wall_time_s: f64,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
