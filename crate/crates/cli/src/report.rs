//! Report envelope shared by every subcommand.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use surfcover_core::io::EmbeddingSpec;

/// One audited bound: the claimed limit next to the observed value.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub claim: String,
    pub bound: f64,
    pub observed: f64,
    pub holds: bool,
}

impl Check {
    pub fn new(
        name: &'static str,
        claim: impl Into<String>,
        bound: f64,
        observed: f64,
        holds: bool,
    ) -> Self {
        Self {
            name,
            claim: claim.into(),
            bound,
            observed,
            holds,
        }
    }

    /// `observed <= bound` on integers.
    pub fn at_most(
        name: &'static str,
        claim: impl Into<String>,
        bound: usize,
        observed: usize,
    ) -> Self {
        Self::new(
            name,
            claim,
            bound as f64,
            observed as f64,
            observed <= bound,
        )
    }

    pub fn equal(
        name: &'static str,
        claim: impl Into<String>,
        expected: i64,
        observed: i64,
    ) -> Self {
        Self::new(
            name,
            claim,
            expected as f64,
            observed as f64,
            expected == observed,
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub input_sha256: String,
    pub seed: Option<u64>,
    pub version: &'static str,
    /// Hash of everything in the report except the timestamp.
    pub report_sha256: String,
    pub timestamp: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: &'static str,
    /// Generated instances are written at the top level so the output is
    /// itself a valid input file.
    #[serde(flatten)]
    pub instance: Option<EmbeddingSpec>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    pub audit: Vec<Check>,
    pub provenance: Provenance,
}

impl Report {
    pub fn new(
        command: &'static str,
        instance: Option<EmbeddingSpec>,
        result: Value,
        audit: Vec<Check>,
        input_sha256: String,
        seed: Option<u64>,
    ) -> Self {
        let version = env!("CARGO_PKG_VERSION");
        let body = serde_json::json!({
            "command": command,
            "instance": instance,
            "result": result,
            "audit": audit,
            "input_sha256": input_sha256,
            "seed": seed,
            "version": version,
        });
        let report_sha256 = hex::encode(Sha256::digest(body.to_string().as_bytes()));
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            command,
            instance,
            result,
            audit,
            provenance: Provenance {
                input_sha256,
                seed,
                version,
                report_sha256,
                timestamp,
            },
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.audit.iter().filter(|c| !c.holds)
    }
}

/// Running hash over every input the command reads.
#[derive(Default)]
pub struct InputHash(Sha256);

impl InputHash {
    pub fn update(&mut self, bytes: &[u8]) {
        self.0.update((bytes.len() as u64).to_le_bytes());
        self.0.update(bytes);
    }

    pub fn finish(self) -> String {
        hex::encode(self.0.finalize())
    }
}
