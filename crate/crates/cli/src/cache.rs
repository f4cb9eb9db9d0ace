//! On-disk report cache: one JSON file per job, named by a SHA-256 content
//! hash of the job, the generator choice and the artifact version.

use std::io::Write;
use std::path::{Path, PathBuf};

use jsum_core::theorems::Report;
use jsum_core::GeneratorChoice;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::jobs::Job;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct KeyMaterial<'a> {
    job: &'a Job,
    generator: String,
    version: &'a str,
}

pub fn cache_key(job: &Job, generator: GeneratorChoice) -> String {
    let material = KeyMaterial {
        job,
        generator: generator.to_string(),
        version: ARTIFACT_VERSION,
    };
    let bytes = serde_json::to_vec(&material).expect("job keys serialise");
    hex::encode(Sha256::digest(&bytes))
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self, CliError> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A previously stored result; unreadable or corrupt entries count as misses.
    pub fn load(&self, key: &str) -> Option<Vec<Report>> {
        let text = std::fs::read(self.path(key)).ok()?;
        serde_json::from_slice(&text).ok()
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place, so concurrent writers never expose a partial file.
    pub fn store(&self, key: &str, reports: &[Report]) -> Result<(), CliError> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(&serde_json::to_vec(reports)?)?;
        tmp.flush()?;
        tmp.persist(self.path(key))
            .map_err(|e| CliError::Io(e.error))?;
        Ok(())
    }
}
