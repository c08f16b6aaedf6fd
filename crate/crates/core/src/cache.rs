//! On-disk cache of reports keyed by spec text and engine version.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::report::{Report, ENGINE_VERSION};

pub const CACHE_DIR_ENV: &str = "CDLAT_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    /// Explicit directory, else `$CDLAT_CACHE_DIR`, else a directory under the system temp dir.
    pub fn locate(explicit: Option<&Path>) -> Cache {
        let dir = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| std::env::temp_dir().join("cdlat-cache"));
        Cache::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(spec: &str) -> String {
        let mut h = Sha256::new();
        h.update(spec.as_bytes());
        h.update([0]);
        h.update(ENGINE_VERSION.as_bytes());
        hex::encode(h.finalize())
    }

    pub fn path_for(&self, spec: &str) -> PathBuf {
        self.dir.join(format!("{}.json", Cache::key(spec)))
    }

    /// A corrupt or foreign entry counts as a miss.
    pub fn get(&self, spec: &str) -> Result<Option<Report>> {
        let path = self.path_for(spec);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::io(path, e)),
        };
        Ok(Report::from_json(&text).ok().filter(|r| r.spec == spec && r.engine_version == ENGINE_VERSION))
    }

    pub fn put(&self, spec: &str, report: &Report) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        let path = self.path_for(spec);
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        tmp.write_all(report.to_json()?.as_bytes()).map_err(|e| Error::io(tmp.path(), e))?;
        tmp.persist(&path).map_err(|e| Error::io(&path, e.error))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_depend_on_spec() {
        assert_ne!(Cache::key("D8"), Cache::key("Q8"));
        assert_eq!(Cache::key("D8").len(), 64);
    }

    #[test]
    fn miss_on_empty_dir() {
        let dir = tempfile::tempdir().unwrap();
        assert!(Cache::new(dir.path()).get("S3").unwrap().is_none());
    }

    #[test]
    fn corrupt_entry_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        fs::write(c.path_for("S3"), "{").unwrap();
        assert!(c.get("S3").unwrap().is_none());
    }
}
