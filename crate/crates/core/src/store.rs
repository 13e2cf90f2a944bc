//! On-disk cache of computed artifacts.
//!
//! One file per entry, named by the SHA-256 of the key text. The file holds
//! a version line, a checksum line over key and payload, then the payload.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "EQSCHUBERT_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArtifactKind {
    Sigma,
    DoubleSchubert,
    Localization,
    StructConst,
}

impl fmt::Display for ArtifactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArtifactKind::Sigma => "sigma",
            ArtifactKind::DoubleSchubert => "double-schubert",
            ArtifactKind::Localization => "localization",
            ArtifactKind::StructConst => "structconst",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub schema_version: u32,
    pub cartan_type: String,
    pub kind: ArtifactKind,
    /// Canonical words plus any parameters that change the result.
    pub words: Vec<String>,
}

impl CacheKey {
    pub fn new(cartan_type: impl Into<String>, kind: ArtifactKind, words: Vec<String>) -> Self {
        CacheKey { schema_version: SCHEMA_VERSION, cartan_type: cartan_type.into(), kind, words }
    }

    pub fn canonical_text(&self) -> String {
        format!("v{}\n{}\n{}\n{}", self.schema_version, self.cartan_type, self.kind, self.words.join(" "))
    }

    fn file_name(&self) -> String {
        format!("{}.entry", hex::encode(Sha256::digest(self.canonical_text().as_bytes())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    /// The entry exists but fails its checksum or header; treat as a miss.
    Corrupt(PathBuf),
}

#[derive(Clone, Debug)]
pub struct Store {
    dir: PathBuf,
}

fn checksum(key: &CacheKey, payload: &str) -> String {
    let mut h = Sha256::new();
    h.update(key.canonical_text().as_bytes());
    h.update(b"\0");
    h.update(payload.as_bytes());
    hex::encode(h.finalize())
}

fn header(version: u32) -> String {
    format!("eqschubert-cache v{version}")
}

impl Store {
    /// Opens (creating if needed) a store rooted at `dir`.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Store> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Store { dir })
    }

    /// `$EQSCHUBERT_CACHE_DIR`, else `$XDG_CACHE_HOME/eqschubert`, else
    /// `$HOME/.cache/eqschubert`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(d) = std::env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
            return Some(PathBuf::from(d));
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
            return Some(PathBuf::from(d).join("eqschubert"));
        }
        std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("eqschubert"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    pub fn get(&self, key: &CacheKey) -> Lookup {
        let path = self.path_for(key);
        let Ok(text) = fs::read_to_string(&path) else { return Lookup::Miss };
        let mut parts = text.splitn(3, '\n');
        let (Some(head), Some(sum), Some(payload)) = (parts.next(), parts.next(), parts.next()) else {
            return Lookup::Corrupt(path);
        };
        if head != header(key.schema_version) || sum != checksum(key, payload) {
            return Lookup::Corrupt(path);
        }
        Lookup::Hit(payload.to_string())
    }

    /// Writes atomically: a temporary file in the same directory is renamed
    /// over the destination.
    pub fn put(&self, key: &CacheKey, payload: &str) -> Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        write!(tmp, "{}\n{}\n{}", header(key.schema_version), checksum(key, payload), payload)?;
        tmp.flush()?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }

    /// Returns the cached payload, or computes, stores and returns it.
    /// Corrupt entries are recomputed and overwritten.
    pub fn get_or_compute(&self, key: &CacheKey, compute: impl FnOnce() -> Result<String>) -> Result<String> {
        if let Lookup::Hit(p) = self.get(key) {
            return Ok(p);
        }
        let payload = compute()?;
        self.put(key, &payload)?;
        Ok(payload)
    }

    /// Removes every entry file.
    pub fn purge(&self) -> Result<usize> {
        let mut removed = 0;
        for entry in fs::read_dir(&self.dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "entry") {
                fs::remove_file(path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key() -> CacheKey {
        CacheKey::new("A2", ArtifactKind::DoubleSchubert, vec!["s1s2".into()])
    }

    #[test]
    fn round_trip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        assert_eq!(store.get(&key()), Lookup::Miss);
        let payload = "t1*x1\nsecond line\n";
        store.put(&key(), payload).unwrap();
        assert_eq!(store.get(&key()), Lookup::Hit(payload.to_string()));
        let mut bumped = key();
        bumped.schema_version += 1;
        assert_eq!(store.get(&bumped), Lookup::Miss);
        assert_eq!(store.purge().unwrap(), 1);
        assert_eq!(store.get(&key()), Lookup::Miss);
    }

    #[test]
    fn corruption_detected() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put(&key(), "payload").unwrap();
        let path = store.path_for(&key());
        let text = fs::read_to_string(&path).unwrap().replace("payload", "poyload");
        fs::write(&path, text).unwrap();
        assert!(matches!(store.get(&key()), Lookup::Corrupt(_)));
        let v = store.get_or_compute(&key(), || Ok("payload".into())).unwrap();
        assert_eq!(v, "payload");
        assert_eq!(store.get(&key()), Lookup::Hit("payload".into()));
    }
}
