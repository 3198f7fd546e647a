//! On-disk verdict cache keyed by (morphism digest, check, i, caps).
//!
//! Each verdict is one JSON file. Writes go to a unique temporary file that
//! is then renamed over the target, so readers never observe partial files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use super::{CheckKind, CheckVerdict};

pub const CACHE_ENV: &str = "MORPHIC_BWT_CACHE";

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub struct ResultsCache {
    dir: PathBuf,
}

impl ResultsCache {
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(ResultsCache { dir })
    }

    /// The cache named by `MORPHIC_BWT_CACHE`, if set.
    pub fn from_env() -> io::Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => ResultsCache::new(PathBuf::from(dir)).map(Some),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, digest: &str, check: CheckKind, i: Option<usize>, caps: &str) -> PathBuf {
        let i = i.map_or_else(|| "all".to_string(), |i| i.to_string());
        self.dir.join(format!("{digest}-{check}-{i}-{caps}.json"))
    }

    pub fn get(&self, digest: &str, check: CheckKind, i: Option<usize>, caps: &str) -> Option<CheckVerdict> {
        let text = fs::read_to_string(self.path(digest, check, i, caps)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put(&self, verdict: &CheckVerdict, caps: &str) -> io::Result<()> {
        let digest = verdict.digest.as_deref().unwrap_or("word");
        let target = self.path(digest, verdict.check, verdict.i, caps);
        let tmp = self.dir.join(format!(".tmp-{}-{}", std::process::id(), TMP_COUNTER.fetch_add(1, Ordering::Relaxed)));
        fs::write(&tmp, serde_json::to_vec(verdict)?)?;
        fs::rename(&tmp, &target)
    }
}
