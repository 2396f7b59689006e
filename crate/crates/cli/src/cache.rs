//! On-disk catalog cache: one `<graph>_n<k>.jsonl` file per graph size.

use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter};
use std::path::{Path, PathBuf};

use arithstruct::{GraphFamily, GraphKind};
use tempfile::NamedTempFile;

use crate::error::CliError;
use crate::records::{write_jsonl, CatalogRecord};

pub const CACHE_ENV: &str = "ARITH_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The `--cache` flag if given, else `$ARITH_CACHE_DIR`, else no cache.
    pub fn resolve(flag: Option<&Path>) -> Option<Cache> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_name(kind: GraphKind, n: usize) -> String {
        format!("{}_n{n}.jsonl", kind.name())
    }

    pub fn path(&self, kind: GraphKind, n: usize) -> PathBuf {
        self.dir.join(Self::file_name(kind, n))
    }

    /// Records from the cache file, or `None` if it does not exist.
    pub fn read(&self, family: GraphFamily) -> Result<Option<Vec<CatalogRecord>>, CliError> {
        let path = self.path(family.kind(), family.n());
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            out.push(serde_json::from_str(&line)?);
        }
        Ok(Some(out))
    }

    /// Replace the cache file atomically.
    pub fn write(&self, family: GraphFamily, records: &[CatalogRecord]) -> Result<PathBuf, CliError> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(family.kind(), family.n());
        let tmp = NamedTempFile::new_in(&self.dir)?;
        write_jsonl(BufWriter::new(tmp.as_file()), records)?;
        tmp.as_file().sync_all()?;
        tmp.persist(&path).map_err(|e| CliError::Io(e.error))?;
        Ok(path)
    }
}
