//! An append-only file of memoized integer results.
//!
//! The first line records the engine version; a file written by another
//! version is discarded.  Every further line is `kind;params;value` with an
//! integer value.  Lines that do not parse are skipped with a warning.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

/// Header identifying the engine version that wrote the file.
pub const CACHE_HEADER: &str = concat!("# cuspquot cache, engine ", env!("CARGO_PKG_VERSION"));

/// File name inside the cache directory.
pub const CACHE_FILE: &str = "counts.txt";

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "CUSPQUOT_CACHE_DIR";

struct State {
    entries: BTreeMap<(String, String), u64>,
    writer: Option<File>,
}

/// A memo table, optionally backed by a file.
pub struct Cache {
    path: Option<PathBuf>,
    state: Mutex<State>,
    warnings: Vec<String>,
}

impl Cache {
    /// A cache that lives only in memory.
    pub fn in_memory() -> Self {
        Self {
            path: None,
            state: Mutex::new(State { entries: BTreeMap::new(), writer: None }),
            warnings: Vec::new(),
        }
    }

    /// `$CUSPQUOT_CACHE_DIR`, else `$HOME/.cache/cuspquot`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
            return Some(PathBuf::from(dir));
        }
        std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache").join("cuspquot"))
    }

    /// Opens (creating if needed) the cache file in `dir`.
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = BTreeMap::new();
        let mut warnings = Vec::new();
        let mut valid = false;
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            let mut lines = reader.lines();
            match lines.next().transpose()? {
                Some(h) if h == CACHE_HEADER => {
                    valid = true;
                    for (no, line) in lines.enumerate() {
                        let line = line?;
                        match parse_line(&line) {
                            Some((kind, params, value)) => {
                                entries.insert((kind, params), value);
                            }
                            None => warnings.push(format!(
                                "{}:{}: ignoring malformed cache line `{line}`",
                                path.display(),
                                no + 2
                            )),
                        }
                    }
                }
                Some(h) => warnings.push(format!(
                    "{}: written by a different engine (`{h}`); discarding",
                    path.display()
                )),
                None => {}
            }
        }
        let writer = if valid {
            OpenOptions::new().append(true).open(&path)?
        } else {
            let mut f = File::create(&path)?;
            writeln!(f, "{CACHE_HEADER}")?;
            f
        };
        Ok(Self {
            path: Some(path),
            state: Mutex::new(State { entries, writer: Some(writer) }),
            warnings,
        })
    }

    /// The backing file, if any.
    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// Problems found while loading.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Number of memoized values.
    pub fn len(&self) -> usize {
        self.state.lock().expect("cache lock").entries.len()
    }

    /// Whether nothing is memoized.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The memoized value for `(kind, params)`.
    pub fn get(&self, kind: &str, params: &str) -> Option<u64> {
        self.state.lock().expect("cache lock").entries.get(&(kind.into(), params.into())).copied()
    }

    /// Records a value, appending it to the file.
    pub fn insert(&self, kind: &str, params: &str, value: u64) -> io::Result<()> {
        assert!(
            !kind.contains([';', '\n']) && !params.contains([';', '\n']),
            "cache keys must not contain `;` or newlines"
        );
        let mut state = self.state.lock().expect("cache lock");
        if state.entries.insert((kind.into(), params.into()), value) == Some(value) {
            return Ok(());
        }
        if let Some(w) = state.writer.as_mut() {
            writeln!(w, "{kind};{params};{value}")?;
            w.flush()?;
        }
        Ok(())
    }

    /// Returns the memoized value or computes and records it.
    pub fn get_or_compute<E: From<io::Error>>(
        &self,
        kind: &str,
        params: &str,
        compute: impl FnOnce() -> Result<u64, E>,
    ) -> Result<u64, E> {
        if let Some(v) = self.get(kind, params) {
            return Ok(v);
        }
        let v = compute()?;
        self.insert(kind, params, v)?;
        Ok(v)
    }
}

fn parse_line(line: &str) -> Option<(String, String, u64)> {
    let mut parts = line.split(';');
    let (kind, params, value) = (parts.next()?, parts.next()?, parts.next()?);
    if parts.next().is_some() || kind.is_empty() {
        return None;
    }
    Some((kind.to_string(), params.to_string(), value.trim().parse().ok()?))
}
