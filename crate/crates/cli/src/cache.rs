//! Append-only evaluation cache for `Λ` values.
//!
//! Entries are keyed by field and by the argument rounded to a multiple of
//! 1e−14. The file holds one tab-separated entry per line:
//! `lambda <field> <re key> <im key> <re> <im>`. It is read once at start-up
//! and new entries are appended in one write when the command finishes.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use anyhow::{Context, Result};
use eisenzero::field::FieldSpec;
use eisenzero::zeta::{lambda, lambda_k};
use num_complex::Complex64;

pub const CACHE_DIR_ENV: &str = "EISENZERO_CACHE_DIR";
const FILE_NAME: &str = "lambda.tsv";
const KEY_SCALE: f64 = 1e14;

type Key = (FieldSpec, i64, i64);

fn key(field: FieldSpec, s: Complex64) -> Key {
    (field, (s.re * KEY_SCALE).round() as i64, (s.im * KEY_SCALE).round() as i64)
}

pub struct EvalCache {
    path: PathBuf,
    map: RwLock<HashMap<Key, Complex64>>,
    pending: Mutex<Vec<(Key, Complex64)>>,
}

impl EvalCache {
    /// Cache directory from the environment, or `eisenzero` under the
    /// system temporary directory.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("eisenzero"))
    }

    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        let path = dir.join(FILE_NAME);
        let mut map = HashMap::new();
        if path.exists() {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            // a torn final line from an interrupted writer is skipped
            for line in text.lines() {
                if let Some((k, v)) = parse_line(line) {
                    map.entry(k).or_insert(v);
                }
            }
        }
        Ok(Self { path, map: RwLock::new(map), pending: Mutex::new(Vec::new()) })
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn lambda(&self, field: FieldSpec, s: Complex64) -> eisenzero::Result<Complex64> {
        let k = key(field, s);
        if let Some(v) = self.map.read().expect("cache lock").get(&k) {
            return Ok(*v);
        }
        let v = if field.is_rational() { lambda(s)? } else { lambda_k(field, s)? };
        let mut map = self.map.write().expect("cache lock");
        if map.insert(k, v).is_none() {
            self.pending.lock().expect("cache lock").push((k, v));
        }
        Ok(v)
    }

    /// Appends entries computed since opening. Entries are sorted so the
    /// file contents do not depend on thread scheduling.
    pub fn flush(&self) -> Result<()> {
        let mut pending = std::mem::take(&mut *self.pending.lock().expect("cache lock"));
        if pending.is_empty() {
            return Ok(());
        }
        pending.sort_by_key(|((f, r, i), _)| (f.label(), *r, *i));
        let mut buf = String::new();
        for ((f, r, i), v) in pending {
            buf.push_str(&format!("lambda\t{}\t{r}\t{i}\t{}\t{}\n", f.label(), v.re, v.im));
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening {}", self.path.display()))?;
        file.write_all(buf.as_bytes())
            .with_context(|| format!("appending to {}", self.path.display()))
    }
}

fn parse_line(line: &str) -> Option<(Key, Complex64)> {
    let mut it = line.split('\t');
    if it.next()? != "lambda" {
        return None;
    }
    let field: FieldSpec = it.next()?.parse().ok()?;
    let r: i64 = it.next()?.parse().ok()?;
    let i: i64 = it.next()?.parse().ok()?;
    let re: f64 = it.next()?.parse().ok()?;
    let im: f64 = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some(((field, r, i), Complex64::new(re, im)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn persists_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let s = Complex64::new(1.0, 3.0);
        let f = FieldSpec::ImaginaryQuadratic(2);
        let v = {
            let c = EvalCache::open(dir.path()).unwrap();
            let v = c.lambda(f, s).unwrap();
            c.flush().unwrap();
            v
        };
        let c = EvalCache::open(dir.path()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.lambda(f, s).unwrap(), v);
        assert_eq!(c.lambda(f, s + 1e-16).unwrap(), v);
    }

    #[test]
    fn ignores_torn_lines() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join(FILE_NAME), "lambda\tQ\t100\t0\t1.5\t0\nlambda\tQ\t2").unwrap();
        assert_eq!(EvalCache::open(dir.path()).unwrap().len(), 1);
    }
}
