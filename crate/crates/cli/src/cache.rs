//! Content-addressed report cache.
//!
//! Entries are keyed by the SHA-256 of the canonical run configuration.
//! Each entry file starts with the SHA-256 of its payload, so tampering
//! or truncation is detected on read; corrupt entries are evicted and
//! reported as a miss. Writes go through a temp file and an atomic
//! rename, so concurrent runs never observe partial entries.

use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Honored when `--cache` is not given.
pub const CACHE_ENV_VAR: &str = "ALE_CURVES_CACHE";

pub fn resolve_cache_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{:02x}", b));
    }
    out
}

/// Cache key of a canonical configuration encoding.
pub fn config_key(canonical_config: &[u8]) -> String {
    sha256_hex(canonical_config)
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.entry", key))
}

/// Byte-identical payload of a prior run, or a miss. A hash mismatch
/// evicts the entry and returns a miss.
pub fn cache_get(dir: &Path, key: &str) -> Option<Vec<u8>> {
    let path = entry_path(dir, key);
    let data = fs::read(&path).ok()?;
    let header_len = 65; // 64 hex chars + newline
    if data.len() < header_len || data[64] != b'\n' {
        let _ = fs::remove_file(&path);
        return None;
    }
    let stored_hash = std::str::from_utf8(&data[..64]).ok()?;
    let payload = &data[header_len..];
    if sha256_hex(payload) != stored_hash {
        let _ = fs::remove_file(&path);
        return None;
    }
    Some(payload.to_vec())
}

pub fn cache_put(dir: &Path, key: &str, payload: &[u8]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(sha256_hex(payload).as_bytes())?;
    tmp.write_all(b"\n")?;
    tmp.write_all(payload)?;
    tmp.flush()?;
    tmp.persist(entry_path(dir, key)).map_err(|e| e.error)?;
    Ok(())
}
