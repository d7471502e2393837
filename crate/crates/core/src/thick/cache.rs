//! On-disk copy of the generator memo table.
//!
//! Layout: a header line, one line of JSON mapping generator keys to element
//! text, and a `sha256` line over the JSON. Anything that does not check out
//! is ignored with a warning and recomputed on demand.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::generators::{cached_generators, seed_generator, GenKey};
use crate::error::{Error, Result};
use crate::klr::ThinElement;

const HEADER: &str = "thickcalc-generator-cache v1";

#[derive(Serialize, Deserialize)]
struct Entry {
    bottom: Vec<u8>,
    top: Vec<u8>,
    element: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Loaded(usize),
    Missing,
    /// The file was rejected; nothing was loaded.
    Corrupt(String),
}

fn checksum(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Writes every generator computed so far.
pub fn save_cache(path: &Path) -> Result<usize> {
    let entries: BTreeMap<String, Entry> = cached_generators()
        .into_iter()
        .map(|(k, e)| {
            let entry = Entry { bottom: e.bottom().to_vec(), top: e.top().to_vec(), element: e.to_string() };
            (k.to_string(), entry)
        })
        .collect();
    let body = serde_json::to_string(&entries).map_err(|e| Error::Cache(e.to_string()))?;
    let text = format!("{HEADER}\n{body}\nsha256 {}\n", checksum(&body));
    fs::write(path, text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    Ok(entries.len())
}

fn parse(text: &str) -> std::result::Result<Vec<(GenKey, ThinElement)>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err("unknown header".into());
    }
    let body = lines.next().ok_or("missing body")?;
    let sum = lines.next().and_then(|l| l.strip_prefix("sha256 ")).ok_or("missing checksum")?;
    if sum != checksum(body) {
        return Err("checksum mismatch".into());
    }
    let entries: BTreeMap<String, Entry> = serde_json::from_str(body).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(entries.len());
    for (k, e) in entries {
        let key: GenKey = k.parse().map_err(|e: Error| e.to_string())?;
        if key.bottom() != e.bottom {
            return Err(format!("entry {k} has the wrong boundary"));
        }
        let el = ThinElement::parse_with_boundary(&e.element, &e.bottom, &e.top).map_err(|e| e.to_string())?;
        out.push((key, el));
    }
    Ok(out)
}

/// Seeds the generator table from `path`.
pub fn load_cache(path: &Path) -> CacheStatus {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return CacheStatus::Missing,
        Err(e) => return corrupt(path, e.to_string()),
    };
    match parse(&text) {
        Ok(entries) => {
            let n = entries.len();
            for (k, e) in entries {
                seed_generator(k, e);
            }
            CacheStatus::Loaded(n)
        }
        Err(why) => corrupt(path, why),
    }
}

fn corrupt(path: &Path, why: String) -> CacheStatus {
    log::warn!("ignoring cache {}: {why}; generators will be recomputed", path.display());
    CacheStatus::Corrupt(why)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thick::generators::{generator, idempotent};

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gens.cache");
        assert_eq!(load_cache(&path), CacheStatus::Missing);
        idempotent(1, 3);
        generator(&GenKey::Dot(1, 1, crate::symfunc::Partition::new(vec![1, 1]).unwrap()));
        let n = save_cache(&path).unwrap();
        assert!(n >= 2);
        let text = fs::read_to_string(&path).unwrap();
        let parsed = parse(&text).unwrap();
        for (k, e) in &parsed {
            assert_eq!(*generator(k), *e, "{k}");
        }
        assert!(matches!(load_cache(&path), CacheStatus::Loaded(m) if m == parsed.len()));

        let tampered = text.replacen("e(1 1 1)", "e(1 1 2)", 1);
        fs::write(&path, tampered).unwrap();
        assert!(matches!(load_cache(&path), CacheStatus::Corrupt(ref w) if w == "checksum mismatch"));
        fs::write(&path, "garbage").unwrap();
        assert!(matches!(load_cache(&path), CacheStatus::Corrupt(_)));
    }
}
