//! Persistent class-number cache: line-oriented "D h" text sorted by |D|,
//! rewritten atomically. Values are deterministic, so concurrent reads are
//! benign; writes go through a single mutex and a whole-file replace.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;

use weilcensus_core::census::{verified_class_number, ClassNumberSource};
use weilcensus_core::Result;

pub struct ClassNumberCache {
    path: Option<PathBuf>,
    entries: Mutex<BTreeMap<i64, u64>>,
}

impl ClassNumberCache {
    /// Load from `path` (when given), skipping corrupt lines with a warning.
    pub fn open(path: Option<PathBuf>) -> Self {
        let mut entries = BTreeMap::new();
        if let Some(p) = &path {
            if let Ok(text) = std::fs::read_to_string(p) {
                for (lineno, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() {
                        continue;
                    }
                    let mut parts = line.split_whitespace();
                    let parsed = (|| {
                        let d: i64 = parts.next()?.parse().ok()?;
                        let h: u64 = parts.next()?.parse().ok()?;
                        if parts.next().is_some() || h == 0 {
                            return None;
                        }
                        Some((d, h))
                    })();
                    match parsed {
                        Some((d, h)) => {
                            entries.insert(d, h);
                        }
                        None => {
                            eprintln!(
                                "warning: ignoring corrupt cache line {} in {}: {line:?}",
                                lineno + 1,
                                p.display()
                            );
                        }
                    }
                }
            }
        }
        ClassNumberCache {
            path,
            entries: Mutex::new(entries),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }


    /// Re-verify every entry against both class-number routes, correcting
    /// mismatches with a warning. Returns the number of corrections.
    pub fn verify_all(&self) -> Result<usize> {
        let mut entries = self.entries.lock().unwrap();
        let mut corrections = 0;
        for (d, h) in entries.iter_mut() {
            let truth = verified_class_number(*d)?;
            if *h != truth {
                eprintln!(
                    "warning: cache entry {d} {h} failed verification, corrected to {truth}"
                );
                *h = truth;
                corrections += 1;
            }
        }
        Ok(corrections)
    }

    /// Write back as "D h" lines sorted by |D| (ties: positive... D < 0
    /// always here), via temp file + rename.
    pub fn save(&self) -> std::io::Result<()> {
        let path = match &self.path {
            Some(p) => p,
            None => return Ok(()),
        };
        let entries = self.entries.lock().unwrap();
        let mut rows: Vec<(&i64, &u64)> = entries.iter().collect();
        rows.sort_by_key(|(d, _)| d.unsigned_abs());
        let mut text = String::new();
        for (d, h) in rows {
            text.push_str(&format!("{d} {h}\n"));
        }
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)
    }
}

impl ClassNumberSource for ClassNumberCache {
    fn class_number(&self, d: i64) -> Result<u64> {
        if let Some(h) = self.entries.lock().unwrap().get(&d) {
            return Ok(*h);
        }
        let h = verified_class_number(d)?;
        self.entries.lock().unwrap().insert(d, h);
        Ok(h)
    }
}
