//! Cached polynomial results and reference tables as line records.
//!
//! The cache is a directory holding one append-only text file of records,
//! human-diffable and merge-friendly:
//!
//! ```text
//! <partition>|<ideal>|<quantity> : <c0 c1 ... cd> : <provenance> : <version> : <timestamp>
//! ```
//!
//! with an empty ideal column when the quantity has no ideal. A record never
//! overwrites one with different coefficients: a conflict aborts loudly,
//! since a silent overwrite could mask an oracle bug.
//!
//! Reference tables are a simpler grammar, one polynomial per line with `#`
//! comments:
//!
//! ```text
//! <partition> : <c0 c1 ... cd>
//! ```

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// How a cached polynomial was obtained.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Provenance {
    Symbolic,
    Interpolated { samples: Vec<u64> },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Symbolic => write!(f, "symbolic"),
            Provenance::Interpolated { samples } => {
                let list: Vec<String> = samples.iter().map(|p| p.to_string()).collect();
                write!(f, "interpolated({})", list.join(","))
            }
        }
    }
}

impl Provenance {
    fn parse(text: &str) -> Option<Self> {
        if text == "symbolic" {
            return Some(Provenance::Symbolic);
        }
        let inner = text.strip_prefix("interpolated(")?.strip_suffix(')')?;
        let samples = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.parse::<u64>().ok())
                .collect::<Option<Vec<u64>>>()?
        };
        Some(Provenance::Interpolated { samples })
    }
}

/// One cached polynomial, keyed by partition text, optional ideal boundary
/// text, and quantity name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComputationRecord {
    pub partition: String,
    pub ideal: Option<String>,
    pub quantity: String,
    pub poly: IntPoly,
    pub provenance: Provenance,
    pub version: String,
    pub timestamp: u64,
}

impl ComputationRecord {
    pub fn key(&self) -> String {
        record_key(&self.partition, self.ideal.as_deref(), &self.quantity)
    }

    fn to_line(&self) -> String {
        format!(
            "{} : {} : {} : {} : {}",
            self.key(),
            self.poly.ascending_text(),
            self.provenance,
            self.version,
            self.timestamp
        )
    }

    fn parse_line(line: &str, path: &Path, number: usize) -> Result<Self> {
        let bad = |message: &str| Error::MalformedRecord {
            path: path.display().to_string(),
            line: number,
            message: message.to_string(),
        };
        let fields: Vec<&str> = line.split(" : ").collect();
        if fields.len() != 5 {
            return Err(bad("expected 5 ` : `-separated fields"));
        }
        let key_parts: Vec<&str> = fields[0].split('|').collect();
        if key_parts.len() != 3 {
            return Err(bad("key must be partition|ideal|quantity"));
        }
        let poly = IntPoly::parse_ascending(fields[1])
            .map_err(|e| bad(&format!("bad coefficients: {e}")))?;
        let provenance = Provenance::parse(fields[2]).ok_or_else(|| bad("bad provenance"))?;
        let timestamp: u64 = fields[4].trim().parse().map_err(|_| bad("bad timestamp"))?;
        Ok(ComputationRecord {
            partition: key_parts[0].to_string(),
            ideal: (!key_parts[1].is_empty()).then(|| key_parts[1].to_string()),
            quantity: key_parts[2].to_string(),
            poly,
            provenance,
            version: fields[3].to_string(),
            timestamp,
        })
    }
}

pub fn record_key(partition: &str, ideal: Option<&str>, quantity: &str) -> String {
    format!("{partition}|{}|{quantity}", ideal.unwrap_or(""))
}

/// The append-only cache directory.
pub struct CacheStore {
    file: PathBuf,
    records: HashMap<String, ComputationRecord>,
}

impl CacheStore {
    /// Opens (creating if needed) the cache in `dir`, loading and checking
    /// every existing record.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)?;
        let file = dir.join("records.txt");
        let mut records = HashMap::new();
        if file.exists() {
            let text = fs::read_to_string(&file)?;
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let record = ComputationRecord::parse_line(line, &file, i + 1)?;
                let key = record.key();
                if let Some(existing) = records.get(&key) {
                    let existing: &ComputationRecord = existing;
                    if existing.poly != record.poly {
                        return Err(Error::CacheConflict {
                            key,
                            stored: existing.poly.ascending_text(),
                            new: record.poly.ascending_text(),
                        });
                    }
                } else {
                    records.insert(key, record);
                }
            }
        }
        Ok(CacheStore { file, records })
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(
        &self,
        partition: &str,
        ideal: Option<&str>,
        quantity: &str,
    ) -> Option<&ComputationRecord> {
        self.records.get(&record_key(partition, ideal, quantity))
    }

    /// Appends a record. Re-inserting identical coefficients is a no-op;
    /// different coefficients under the same key abort.
    pub fn insert(&mut self, record: ComputationRecord) -> Result<()> {
        let key = record.key();
        if let Some(existing) = self.records.get(&key) {
            if existing.poly != record.poly {
                return Err(Error::CacheConflict {
                    key,
                    stored: existing.poly.ascending_text(),
                    new: record.poly.ascending_text(),
                });
            }
            return Ok(());
        }
        let mut file = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.file)?;
        writeln!(file, "{}", record.to_line())?;
        self.records.insert(key, record);
        Ok(())
    }
}

/// Parses a reference table: `<partition> : c0 c1 ... cd` per line, `#`
/// comments and blank lines allowed.
pub fn parse_reference_table(path: &Path) -> Result<HashMap<String, IntPoly>> {
    let text = fs::read_to_string(path)?;
    let mut table = HashMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (partition, coeffs) = line.split_once(':').ok_or_else(|| Error::MalformedRecord {
            path: path.display().to_string(),
            line: i + 1,
            message: "expected `<partition> : <coefficients>`".to_string(),
        })?;
        let poly = IntPoly::parse_ascending(coeffs).map_err(|e| Error::MalformedRecord {
            path: path.display().to_string(),
            line: i + 1,
            message: e.to_string(),
        })?;
        table.insert(partition.trim().to_string(), poly);
    }
    Ok(table)
}

/// Seconds since the epoch, for record timestamps.
pub fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(quantity: &str, coeffs: &[i64]) -> ComputationRecord {
        ComputationRecord {
            partition: "3^1,1^1".to_string(),
            ideal: Some("1,0".to_string()),
            quantity: quantity.to_string(),
            poly: IntPoly::from_coeffs(coeffs.to_vec()),
            provenance: Provenance::Interpolated {
                samples: vec![2, 3, 5, 7],
            },
            version: "test".to_string(),
            timestamp: 12345,
        }
    }

    #[test]
    fn record_lines_roundtrip() {
        let r = record("n", &[-1, 0, 2]);
        let line = r.to_line();
        let back = ComputationRecord::parse_line(&line, Path::new("x"), 1).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.provenance.to_string(), "interpolated(2,3,5,7)");
    }

    #[test]
    fn cache_roundtrip_and_conflicts() {
        let dir = std::env::temp_dir().join(format!("orbit-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        {
            let mut store = CacheStore::open(&dir).unwrap();
            assert!(store.is_empty());
            store.insert(record("n", &[-1, 0, 2])).unwrap();
            store.insert(record("n1", &[-1, 2])).unwrap();
            // Identical re-insert is a no-op.
            store.insert(record("n", &[-1, 0, 2])).unwrap();
            assert_eq!(store.len(), 2);
        }
        {
            let mut store = CacheStore::open(&dir).unwrap();
            assert_eq!(store.len(), 2);
            let hit = store.get("3^1,1^1", Some("1,0"), "n").unwrap();
            assert_eq!(hit.poly, IntPoly::from_coeffs(vec![-1, 0, 2]));
            // Conflicting coefficients abort.
            assert!(matches!(
                store.insert(record("n", &[0, 0, 2])),
                Err(Error::CacheConflict { .. })
            ));
        }
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn reference_table_parsing() {
        let dir = std::env::temp_dir().join(format!("orbit-ref-test-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ref.txt");
        fs::write(
            &path,
            "# published values\n2^1 : 2 2 1\n3^1,1^1 : 4 7 5 1\n : 1\n",
        )
        .unwrap();
        let table = parse_reference_table(&path).unwrap();
        assert_eq!(table.len(), 3);
        assert_eq!(table["2^1"], IntPoly::from_coeffs(vec![2, 2, 1]));
        assert_eq!(table[""], IntPoly::one());
        fs::remove_dir_all(&dir).unwrap();
    }
}
