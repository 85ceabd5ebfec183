//! On-disk persistence of polynomial tables.
//!
//! A cache file is one JSON header line followed by one JSON record per line.
//! The header carries a SHA-256 checksum of the record lines.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use super::Family;
use crate::coxeter::{parse_labels, CoxeterSystem};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

pub const FORMAT: &str = "tiltc-polytable";
pub const VERSION: u32 = 1;

/// Entries keyed by canonical words of internal generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyTable {
    pub system: String,
    pub generators: usize,
    pub family: Family,
    pub inverse: bool,
    pub entries: BTreeMap<(Vec<u8>, Vec<u8>), LaurentPoly>,
    pub dirty: bool,
}

impl PolyTable {
    pub fn new(sys: &CoxeterSystem, family: Family, inverse: bool) -> Self {
        Self {
            system: sys.name().to_string(),
            generators: sys.rank(),
            family,
            inverse,
            entries: BTreeMap::new(),
            dirty: true,
        }
    }

    pub fn get(&self, x: &[u8], y: &[u8]) -> Option<&LaurentPoly> {
        self.entries.get(&(x.to_vec(), y.to_vec()))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    system: String,
    generators: usize,
    checksum: String,
}

/// One cache line.
#[derive(Debug, Serialize, Deserialize)]
pub struct TableRecord {
    pub family: String,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    pub x: String,
    pub y: String,
    pub poly: Value,
}

fn first_label(system: &str) -> usize {
    usize::from(!system.starts_with("aff"))
}

fn word_to_labels(word: &[u8], first: usize) -> String {
    let parts: Vec<String> = word
        .iter()
        .map(|&g| (g as usize + first).to_string())
        .collect();
    parts.join(" ")
}

fn labels_to_word(s: &str, first: usize, gens: usize) -> Result<Vec<u8>> {
    parse_labels(s)
        .map_err(|_| Error::Cache(format!("bad key {s:?}")))?
        .into_iter()
        .map(|l| {
            let g = l - first as i64;
            if g < 0 || g >= gens as i64 {
                Err(Error::Cache(format!(
                    "generator {l} out of range in key {s:?}"
                )))
            } else {
                Ok(g as u8)
            }
        })
        .collect()
}

/// Serializes tables of one system; tables must share the system id.
pub fn render(system: &str, generators: usize, tables: &[PolyTable]) -> Result<String> {
    let first = first_label(system);
    let mut body = String::new();
    for t in tables {
        if t.system != system || t.generators != generators {
            return Err(Error::Cache(format!(
                "table for {} mixed into file for {system}",
                t.system
            )));
        }
        for ((x, y), p) in &t.entries {
            let rec = TableRecord {
                family: t.family.tag(t.inverse).to_string(),
                i: t.family
                    .subset()
                    .iter()
                    .map(|&g| g as usize + first)
                    .collect(),
                x: word_to_labels(x, first),
                y: word_to_labels(y, first),
                poly: p.to_json(),
            };
            body.push_str(&serde_json::to_string(&rec).expect("record serializes"));
            body.push('\n');
        }
    }
    let header = Header {
        format: FORMAT.into(),
        version: VERSION,
        system: system.into(),
        generators,
        checksum: hex::encode(Sha256::digest(body.as_bytes())),
    };
    Ok(format!(
        "{}\n{body}",
        serde_json::to_string(&header).expect("header serializes")
    ))
}

pub fn save(path: &Path, system: &str, generators: usize, tables: &[PolyTable]) -> Result<()> {
    let text = render(system, generators, tables)?;
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parses a cache file, rejecting a different system id or a bad checksum.
pub fn parse(text: &str, system: &str, generators: usize) -> Result<Vec<PolyTable>> {
    let (head, body) = match text.split_once('\n') {
        Some((h, b)) => (h, b),
        None => (text, ""),
    };
    let header: Header =
        serde_json::from_str(head).map_err(|e| Error::Cache(format!("bad header: {e}")))?;
    if header.format != FORMAT || header.version != VERSION {
        return Err(Error::Cache(format!(
            "unsupported format {} version {}",
            header.format, header.version
        )));
    }
    if header.system != system || header.generators != generators {
        return Err(Error::Cache(format!(
            "cache is for {} ({} generators), expected {system} ({generators})",
            header.system, header.generators
        )));
    }
    if hex::encode(Sha256::digest(body.as_bytes())) != header.checksum {
        return Err(Error::Cache("checksum mismatch".into()));
    }
    let first = first_label(system);
    let mut tables: BTreeMap<(Family, bool), PolyTable> = BTreeMap::new();
    for line in body.lines() {
        let rec: TableRecord =
            serde_json::from_str(line).map_err(|e| Error::Cache(format!("bad record: {e}")))?;
        let i = rec
            .i
            .iter()
            .map(|&l| {
                let g = l as i64 - first as i64;
                if g < 0 || g >= generators as i64 {
                    Err(Error::Cache(format!("bad subset label {l}")))
                } else {
                    Ok(g as u8)
                }
            })
            .collect::<Result<Vec<u8>>>()?;
        let (family, inverse) = Family::from_tag(&rec.family, i)?;
        let x = labels_to_word(&rec.x, first, generators)?;
        let y = labels_to_word(&rec.y, first, generators)?;
        let p = LaurentPoly::from_json(&rec.poly).or_else(|_| {
            // explicit zeros are stored as empty objects
            if rec.poly.as_object().is_some_and(|o| o.is_empty()) {
                Ok(LaurentPoly::zero())
            } else {
                Err(Error::Cache(format!("bad polynomial {}", rec.poly)))
            }
        })?;
        let t = tables
            .entry((family.clone(), inverse))
            .or_insert_with(|| PolyTable {
                system: system.to_string(),
                generators,
                family,
                inverse,
                entries: BTreeMap::new(),
                dirty: false,
            });
        t.entries.insert((x, y), p);
    }
    Ok(tables.into_values().collect())
}

pub fn load(path: &Path, system: &str, generators: usize) -> Result<Vec<PolyTable>> {
    let text = fs::read_to_string(path)?;
    parse(&text, system, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::KlEngine;

    #[test]
    fn roundtrip_s4() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let eng = KlEngine::new(sys.clone());
        for y in sys.elements_up_to(10).elements {
            eng.kl_column(&y);
        }
        let tables = eng.export_tables();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a3.tbl");
        save(&path, "A3", 3, &tables).unwrap();
        let back = load(&path, "A3", 3).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].entries, tables[0].entries);
        assert!(matches!(load(&path, "B3", 3), Err(Error::Cache(_))));
        let text = fs::read_to_string(&path)
            .unwrap()
            .replace("\"1\":1", "\"1\":2");
        assert!(parse(&text, "A3", 3).is_err());
    }

    #[test]
    fn empty_table() {
        let text = render("A2", 2, &[]).unwrap();
        assert!(parse(&text, "A2", 2).unwrap().is_empty());
    }

    #[test]
    fn bad_keys_rejected() {
        let body = "{\"family\":\"h\",\"I\":[],\"x\":\"9\",\"y\":\"\",\"poly\":{\"0\":1}}\n";
        let header = format!(
            "{{\"format\":\"{FORMAT}\",\"version\":1,\"system\":\"A2\",\"generators\":2,\"checksum\":\"{}\"}}",
            hex::encode(Sha256::digest(body.as_bytes()))
        );
        assert!(parse(&format!("{header}\n{body}"), "A2", 2).is_err());
        let body = body.replace("\"h\"", "\"q\"").replace("9", "1");
        let header = format!(
            "{{\"format\":\"{FORMAT}\",\"version\":1,\"system\":\"A2\",\"generators\":2,\"checksum\":\"{}\"}}",
            hex::encode(Sha256::digest(body.as_bytes()))
        );
        assert!(parse(&format!("{header}\n{body}"), "A2", 2).is_err());
    }
}
