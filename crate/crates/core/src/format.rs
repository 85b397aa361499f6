//! The family JSON format.
//!
//! ```json
//! {"format_version":1,"universe":["1","2","3"],"sets":[[0,1],[1,2]],
//!  "meta":{"class":"level","params":{"n":3,"r":2}}}
//! ```
//!
//! Indices are 0-based positions in `universe`, ascending within a set, and
//! sets appear in canonical order. Saving a loaded canonical family
//! reproduces the input byte for byte.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::{FamilyMeta, GroundSet, MemberSet, SetFamily};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct MetaDoc {
    class: String,
    #[serde(default)]
    params: BTreeMap<String, Value>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    #[serde(default = "default_version")]
    format_version: u32,
    universe: Vec<String>,
    sets: Vec<Vec<usize>>,
    #[serde(default)]
    meta: Option<MetaDoc>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

/// A family read from JSON with the number of duplicate sets collapsed.
#[derive(Debug)]
pub struct LoadedFamily {
    pub family: SetFamily,
    pub duplicates: usize,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

pub fn family_from_str(text: &str) -> Result<LoadedFamily> {
    let doc: FamilyDoc = serde_json::from_str(text).map_err(|e| {
        parse_err(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    if doc.format_version != FORMAT_VERSION {
        return Err(parse_err(
            "format_version",
            format!("unsupported version {}", doc.format_version),
        ));
    }
    let ground = GroundSet::new(doc.universe).map_err(|e| match e {
        Error::Encoding(m) => parse_err("universe", m),
        other => other,
    })?;
    let width = ground.size();
    let mut members = Vec::with_capacity(doc.sets.len());
    for (i, set) in doc.sets.iter().enumerate() {
        for (j, &e) in set.iter().enumerate() {
            if e >= width {
                return Err(parse_err(
                    format!("sets[{i}][{j}]"),
                    format!("index {e} out of range for universe of size {width}"),
                ));
            }
        }
        members.push(MemberSet::from_indices(width, set)?);
    }
    let meta = match doc.meta {
        Some(m) => FamilyMeta {
            class: m.class,
            params: m.params,
        },
        None => FamilyMeta::custom(),
    };
    let (family, duplicates) = SetFamily::from_members(Arc::new(ground), members, meta)?;
    Ok(LoadedFamily { family, duplicates })
}

pub fn family_to_string(family: &SetFamily) -> String {
    let doc = FamilyDoc {
        format_version: FORMAT_VERSION,
        universe: family.ground().labels().to_vec(),
        sets: family.members().iter().map(|m| m.indices()).collect(),
        meta: Some(MetaDoc {
            class: family.meta().class.clone(),
            params: family.meta().params.clone(),
        }),
    };
    let mut s = serde_json::to_string(&doc).expect("family document always serializes");
    s.push('\n');
    s
}

pub fn load_family(path: &Path) -> Result<LoadedFamily> {
    let text = std::fs::read_to_string(path)?;
    family_from_str(&text)
}

pub fn save_family(path: &Path, family: &SetFamily) -> Result<()> {
    std::fs::write(path, family_to_string(family))?;
    Ok(())
}
