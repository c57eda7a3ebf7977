//! Deterministic regeneration of the fixture files used by the tests.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::classify;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::levels;
use crate::report::{self, LevelsReport, SCHEMA};
use crate::rootsys::SimpleType;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub group: String,
    pub subgroup: String,
    pub level: u32,
    pub forms: usize,
    pub orbits: usize,
    pub classes: usize,
    pub doubled: usize,
    pub quotient_classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    pub schema: u32,
    pub rows: Vec<CountRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionsReport {
    pub schema: u32,
    pub partitions: Vec<report::OrbitsReport>,
}

fn write(dir: &Path, name: &str, body: String) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, body + "\n").map_err(|e| Error::Inapplicable(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Writes `levels.json`, `counts.json` and `orbits.json` to `out_dir`.
pub fn emit_golden(max_rank: usize, max_level: u32, out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)
        .map_err(|e| Error::Inapplicable(format!("{}: {e}", out_dir.display())))?;
    let levels = LevelsReport {
        schema: SCHEMA,
        rows: levels::levels_table(max_rank.max(2))?,
    };
    let mut counts = Vec::new();
    let mut partitions = Vec::new();
    for ty in SimpleType::all_up_to(max_rank) {
        let g = Group::new(ty)?;
        for z in g.subgroups() {
            for level in 0..=max_level {
                let cl = classify::classify_lzg(&g, &z, level)?;
                counts.push(CountRow {
                    group: ty.name(),
                    subgroup: z.name().to_string(),
                    level,
                    forms: cl.forms.len(),
                    orbits: cl.orbits.len(),
                    classes: cl.classes.len(),
                    doubled: cl.classes.iter().filter(|p| p.multiplicity == 2).count(),
                    quotient_classes: cl
                        .classes
                        .iter()
                        .filter(|p| classify::factors_through_quotient(p))
                        .count(),
                });
                partitions.push(report::orbits_report(&g, &z, level)?);
            }
        }
    }
    Ok(vec![
        write(out_dir, "levels.json", report::to_json(&levels))?,
        write(
            out_dir,
            "counts.json",
            report::to_json(&CountsReport {
                schema: SCHEMA,
                rows: counts,
            }),
        )?,
        write(
            out_dir,
            "orbits.json",
            report::to_json(&PartitionsReport {
                schema: SCHEMA,
                partitions,
            }),
        )?,
    ])
}
