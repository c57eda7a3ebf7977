//! Fundamental and basic levels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms;
use crate::lattices::{self, Center, CentralSubgroup};
use crate::linalg::q;
use crate::rootsys::{Family, RootSystem, SimpleType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub group: String,
    pub subgroup: String,
    /// Abstract structure of `Z`, e.g. `ℤ_2×ℤ_2`.
    pub z: String,
    /// Name of `G/Z` when it has a standard one, otherwise `—`.
    pub quotient: String,
    pub fundamental_level: u32,
    pub basic_level: u32,
}

/// Least level in {1, 2} admitting an admissible commutator map.
pub fn fundamental_level(rs: &RootSystem, c: &Center, z: &CentralSubgroup) -> Result<u32> {
    for level in [1, 2] {
        if !forms::enumerate_admissible(rs, c, z, level)?.is_empty() {
            return Ok(level);
        }
    }
    Err(Error::Inconsistent(format!(
        "no commutator map at level 2 for {} / {}",
        rs.simple_type(),
        z.name()
    )))
}

/// Least `ℓ >= 1` making `ℓ <·,·>` integral on `Λ_Z`.
pub fn basic_level(rs: &RootSystem, c: &Center, z: &CentralSubgroup) -> Result<u32> {
    let lattice = lattices::lattice_for(rs, c, z)?;
    Ok(lattices::gram_denominator(&lattice.gram(rs)) as u32)
}

/// Whether `Λ_Z` with `ℓ <·,·>` is even. Requires `ℓ_b | ℓ`.
pub fn diff_action_descends(rs: &RootSystem, c: &Center, z: &CentralSubgroup, level: u32) -> Result<bool> {
    let basic = basic_level(rs, c, z)?;
    if !level.is_multiple_of(basic) {
        return Err(Error::NotMultipleOfBasicLevel { level, basic });
    }
    let lattice = lattices::lattice_for(rs, c, z)?;
    let b = lattice.basis();
    let l = q(level as i64);
    let even = |x: &crate::RVec| {
        let v = l * rs.ip(x, x);
        v.is_integer() && v.to_integer() % 2 == 0
    };
    let mut ok = b.iter().all(even);
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            ok &= even(&(&b[i] + &b[j]));
        }
    }
    Ok(ok)
}

/// Standard name of `G/Z`, only where one is customary.
pub fn quotient_name(ty: SimpleType, z: &CentralSubgroup, klein: bool) -> String {
    let n = ty.rank;
    let name = match (ty.family, z.name()) {
        (Family::B, "full") => Some(format!("SO_{}", 2 * n + 1)),
        (Family::D, "v") if klein => Some(format!("SO_{}", 2 * n)),
        (Family::D, "k2") if !klein => Some(format!("SO_{}", 2 * n)),
        (Family::D, "full") => Some(format!("PSO_{}", 2 * n)),
        _ => None,
    };
    name.unwrap_or_else(|| "—".to_string())
}

pub fn level_record(rs: &RootSystem, c: &Center, z: &CentralSubgroup) -> Result<LevelRecord> {
    let klein = lattices::has_klein_center(rs, c);
    Ok(LevelRecord {
        group: rs.simple_type().name(),
        subgroup: z.name().to_string(),
        z: lattices::structure_label(z, klein),
        quotient: quotient_name(rs.simple_type(), z, klein),
        fundamental_level: fundamental_level(rs, c, z)?,
        basic_level: basic_level(rs, c, z)?,
    })
}

/// One record per type of rank at most `max_rank` and non-trivial `Z`.
pub fn levels_table(max_rank: usize) -> Result<Vec<LevelRecord>> {
    let mut out = Vec::new();
    for ty in SimpleType::all_up_to(max_rank) {
        let rs = RootSystem::build(ty)?;
        let c = lattices::center(&rs)?;
        for z in lattices::subgroups(&rs, &c) {
            if !z.is_trivial() {
                out.push(level_record(&rs, &c, &z)?);
            }
        }
    }
    Ok(out)
}
