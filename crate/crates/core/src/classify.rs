//! Classification of irreducible positive-energy representations of `L_Z G`
//! as triples (level, commutator map, orbit), and of those factoring
//! through `L(G/Z)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::alcove::{self, Orbit};
use crate::error::{Error, Result};
use crate::forms::{self, CommutatorMap};
use crate::group::Group;
use crate::lattices::{self, CentralSubgroup};
use crate::levels;
use crate::linalg::{frac, q, Q};
use crate::rootsys::{Family, SimpleType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CenterFormKind {
    #[serde(rename = "trivial")]
    Trivial,
    #[serde(rename = "nontrivial")]
    Nontrivial,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl CenterFormKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CenterFormKind::Trivial => "trivial",
            CenterFormKind::Nontrivial => "nontrivial",
            CenterFormKind::NotApplicable => "n/a",
        }
    }
}

pub fn center_form_kind(g: &Group, w: &CommutatorMap) -> CenterFormKind {
    match forms::pulled_back_center_form(g.root_system(), w) {
        Some(f) if f.nontrivial => CenterFormKind::Nontrivial,
        Some(_) => CenterFormKind::Trivial,
        None => CenterFormKind::NotApplicable,
    }
}

/// One irreducible class: a commutator map and a `Z`-orbit in the alcove.
#[derive(Clone, Debug)]
pub struct PerClass {
    pub group: SimpleType,
    pub subgroup: CentralSubgroup,
    pub level: u32,
    pub omega_index: usize,
    pub omega: CommutatorMap,
    pub center_form: CenterFormKind,
    pub orbit: Orbit,
    pub multiplicity: u32,
    pub basic_level: u32,
}

impl PerClass {
    pub fn omega_name(&self) -> String {
        omega_name(self.omega_index)
    }
}

pub fn omega_name(i: usize) -> String {
    format!("omega{i}")
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub group: SimpleType,
    pub subgroup: CentralSubgroup,
    pub level: u32,
    pub fundamental_level: u32,
    pub basic_level: u32,
    pub forms: Vec<CommutatorMap>,
    pub orbits: Vec<Orbit>,
    pub classes: Vec<PerClass>,
}

/// Multiplicity of the restriction to `LG`: 2 exactly for a fixed point of
/// the Klein center of `Spin_{4m}` at even level with non-trivial form.
pub fn multiplicity(
    ty: SimpleType,
    subgroup: &CentralSubgroup,
    klein: bool,
    level: u32,
    orbit: &Orbit,
    form: CenterFormKind,
) -> u32 {
    let applies = ty.family == Family::D
        && ty.rank.is_multiple_of(2)
        && klein
        && subgroup.name() == "full"
        && orbit.is_singleton()
        && level.is_multiple_of(2)
        && form == CenterFormKind::Nontrivial;
    if applies {
        2
    } else {
        1
    }
}

pub fn classify_lzg(g: &Group, z: &CentralSubgroup, level: u32) -> Result<Classification> {
    let rs = g.root_system();
    let c = g.center();
    let fundamental_level = levels::fundamental_level(rs, c, z)?;
    let basic_level = levels::basic_level(rs, c, z)?;
    let forms = forms::enumerate_admissible(rs, c, z, level)?;
    let orbits = alcove::orbits(rs, c, g.action(), z, level)?;
    let klein = lattices::has_klein_center(rs, c);
    let mut classes = Vec::new();
    for (i, w) in forms.iter().enumerate() {
        let kind = center_form_kind(g, w);
        for o in &orbits {
            classes.push(PerClass {
                group: rs.simple_type(),
                subgroup: z.clone(),
                level,
                omega_index: i,
                omega: w.clone(),
                center_form: kind,
                orbit: o.clone(),
                multiplicity: multiplicity(rs.simple_type(), z, klein, level, o, kind),
                basic_level,
            });
        }
    }
    Ok(Classification {
        group: rs.simple_type(),
        subgroup: z.clone(),
        level,
        fundamental_level,
        basic_level,
        forms,
        orbits,
        classes,
    })
}

/// Classes that factor through `L(G/Z)`.
pub fn classify_quotient(g: &Group, z: &CentralSubgroup, level: u32) -> Result<Classification> {
    let mut all = classify_lzg(g, z, level)?;
    all.classes.retain(factors_through_quotient);
    Ok(all)
}

/// Level is a multiple of the basic level.
pub fn factors_through_quotient(per: &PerClass) -> bool {
    per.level.is_multiple_of(per.basic_level)
}

/// Classes of `λ + ℓ s(z)` modulo `(Λ_Z)^*`, `z ∈ Z`, for the canonical
/// member `λ` of the orbit. A class is recorded by its pairings with the
/// section of `Z`, modulo 1; pairings with coroots are integral already.
pub fn characters_of_center(g: &Group, per: &PerClass) -> Vec<Vec<Q>> {
    let rs = g.root_system();
    let c = g.center();
    let lambda = per.orbit.canonical().to_vector(rs);
    let l = q(per.level as i64);
    let section: Vec<_> = per.subgroup.elements().iter().map(|&e| c.rep(e).clone()).collect();
    let classes: BTreeSet<Vec<Q>> = section
        .iter()
        .map(|s| {
            let nu = &lambda + &s.scale(l);
            section.iter().map(|t| frac(rs.ip(&nu, t))).collect()
        })
        .collect();
    classes.into_iter().collect()
}

pub fn character_strings(g: &Group, per: &PerClass) -> Vec<String> {
    characters_of_center(g, per)
        .iter()
        .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        .collect()
}

/// Checks the classifier against the Mackey obstruction for the Klein center
/// of `Spin_{4m}`: fixed orbits only at even level, multiplicity 1 with the
/// trivial center form and 2 with the non-trivial one.
pub fn mackey_consistency(g: &Group, z: &CentralSubgroup, level: u32) -> Result<bool> {
    let ty = g.simple_type();
    let klein = lattices::has_klein_center(g.root_system(), g.center());
    if !(ty.family == Family::D && ty.rank.is_multiple_of(2) && klein && z.name() == "full") {
        return Err(Error::Inapplicable(format!(
            "{ty} with subgroup {} is not Spin(4m) with its full center",
            z.name()
        )));
    }
    let cl = classify_lzg(g, z, level)?;
    let fixed: Vec<&Orbit> = cl.orbits.iter().filter(|o| o.is_singleton()).collect();
    if !fixed.is_empty() && level % 2 == 1 {
        return Ok(false);
    }
    for per in cl.classes.iter().filter(|p| p.orbit.is_singleton()) {
        let expected = match per.center_form {
            CenterFormKind::Nontrivial => 2,
            _ => 1,
        };
        if per.multiplicity != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Central extensions of `L(G/Z)` pulling back to level `ℓ`.
pub fn extension_count_quotient(g: &Group, z: &CentralSubgroup, level: u32) -> Result<usize> {
    let rs = g.root_system();
    let c = g.center();
    let basic = levels::basic_level(rs, c, z)?;
    if !level.is_multiple_of(basic) {
        return Ok(0);
    }
    Ok(forms::enumerate_admissible(rs, c, z, level)?.len() * z.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, sub: &str, level: u32) -> (Group, Classification) {
        let g = Group::parse(name).unwrap();
        let z = g.subgroup(sub).unwrap();
        let cl = classify_lzg(&g, &z, level).unwrap();
        (g, cl)
    }

    #[test]
    fn su2_mod_center() {
        for l in [1, 3, 5] {
            assert!(run("SU2", "k2", l).1.classes.is_empty());
        }
        let (g, cl) = run("SU2", "k2", 2);
        assert_eq!(cl.classes.len(), 2);
        assert!(cl.classes.iter().all(|p| p.multiplicity == 1));
        let fixed = cl.classes.iter().find(|p| p.orbit.is_singleton()).unwrap();
        assert_eq!(characters_of_center(&g, fixed).len(), 1);
        assert!(factors_through_quotient(fixed));
    }

    #[test]
    fn spin8_full_level_two() {
        let (g, cl) = run("Spin8", "full", 2);
        assert_eq!(cl.classes.len(), 10);
        let doubles: Vec<&PerClass> = cl.classes.iter().filter(|p| p.multiplicity == 2).collect();
        assert_eq!(doubles.len(), 1);
        assert_eq!(doubles[0].orbit.canonical().labels(), &[0, 1, 0, 0]);
        assert_eq!(doubles[0].center_form, CenterFormKind::Nontrivial);
        let z = g.subgroup("full").unwrap();
        assert!(mackey_consistency(&g, &z, 2).unwrap());
        assert!(mackey_consistency(&g, &z, 3).unwrap());
        assert_eq!(extension_count_quotient(&g, &z, 2).unwrap(), 8);
    }

    #[test]
    fn mackey_needs_klein_center() {
        let g = Group::parse("Spin10").unwrap();
        let z = g.subgroup("full").unwrap();
        assert!(matches!(mackey_consistency(&g, &z, 2), Err(Error::Inapplicable(_))));
        let g = Group::parse("Spin12").unwrap();
        let z = g.subgroup("full").unwrap();
        assert!(mackey_consistency(&g, &z, 1).unwrap());
        assert!(classify_lzg(&g, &z, 1).unwrap().classes.is_empty());
    }

    #[test]
    fn su3_characters() {
        let (g, cl) = run("SU3", "full", 1);
        let vac = cl.classes.iter().find(|p| p.orbit.canonical().labels() == [0, 0]).unwrap();
        assert_eq!(characters_of_center(&g, vac).len(), 3);
        assert!(!factors_through_quotient(vac));
        assert!(!classify_quotient(&g, &g.subgroup("full").unwrap(), 3).unwrap().classes.is_empty());
        assert!(classify_quotient(&g, &g.subgroup("full").unwrap(), 2).unwrap().classes.is_empty());
    }

    #[test]
    fn extension_counts() {
        let g = Group::parse("SU2").unwrap();
        let z = g.subgroup("full").unwrap();
        assert_eq!(extension_count_quotient(&g, &z, 2).unwrap(), 2);
        assert_eq!(extension_count_quotient(&g, &z, 1).unwrap(), 0);
    }

    #[test]
    fn level_zero() {
        let (_, cl) = run("E6", "full", 0);
        assert_eq!(cl.classes.len(), 1);
        assert!(factors_through_quotient(&cl.classes[0]));
    }
}
