//! Versioned JSON documents emitted by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::alcove::{self, AlcoveWeight, Orbit};
use crate::classify::{self, Classification};
use crate::error::Result;
use crate::forms::CommutatorMap;
use crate::group::Group;
use crate::lattices::CentralSubgroup;
use crate::levels::LevelRecord;
use crate::linalg::Q;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelsReport {
    pub schema: u32,
    pub rows: Vec<LevelRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveReport {
    pub schema: u32,
    pub group: String,
    pub level: u32,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActReport {
    pub schema: u32,
    pub group: String,
    pub level: u32,
    pub element: usize,
    pub weight: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub members: Vec<Vec<i64>>,
    pub stabilizer: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub schema: u32,
    pub group: String,
    pub subgroup: String,
    pub level: u32,
    pub orbits: Vec<OrbitEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionEntry {
    pub element: usize,
    pub coweight_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub name: String,
    pub section: Vec<SectionEntry>,
    /// Row-major values `[numerator, denominator]`, indexed by `section`.
    pub table: Vec<[i64; 2]>,
    pub center_form: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormsReport {
    pub schema: u32,
    pub group: String,
    pub subgroup: String,
    pub level: u32,
    pub forms: Vec<FormEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub omega: String,
    pub center_form: String,
    pub orbit: Vec<Vec<i64>>,
    pub stabilizer: String,
    pub multiplicity: u32,
    pub factors_through_quotient: bool,
    pub characters: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub group: String,
    pub subgroup: String,
    pub level: u32,
    pub fundamental_level: u32,
    pub basic_level: u32,
    pub classes: Vec<ClassEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementEntry {
    pub element: usize,
    pub order: usize,
    pub permutation: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub schema: u32,
    pub group: String,
    /// Affine Cartan matrix on nodes 0..=n, node 0 the affine node.
    pub cartan: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub elements: Vec<ElementEntry>,
}

fn labels(w: &AlcoveWeight) -> Vec<i64> {
    w.labels().to_vec()
}

fn orbit_members(o: &Orbit) -> Vec<Vec<i64>> {
    o.members().iter().map(labels).collect()
}

pub fn alcove_report(g: &Group, level: u32) -> AlcoveReport {
    AlcoveReport {
        schema: SCHEMA,
        group: g.simple_type().name(),
        level,
        weights: alcove::alcove(g.root_system(), level)
            .iter()
            .map(|w| w.to_string())
            .collect(),
    }
}

pub fn orbits_report(g: &Group, z: &CentralSubgroup, level: u32) -> Result<OrbitsReport> {
    let orbits = alcove::orbits(g.root_system(), g.center(), g.action(), z, level)?;
    Ok(OrbitsReport {
        schema: SCHEMA,
        group: g.simple_type().name(),
        subgroup: z.name().to_string(),
        level,
        orbits: orbits
            .iter()
            .map(|o| OrbitEntry {
                members: orbit_members(o),
                stabilizer: o.stabilizer().name().to_string(),
            })
            .collect(),
    })
}

fn form_entry(g: &Group, i: usize, w: &CommutatorMap) -> FormEntry {
    let rs = g.root_system();
    FormEntry {
        name: classify::omega_name(i),
        section: w
            .subgroup()
            .elements()
            .iter()
            .zip(w.section())
            .map(|(e, s)| SectionEntry {
                element: e.node(),
                coweight_labels: rs.to_coweight_coords(s).iter().map(Q::to_string).collect(),
            })
            .collect(),
        table: w
            .table()
            .iter()
            .flatten()
            .map(|x| [*x.numer(), *x.denom()])
            .collect(),
        center_form: classify::center_form_kind(g, w).as_str().to_string(),
    }
}

pub fn forms_report(g: &Group, z: &CentralSubgroup, level: u32) -> Result<FormsReport> {
    let forms = crate::forms::enumerate_admissible(g.root_system(), g.center(), z, level)?;
    Ok(FormsReport {
        schema: SCHEMA,
        group: g.simple_type().name(),
        subgroup: z.name().to_string(),
        level,
        forms: forms.iter().enumerate().map(|(i, w)| form_entry(g, i, w)).collect(),
    })
}

pub fn classify_report(g: &Group, cl: &Classification) -> ClassifyReport {
    ClassifyReport {
        schema: SCHEMA,
        group: cl.group.name(),
        subgroup: cl.subgroup.name().to_string(),
        level: cl.level,
        fundamental_level: cl.fundamental_level,
        basic_level: cl.basic_level,
        classes: cl
            .classes
            .iter()
            .map(|p| ClassEntry {
                omega: p.omega_name(),
                center_form: p.center_form.as_str().to_string(),
                orbit: orbit_members(&p.orbit),
                stabilizer: p.orbit.stabilizer().name().to_string(),
                multiplicity: p.multiplicity,
                factors_through_quotient: classify::factors_through_quotient(p),
                characters: classify::character_strings(g, p),
            })
            .collect(),
    }
}

pub fn diagram_report(g: &Group) -> Result<DiagramReport> {
    let rs = g.root_system();
    let d = alcove::extended_diagram(rs);
    let mut marks = vec![1];
    marks.extend(rs.marks());
    let mut comarks = vec![1];
    comarks.extend(rs.comarks());
    let elements = g
        .center()
        .elements()
        .iter()
        .map(|&z| {
            Ok(ElementEntry {
                element: z.node(),
                order: g.center().element_order(z),
                permutation: g.action().weyl(z)?.permutation().to_vec(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagramReport {
        schema: SCHEMA,
        group: g.simple_type().name(),
        cartan: d.cartan().to_vec(),
        marks,
        comarks,
        elements,
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}
