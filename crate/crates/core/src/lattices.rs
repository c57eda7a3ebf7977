//! Lattices between the coroot and coweight lattices, the center and its subgroups.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, RVec, Q};
use crate::rootsys::{Family, RootSystem};

/// An element of the center, named by its node on the extended diagram:
/// 0 is the identity, `k >= 1` the element whose minimal dominant
/// representative is the fundamental coweight of the special node `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralElement(pub usize);

impl CentralElement {
    pub const IDENTITY: CentralElement = CentralElement(0);

    pub fn node(self) -> usize {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.0)
    }
}

/// The center of the simply connected group, with its group law realized
/// on minimal dominant coweights.
#[derive(Clone, Debug)]
pub struct Center {
    elements: Vec<CentralElement>,
    reps: Vec<RVec>,
    mul: Vec<Vec<usize>>,
}

impl Center {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Identity first, then special nodes in increasing order.
    pub fn elements(&self) -> &[CentralElement] {
        &self.elements
    }

    pub fn index_of(&self, z: CentralElement) -> Result<usize> {
        self.elements
            .iter()
            .position(|&e| e == z)
            .ok_or(Error::NotInSubgroup(z.0))
    }

    pub fn rep(&self, z: CentralElement) -> &RVec {
        &self.reps[self.index_of(z).expect("element of this center")]
    }

    pub fn mul(&self, a: CentralElement, b: CentralElement) -> CentralElement {
        let (i, j) = (self.idx(a), self.idx(b));
        self.elements[self.mul[i][j]]
    }

    pub fn inverse(&self, a: CentralElement) -> CentralElement {
        *self
            .elements
            .iter()
            .find(|&&b| self.mul(a, b).is_identity())
            .expect("finite group")
    }

    pub fn pow(&self, a: CentralElement, k: usize) -> CentralElement {
        (0..k).fold(CentralElement::IDENTITY, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: CentralElement) -> usize {
        (1..=self.order())
            .find(|&k| self.pow(a, k).is_identity())
            .expect("finite group")
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|&e| self.element_order(e) == self.order())
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[CentralElement]) -> Vec<CentralElement> {
        let mut set: BTreeSet<CentralElement> = [CentralElement::IDENTITY].into();
        let mut frontier = vec![CentralElement::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    fn idx(&self, z: CentralElement) -> usize {
        self.index_of(z).expect("element of this center")
    }
}

/// A subgroup `Z` of the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralSubgroup {
    name: String,
    elements: Vec<CentralElement>,
    generators: Vec<CentralElement>,
}

impl CentralSubgroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[CentralElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[CentralElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, z: CentralElement) -> bool {
        self.elements.contains(&z)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Full-rank lattice given by a basis in ambient coordinates.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: Vec<RVec>,
}

impl Lattice {
    pub fn new(basis: Vec<RVec>) -> Self {
        Lattice { basis }
    }

    pub fn basis(&self) -> &[RVec] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &RVec) -> bool {
        match linalg::coordinates(&self.basis, v, RVec::dot) {
            Some(c) => c.iter().all(|x| x.is_integer()),
            None => false,
        }
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn same_as(&self, other: &Lattice) -> bool {
        self.rank() == other.rank() && self.contains_lattice(other) && other.contains_lattice(self)
    }

    /// Gram matrix under the basic inner product.
    pub fn gram(&self, rs: &RootSystem) -> Vec<Vec<Q>> {
        linalg::gram(&self.basis, |x, y| rs.ip(x, y))
    }
}

/// Center of `rs`: identity plus one element per special node.
pub fn center(rs: &RootSystem) -> Result<Center> {
    let n = rs.rank();
    let mut elements = vec![CentralElement::IDENTITY];
    let mut reps = vec![RVec::zero(rs.ambient_dim())];
    for k in 0..n {
        if rs.marks()[k] == 1 {
            let rep = rs.fundamental_coweights()[k].clone();
            if !is_minuscule(rs, &rep) {
                return Err(Error::Inconsistent(format!(
                    "special coweight {} of {} is not minuscule",
                    k + 1,
                    rs.simple_type()
                )));
            }
            elements.push(CentralElement(k + 1));
            reps.push(rep);
        }
    }
    let det = linalg::determinant(&linalg::to_q(rs.cartan()));
    if q(elements.len() as i64) != det {
        return Err(Error::Inconsistent(format!(
            "{} has {} special nodes but Cartan determinant {det}",
            rs.simple_type(),
            elements.len() - 1
        )));
    }
    let mut mul = vec![vec![0usize; reps.len()]; reps.len()];
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            let sum = &reps[i] + &reps[j];
            let k = reps
                .iter()
                .position(|r| rs.in_coroot_lattice(&(&sum - r)))
                .ok_or_else(|| Error::Inconsistent("center is not closed".into()))?;
            mul[i][j] = k;
        }
    }
    Ok(Center {
        elements,
        reps,
        mul,
    })
}

/// `<λ, α> ∈ {0, ±1}` for every root.
pub fn is_minuscule(rs: &RootSystem, lambda: &RVec) -> bool {
    rs.all_roots().iter().all(|a| rs.ip(lambda, a).abs() <= Q::one())
}

/// The central element of the coset `μ + Q^v`.
pub fn element_of(rs: &RootSystem, c: &Center, mu: &RVec) -> Result<CentralElement> {
    if !rs.in_coweight_lattice(mu) {
        return Err(Error::NotInCoweightLattice);
    }
    c.elements
        .iter()
        .zip(&c.reps)
        .find(|(_, r)| rs.in_coroot_lattice(&(mu - r)))
        .map(|(&e, _)| e)
        .ok_or_else(|| Error::Inconsistent("coset without a minimal representative".into()))
}

/// The minimal dominant coweight in `μ + Q^v`.
pub fn minimal_representative(rs: &RootSystem, c: &Center, mu: &RVec) -> Result<RVec> {
    let z = element_of(rs, c, mu)?;
    Ok(c.rep(z).clone())
}

/// Non-identity central elements with their 1-based special node.
pub fn special_coweights(c: &Center) -> Vec<(CentralElement, usize)> {
    c.elements
        .iter()
        .filter(|e| !e.is_identity())
        .map(|&e| (e, e.node()))
        .collect()
}

fn is_klein(rs: &RootSystem, c: &Center) -> bool {
    rs.simple_type().family == Family::D && c.order() == 4 && !c.is_cyclic()
}

/// All subgroups of the center with canonical names, by increasing order.
pub fn subgroups(rs: &RootSystem, c: &Center) -> Vec<CentralSubgroup> {
    let n = rs.rank();
    let mut seen: Vec<Vec<CentralElement>> = Vec::new();
    let mut out = Vec::new();
    let els = c.elements();
    let mut candidates: Vec<Vec<CentralElement>> = vec![vec![]];
    for &a in els.iter().skip(1) {
        candidates.push(vec![a]);
    }
    for (i, &a) in els.iter().enumerate().skip(1) {
        for &b in els.iter().skip(i + 1) {
            candidates.push(vec![a, b]);
        }
    }
    for gens in candidates {
        let elements = c.generated(&gens);
        if seen.contains(&elements) {
            continue;
        }
        seen.push(elements.clone());
        let order = elements.len();
        let (name, generators) = if order == 1 {
            ("triv".to_string(), vec![])
        } else if is_klein(rs, c) && order == 4 {
            ("full".to_string(), vec![CentralElement(1), CentralElement(n)])
        } else {
            // Cyclic: pick the generator with the smallest node.
            let g = *elements
                .iter()
                .find(|&&e| c.element_order(e) == order)
                .expect("cyclic subgroup");
            let name = if order == c.order() {
                "full".to_string()
            } else if is_klein(rs, c) {
                let nontriv = elements.iter().find(|e| !e.is_identity()).unwrap().node();
                match nontriv {
                    1 => "v",
                    k if k == n - 1 => "s",
                    _ => "c",
                }
                .to_string()
            } else {
                format!("k{order}")
            };
            (name, vec![g])
        };
        out.push(CentralSubgroup {
            name,
            elements,
            generators,
        });
    }
    out.sort_by_key(|s| (s.order(), s.name.clone()));
    if is_klein(rs, c) {
        // v, s, c in diagram order rather than alphabetically.
        let rank = |s: &CentralSubgroup| match s.name.as_str() {
            "triv" => 0,
            "v" => 1,
            "s" => 2,
            "c" => 3,
            _ => 4,
        };
        out.sort_by_key(rank);
    }
    out
}

/// Look up a subgroup by name, accepting `k<d>` aliases for cyclic centers.
pub fn find_subgroup(rs: &RootSystem, c: &Center, name: &str) -> Result<CentralSubgroup> {
    let all = subgroups(rs, c);
    let wanted = name.trim().to_ascii_lowercase();
    if let Some(s) = all.iter().find(|s| s.name == wanted) {
        return Ok(s.clone());
    }
    if c.is_cyclic() {
        if let Some(d) = wanted.strip_prefix('k').and_then(|d| d.parse::<usize>().ok()) {
            if let Some(s) = all.iter().find(|s| s.order() == d) {
                return Ok(s.clone());
            }
        }
    }
    Err(Error::UnknownSubgroup {
        group: rs.simple_type().name(),
        name: name.to_string(),
        valid: subgroup_names(rs, c).join(", "),
    })
}

/// Canonical names plus accepted aliases.
pub fn subgroup_names(rs: &RootSystem, c: &Center) -> Vec<String> {
    let mut names: Vec<String> = subgroups(rs, c).iter().map(|s| s.name.clone()).collect();
    if c.is_cyclic() && c.order() > 1 {
        names.push("k1".into());
        names.push(format!("k{}", c.order()));
    }
    names
}

pub fn coroot_lattice(rs: &RootSystem) -> Lattice {
    Lattice::new(rs.simple_coroots().to_vec())
}

pub fn coweight_lattice(rs: &RootSystem) -> Lattice {
    Lattice::new(rs.fundamental_coweights().to_vec())
}

/// `Λ_Z = Q^v + span of the representatives of Z`.
pub fn lattice_for(rs: &RootSystem, c: &Center, z: &CentralSubgroup) -> Result<Lattice> {
    let n = rs.rank();
    let mut gens: Vec<RVec> = rs.simple_coroots().to_vec();
    gens.extend(z.elements.iter().filter(|e| !e.is_identity()).map(|&e| c.rep(e).clone()));
    let coords: Vec<Vec<Q>> = gens.iter().map(|g| rs.coroot_coords(g)).collect();
    let den = linalg::lcm_of_denominators(coords.iter().flatten());
    let rows: Vec<Vec<i64>> = coords
        .iter()
        .map(|r| r.iter().map(|x| (x * q(den)).to_integer()).collect())
        .collect();
    let hnf = linalg::hermite_normal_form(rows);
    if hnf.len() != n {
        return Err(Error::Inconsistent("lattice is not of full rank".into()));
    }
    let basis: Vec<RVec> = hnf
        .iter()
        .map(|row| {
            let c: Vec<Q> = row.iter().map(|&x| Q::new(x, den)).collect();
            linalg::combine(rs.simple_coroots(), &c, rs.ambient_dim())
        })
        .collect();
    // [Λ_Z : Q^v] = den^n / |det hnf|.
    let index = Q::new(den.pow(n as u32), linalg::abs_det_int(&hnf));
    if index != q(z.order() as i64) {
        return Err(Error::Inconsistent(format!(
            "index of coroot lattice is {index}, expected {}",
            z.order()
        )));
    }
    Ok(Lattice::new(basis))
}

/// `{μ : <μ, x> ∈ ℤ for all x ∈ L}` under the basic inner product.
pub fn dual_lattice(rs: &RootSystem, l: &Lattice) -> Result<Lattice> {
    let g = l.gram(rs);
    let ginv = linalg::inverse(&g).ok_or_else(|| Error::Inconsistent("degenerate lattice".into()))?;
    let basis = ginv
        .iter()
        .map(|row| linalg::combine(&l.basis, row, rs.ambient_dim()))
        .collect();
    Ok(Lattice::new(basis))
}

pub fn largest_cyclic_order(c: &Center, z: &CentralSubgroup) -> usize {
    z.elements
        .iter()
        .map(|&e| c.element_order(e))
        .max()
        .unwrap_or(1)
}

/// Abstract structure of `Z` for tables: "ℤ_3", "ℤ_2×ℤ_2", and for the
/// order-2 subgroups of a Klein center "ℤ_2^0" (v), "ℤ_2^+" (s), "ℤ_2^-" (c).
pub fn structure_label(z: &CentralSubgroup, klein_center: bool) -> String {
    match (z.name.as_str(), klein_center) {
        ("triv", _) => "1".into(),
        ("full", true) => "ℤ_2×ℤ_2".into(),
        ("v", true) => "ℤ_2^0".into(),
        ("s", true) => "ℤ_2^+".into(),
        ("c", true) => "ℤ_2^-".into(),
        _ => format!("ℤ_{}", z.order()),
    }
}

pub fn has_klein_center(rs: &RootSystem, c: &Center) -> bool {
    is_klein(rs, c)
}

/// Least common multiple of denominators of a Gram matrix.
pub fn gram_denominator(g: &[Vec<Q>]) -> i64 {
    g.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()))
}
