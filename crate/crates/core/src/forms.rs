//! Commutator maps on `Λ_Z` compatible with a level.
//!
//! A commutator map is stored by its values `q(z, z')` on the fixed section
//! `z ↦ s(z)` (minimal dominant coweights), as rationals modulo 1. On the
//! rest of `Λ_Z` it is extended by
//! `ω(s(z)+α, s(z')+β) = q(z,z') + ℓ/2 (<α,s(z')> + <s(z),β> + <α,β>)`,
//! which builds the constraint on `Q^v × Λ_Z` into the representation.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattices::{self, Center, CentralElement, CentralSubgroup};
use crate::linalg::{frac, q, qf, RVec, Q};
use crate::rootsys::RootSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorMap {
    subgroup: CentralSubgroup,
    level: u32,
    section: Vec<RVec>,
    table: Vec<Vec<Q>>,
}

/// The alternating form on `Z` induced by a commutator map that is
/// invariant under coroot shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterForm {
    pub table: Vec<Vec<Q>>,
    pub nontrivial: bool,
}

impl CommutatorMap {
    /// Wraps a table indexed like `subgroup.elements()`. Nothing is checked
    /// here; see [`is_admissible`].
    pub fn new(c: &Center, subgroup: &CentralSubgroup, level: u32, table: Vec<Vec<Q>>) -> Self {
        let section = subgroup.elements().iter().map(|&z| c.rep(z).clone()).collect();
        CommutatorMap {
            subgroup: subgroup.clone(),
            level,
            section,
            table,
        }
    }

    /// A table on an arbitrary section `lifts[i] ∈ s(z_i) + Q^v`, the
    /// identity lifted to 0.
    pub fn with_section(subgroup: &CentralSubgroup, level: u32, lifts: Vec<RVec>, table: Vec<Vec<Q>>) -> Self {
        CommutatorMap {
            subgroup: subgroup.clone(),
            level,
            section: lifts,
            table,
        }
    }

    pub fn subgroup(&self) -> &CentralSubgroup {
        &self.subgroup
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn section(&self) -> &[RVec] {
        &self.section
    }

    pub fn table(&self) -> &[Vec<Q>] {
        &self.table
    }

    pub fn value(&self, a: CentralElement, b: CentralElement) -> Result<Q> {
        let i = self.position(a)?;
        let j = self.position(b)?;
        Ok(self.table[i][j])
    }

    fn position(&self, z: CentralElement) -> Result<usize> {
        self.subgroup
            .elements()
            .iter()
            .position(|&e| e == z)
            .ok_or(Error::NotInSubgroup(z.node()))
    }

    fn half_level(&self) -> Q {
        qf(self.level as i64, 2)
    }

    /// `ω(x, y)` modulo 1 for `x, y ∈ Λ_Z`.
    pub fn evaluate(&self, rs: &RootSystem, c: &Center, x: &RVec, y: &RVec) -> Result<Q> {
        let zx = lattices::element_of(rs, c, x)?;
        let zy = lattices::element_of(rs, c, y)?;
        let (i, j) = (self.position(zx)?, self.position(zy)?);
        Ok(self.evaluate_split(rs, i, &(x - &self.section[i]), j, &(y - &self.section[j])))
    }

    /// `ω(s_i + a, s_j + b)` for coroot-lattice offsets `a`, `b`.
    fn evaluate_split(&self, rs: &RootSystem, i: usize, a: &RVec, j: usize, b: &RVec) -> Q {
        let (s, t) = (&self.section[i], &self.section[j]);
        let mixed = rs.ip(a, t) + rs.ip(s, b) + rs.ip(a, b);
        frac(self.table[i][j] + self.half_level() * mixed)
    }

    /// Same form, table rebuilt on the section `z ↦ s(z) + shift(z)`.
    pub fn table_on_section(&self, rs: &RootSystem, c: &Center, lifts: &[RVec]) -> Result<Vec<Vec<Q>>> {
        lifts
            .iter()
            .map(|x| lifts.iter().map(|y| self.evaluate(rs, c, x, y)).collect())
            .collect()
    }
}

fn structural_check(c: &Center, w: &CommutatorMap) -> Result<()> {
    let els = w.subgroup.elements();
    let n = els.len();
    let bad = |m: String| Err(Error::StructurallyInvalid(m));
    if w.table.len() != n || w.table.iter().any(|r| r.len() != n) {
        return bad(format!("table must be {n}x{n}"));
    }
    for (i, row) in w.table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v < Q::zero() || *v >= q(1) {
                return bad(format!("entry ({i},{j}) = {v} is not in [0,1)"));
            }
        }
    }
    let id = els.iter().position(|e| e.is_identity()).expect("subgroups contain 1");
    for i in 0..n {
        if !w.table[id][i].is_zero() || !w.table[i][id].is_zero() {
            return bad("values against the identity must vanish".into());
        }
        if !w.table[i][i].is_zero() {
            return bad(format!("diagonal entry {i} does not vanish"));
        }
        for j in 0..n {
            if !(w.table[i][j] + w.table[j][i]).is_integer() {
                return bad(format!("entries ({i},{j}) and ({j},{i}) are not opposite"));
            }
        }
    }
    if els.iter().any(|&e| c.index_of(e).is_err()) {
        return bad("subgroup is not part of this center".into());
    }
    Ok(())
}

/// Whether the table extends to a well-defined commutator map on `Λ_Z`
/// satisfying `ω(α, μ) = (-1)^{ℓ<α,μ>}` on `Q^v × Λ_Z`.
///
/// A malformed table (wrong shape, values outside `[0,1)`, not skew, non-zero
/// on the identity) is an error, distinct from `Ok(false)`.
pub fn is_admissible(rs: &RootSystem, c: &Center, w: &CommutatorMap) -> Result<bool> {
    structural_check(c, w)?;
    let els = w.subgroup.elements();
    let half = w.half_level();
    // Biadditivity in each argument reduces to a cocycle identity on the section.
    for (i1, &z1) in els.iter().enumerate() {
        for (i2, &z2) in els.iter().enumerate() {
            let z12 = c.mul(z1, z2);
            let i12 = w.position(z12)?;
            let defect = &(&w.section[i1] + &w.section[i2]) - &w.section[i12];
            for (k, sk) in w.section.iter().enumerate() {
                let shift = half * rs.ip(&defect, sk);
                let left = w.table[i12][k] + shift - w.table[i1][k] - w.table[i2][k];
                let right = w.table[k][i12] + shift - w.table[k][i1] - w.table[k][i2];
                if !left.is_integer() || !right.is_integer() {
                    return Ok(false);
                }
            }
        }
    }
    // Constraint on coroots against generators of Λ_Z.
    let id = els.iter().position(|e| e.is_identity()).expect("subgroups contain 1");
    let zero = RVec::zero(rs.ambient_dim());
    let mut gens: Vec<(usize, &RVec, RVec)> = rs
        .simple_coroots()
        .iter()
        .map(|a| (id, &zero, a.clone()))
        .collect();
    gens.extend(w.section.iter().enumerate().map(|(k, s)| (k, s, zero.clone())));
    for a in rs.simple_coroots() {
        for (j, s, b) in &gens {
            let lhs = w.evaluate_split(rs, id, a, *j, b);
            if lhs != frac(half * rs.ip(a, &(*s + b))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Coordinates of every element of `Z` in terms of the generators.
fn generator_coords(c: &Center, z: &CentralSubgroup) -> Vec<Vec<i64>> {
    let gens = z.generators();
    let orders: Vec<usize> = gens.iter().map(|&g| c.element_order(g)).collect();
    z.elements()
        .iter()
        .map(|&e| {
            let mut a = vec![0usize; gens.len()];
            loop {
                let x = gens
                    .iter()
                    .zip(&a)
                    .fold(CentralElement::IDENTITY, |acc, (&g, &k)| c.mul(acc, c.pow(g, k)));
                if x == e {
                    return a.iter().map(|&k| k as i64).collect();
                }
                // Odometer over the box of exponents.
                let mut i = 0;
                loop {
                    a[i] += 1;
                    if a[i] < orders[i] {
                        break;
                    }
                    a[i] = 0;
                    i += 1;
                    assert!(i < a.len(), "element outside the generated subgroup");
                }
            }
        })
        .collect()
}

/// Free parametrization on `Q^v ⊕ ℤ^m` (one summand per generator `t_k`):
/// `ℓ/2 (<α,β> + <α, Σ b_k t_k> + <Σ a_k t_k, β>) + x (a_1 b_2 - a_2 b_1)`.
/// Returns the table it induces on the section.
fn table_from_parameter(rs: &RootSystem, c: &Center, z: &CentralSubgroup, level: u32, x: Q) -> Vec<Vec<Q>> {
    let gens: Vec<RVec> = z.generators().iter().map(|&g| c.rep(g).clone()).collect();
    let coords = generator_coords(c, z);
    let dim = rs.ambient_dim();
    let half = qf(level as i64, 2);
    let span = |a: &[i64]| {
        gens.iter()
            .zip(a)
            .fold(RVec::zero(dim), |acc, (t, &k)| &acc + &t.scale(q(k)))
    };
    let els = z.elements();
    let lifted: Vec<(RVec, RVec)> = els
        .iter()
        .zip(&coords)
        .map(|(&e, a)| {
            let t = span(a);
            // s(e) = Σ a_k t_k - δ with δ ∈ Q^v.
            let delta = &t - c.rep(e);
            (delta, t)
        })
        .collect();
    let n = els.len();
    let mut table = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let (da, ta) = &lifted[i];
            let (db, tb) = &lifted[j];
            let (alpha, beta) = (-da, -db);
            let mut v = half * (rs.ip(&alpha, &beta) + rs.ip(&alpha, tb) + rs.ip(ta, &beta));
            if gens.len() == 2 {
                let (a, b) = (&coords[i], &coords[j]);
                v += x * q(a[0] * b[1] - a[1] * b[0]);
            }
            table[i][j] = frac(v);
        }
    }
    table
}

/// Explicit solutions: the cyclic construction, and for two generators the
/// quarter-level twist `x = ℓ/2 <t_1, t_2>`.
fn seed(rs: &RootSystem, c: &Center, z: &CentralSubgroup, level: u32) -> Option<Q> {
    let l = q(level as i64);
    let gens = z.generators();
    let norm = |g: CentralElement| rs.ip(c.rep(g), c.rep(g));
    match gens.len() {
        0 => Some(Q::zero()),
        1 => {
            let k = q(c.element_order(gens[0]) as i64);
            let v = l * k * norm(gens[0]);
            (v.is_integer() && v.to_integer() % 2 == 0).then(Q::zero)
        }
        2 => {
            let ok = gens.iter().all(|&g| (l * norm(g)).is_integer())
                && gens.iter().all(|&g| c.element_order(g) == 2);
            ok.then(|| frac(l * qf(1, 2) * rs.ip(c.rep(gens[0]), c.rep(gens[1]))))
        }
        _ => None,
    }
}

/// Exact solution of the descent congruences for the free parameter.
///
/// For each relation `a` among the generators (`Σ a_k t_k ∈ Q^v`) and each
/// generator `m`, the form must vanish on `(−Σ a_k t_k, a) × (0, e_m)`.
fn solve_parameters(rs: &RootSystem, c: &Center, z: &CentralSubgroup, level: u32) -> Result<Vec<Q>> {
    let gens: Vec<RVec> = z.generators().iter().map(|&g| c.rep(g).clone()).collect();
    let m = gens.len();
    if m > 2 {
        return Err(Error::Unsupported("subgroups with more than two generators".into()));
    }
    let orders: Vec<i64> = z.generators().iter().map(|&g| c.element_order(g) as i64).collect();
    let half = qf(level as i64, 2);
    let dim = rs.ambient_dim();
    // Relations inside the box [0, ord]^m generate the relation lattice.
    let mut relations: Vec<Vec<i64>> = Vec::new();
    let mut a = vec![0i64; m];
    loop {
        let mut i = 0;
        loop {
            if i == m {
                break;
            }
            a[i] += 1;
            if a[i] <= orders[i] {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        let v = gens.iter().zip(&a).fold(RVec::zero(dim), |acc, (t, &k)| &acc + &t.scale(q(k)));
        if rs.in_coroot_lattice(&v) {
            relations.push(a.clone());
        }
    }
    // Congruences coeff * x ≡ rhs (mod 1).
    let mut congruences: Vec<(i64, Q)> = Vec::new();
    for rel in &relations {
        let v = gens.iter().zip(rel).fold(RVec::zero(dim), |acc, (t, &k)| &acc + &t.scale(q(k)));
        for (mi, tm) in gens.iter().enumerate() {
            let coeff = if m == 2 {
                let e: Vec<i64> = (0..2).map(|j| i64::from(j == mi)).collect();
                rel[0] * e[1] - rel[1] * e[0]
            } else {
                0
            };
            congruences.push((coeff, frac(half * rs.ip(&v, tm))));
        }
    }
    if congruences.iter().any(|&(k, r)| k == 0 && !r.is_zero()) {
        return Ok(Vec::new());
    }
    if m < 2 {
        return Ok(vec![Q::zero()]);
    }
    let Some(&(k0, r0)) = congruences.iter().find(|p| p.0 != 0) else {
        return Err(Error::Inconsistent("free parameter is unconstrained".into()));
    };
    let mut out: Vec<Q> = (0..k0.abs())
        .map(|t| frac((r0 + q(t)) / q(k0)))
        .filter(|&x| congruences.iter().all(|&(k, r)| frac(q(k) * x - r).is_zero()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The alternating forms on `Z`, as shifts of the free parameter.
fn alternating_shifts(c: &Center, z: &CentralSubgroup) -> Vec<Q> {
    match z.generators() {
        [g, h] => {
            let d = (c.element_order(*g) as i64).gcd(&(c.element_order(*h) as i64));
            (0..d).map(|t| qf(t, d)).collect()
        }
        _ => vec![Q::zero()],
    }
}

/// All admissible commutator maps at level `ℓ`, sorted by table.
pub fn enumerate_admissible(
    rs: &RootSystem,
    c: &Center,
    z: &CentralSubgroup,
    level: u32,
) -> Result<Vec<CommutatorMap>> {
    let params: Vec<Q> = match seed(rs, c, z, level) {
        Some(x0) => alternating_shifts(c, z).into_iter().map(|s| frac(x0 + s)).collect(),
        None => solve_parameters(rs, c, z, level)?,
    };
    let mut tables: Vec<Vec<Vec<Q>>> = params
        .into_iter()
        .map(|x| table_from_parameter(rs, c, z, level, x))
        .collect();
    tables.sort();
    tables.dedup();
    tables
        .into_iter()
        .map(|t| {
            let w = CommutatorMap::new(c, z, level, t);
            if is_admissible(rs, c, &w)? {
                Ok(w)
            } else {
                Err(Error::Inconsistent("constructed commutator map is not admissible".into()))
            }
        })
        .collect()
}

/// `ω(λ, μ) = (-1)^{ℓ<λ,μ> + ℓ²<λ,λ><μ,μ>}`, defined when `ℓ_b | ℓ`.
pub fn canonical_form(rs: &RootSystem, c: &Center, z: &CentralSubgroup, level: u32) -> Result<CommutatorMap> {
    let basic = crate::levels::basic_level(rs, c, z)?;
    if !level.is_multiple_of(basic) {
        return Err(Error::NotMultipleOfBasicLevel { level, basic });
    }
    let l = q(level as i64);
    let reps: Vec<&RVec> = z.elements().iter().map(|&e| c.rep(e)).collect();
    let table = reps
        .iter()
        .map(|a| {
            reps.iter()
                .map(|b| frac(qf(1, 2) * (l * rs.ip(a, b) + l * l * rs.ip(a, a) * rs.ip(b, b))))
                .collect()
        })
        .collect();
    Ok(CommutatorMap::new(c, z, level, table))
}

/// The induced form on `Z`, when `ω` is invariant under coroot shifts.
pub fn pulled_back_center_form(rs: &RootSystem, w: &CommutatorMap) -> Option<CenterForm> {
    let l = q(w.level as i64);
    let mut gens: Vec<&RVec> = rs.simple_coroots().iter().collect();
    gens.extend(w.section.iter());
    let invariant = rs.simple_coroots().iter().all(|a| {
        gens.iter().all(|m| {
            let v = l * rs.ip(a, m);
            v.is_integer() && v.to_integer() % 2 == 0
        })
    });
    invariant.then(|| CenterForm {
        table: w.table.clone(),
        nontrivial: w.table.iter().flatten().any(|v| !v.is_zero()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{center, find_subgroup};

    fn setup(name: &str, sub: &str) -> (RootSystem, Center, CentralSubgroup) {
        let rs = RootSystem::build(name.parse().unwrap()).unwrap();
        let c = center(&rs).unwrap();
        let z = find_subgroup(&rs, &c, sub).unwrap();
        (rs, c, z)
    }

    #[test]
    fn trivial_subgroup_has_the_empty_form() {
        let (rs, c, z) = setup("A3", "triv");
        for l in 0..4 {
            let forms = enumerate_admissible(&rs, &c, &z, l).unwrap();
            assert_eq!(forms.len(), 1);
            assert!(is_admissible(&rs, &c, &forms[0]).unwrap());
        }
    }

    #[test]
    fn su2_mod_center_needs_even_level() {
        let (rs, c, z) = setup("A1", "full");
        for l in [1, 3, 5] {
            assert!(enumerate_admissible(&rs, &c, &z, l).unwrap().is_empty());
        }
        let zero = vec![vec![Q::zero(); 2]; 2];
        let w1 = CommutatorMap::new(&c, &z, 1, zero.clone());
        assert!(!is_admissible(&rs, &c, &w1).unwrap());
        let w2 = CommutatorMap::new(&c, &z, 2, zero);
        assert!(is_admissible(&rs, &c, &w2).unwrap());
        let pb = pulled_back_center_form(&rs, &w2).unwrap();
        assert!(!pb.nontrivial);
    }

    #[test]
    fn malformed_tables_are_errors() {
        let (rs, c, z) = setup("A1", "full");
        let w = CommutatorMap::new(&c, &z, 2, vec![vec![Q::zero(); 2]]);
        assert!(matches!(is_admissible(&rs, &c, &w), Err(Error::StructurallyInvalid(_))));
        let w = CommutatorMap::new(&c, &z, 2, vec![vec![q(0), q(0)], vec![q(0), qf(1, 2)]]);
        assert!(matches!(is_admissible(&rs, &c, &w), Err(Error::StructurallyInvalid(_))));
        let w = CommutatorMap::new(&c, &z, 2, vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
        assert!(matches!(is_admissible(&rs, &c, &w), Err(Error::StructurallyInvalid(_))));
    }

    #[test]
    fn counts() {
        let (rs, c, z) = setup("E7", "full");
        assert_eq!(enumerate_admissible(&rs, &c, &z, 2).unwrap().len(), 1);
        assert_eq!(enumerate_admissible(&rs, &c, &z, 1).unwrap().len(), 0);
        let (rs, c, z) = setup("D4", "full");
        assert_eq!(enumerate_admissible(&rs, &c, &z, 2).unwrap().len(), 2);
        assert_eq!(enumerate_admissible(&rs, &c, &z, 1).unwrap().len(), 2);
        let (rs, c, z) = setup("D6", "full");
        assert_eq!(enumerate_admissible(&rs, &c, &z, 1).unwrap().len(), 0);
        assert_eq!(enumerate_admissible(&rs, &c, &z, 2).unwrap().len(), 2);
    }

    #[test]
    fn solver_agrees_with_seeds() {
        for (g, s) in [("D4", "full"), ("D6", "full"), ("A3", "full"), ("E6", "full"), ("D5", "full")] {
            let (rs, c, z) = setup(g, s);
            for l in 0..5 {
                let via_seed = enumerate_admissible(&rs, &c, &z, l).unwrap();
                let mut via_solver: Vec<Vec<Vec<Q>>> = solve_parameters(&rs, &c, &z, l)
                    .unwrap()
                    .into_iter()
                    .map(|x| table_from_parameter(&rs, &c, &z, l, x))
                    .collect();
                via_solver.sort();
                via_solver.dedup();
                let seeded: Vec<Vec<Vec<Q>>> = via_seed.iter().map(|w| w.table().to_vec()).collect();
                assert_eq!(seeded, via_solver, "{g} {s} level {l}");
            }
        }
    }

    #[test]
    fn spin8_forms_and_center_flags() {
        let (rs, c, z) = setup("D4", "full");
        let forms = enumerate_admissible(&rs, &c, &z, 2).unwrap();
        let flags: Vec<bool> = forms
            .iter()
            .map(|w| pulled_back_center_form(&rs, w).unwrap().nontrivial)
            .collect();
        assert_eq!(flags, [false, true]);
        let canon = canonical_form(&rs, &c, &z, 2).unwrap();
        assert!(is_admissible(&rs, &c, &canon).unwrap());
        assert_eq!(canon, forms[1]);
        // Odd level: not invariant under coroot shifts.
        let odd = enumerate_admissible(&rs, &c, &z, 1).unwrap();
        assert!(pulled_back_center_form(&rs, &odd[0]).is_none());
    }

    #[test]
    fn canonical_form_requires_basic_level() {
        let (rs, c, z) = setup("A2", "full");
        assert_eq!(
            canonical_form(&rs, &c, &z, 2),
            Err(Error::NotMultipleOfBasicLevel { level: 2, basic: 3 })
        );
        let w = canonical_form(&rs, &c, &z, 3).unwrap();
        assert!(is_admissible(&rs, &c, &w).unwrap());
        let (rs, c, z) = setup("B3", "full");
        let w = canonical_form(&rs, &c, &z, 1).unwrap();
        assert!(w.table().iter().flatten().all(Q::is_zero));
    }

    #[test]
    fn table_is_section_independent() {
        let (rs, c, z) = setup("D4", "full");
        for w in enumerate_admissible(&rs, &c, &z, 2).unwrap() {
            let mut lifts = w.section().to_vec();
            lifts[1] = &lifts[1] + &rs.simple_coroots()[1];
            lifts[2] = &lifts[2] - &rs.simple_coroots()[0];
            let shifted = w.table_on_section(&rs, &c, &lifts).unwrap();
            let other = CommutatorMap::with_section(&z, 2, lifts.clone(), shifted);
            assert!(is_admissible(&rs, &c, &other).unwrap());
            let mut probes = lifts.clone();
            probes.extend(w.section().iter().cloned());
            probes.extend(rs.simple_coroots().iter().cloned());
            for x in &probes {
                for y in &probes {
                    assert_eq!(
                        other.evaluate(&rs, &c, x, y).unwrap(),
                        w.evaluate(&rs, &c, x, y).unwrap()
                    );
                }
            }
        }
    }
}
