//! Extended Dynkin diagram, the Weyl elements attached to central elements
//! and the affine action of the center on the level `ℓ` alcove.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattices::{self, Center, CentralElement, CentralSubgroup};
use crate::linalg::{q, qf, QMat, RVec, Q};
use crate::rootsys::{Family, RootSystem};

/// Affine Cartan matrix on the nodes `α_0 = -θ, α_1, …, α_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendedDiagram {
    cartan: Vec<Vec<i64>>,
}

impl ExtendedDiagram {
    pub fn nodes(&self) -> usize {
        self.cartan.len()
    }

    /// `<α_i, α_j^v>` for `0 <= i, j <= n`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Bond between two distinct nodes: the product of the two Cartan
    /// entries, and whether the arrow points from `i` to `j` (towards the
    /// shorter root).
    pub fn bond(&self, i: usize, j: usize) -> (i64, bool) {
        let (a, b) = (self.cartan[i][j], self.cartan[j][i]);
        (a * b, a.abs() > b.abs())
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.nodes())
            .filter(|&j| j != i && self.cartan[i][j] != 0)
            .collect()
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.nodes();
        perm.len() == n
            && (0..n).all(|i| (0..n).all(|j| self.cartan[perm[i]][perm[j]] == self.cartan[i][j]))
    }
}

pub fn extended_diagram(rs: &RootSystem) -> ExtendedDiagram {
    let neg_theta = -rs.highest_root();
    let mut roots = vec![neg_theta];
    roots.extend(rs.simple_roots().iter().cloned());
    let coroots: Vec<RVec> = roots.iter().map(|a| rs.coroot(a)).collect();
    let cartan = roots
        .iter()
        .map(|a| coroots.iter().map(|c| rs.ip(a, c).to_integer()).collect())
        .collect();
    ExtendedDiagram { cartan }
}

/// The Weyl element `w` attached to a central element: it permutes the
/// extended simple roots and sends `α_0` to the special root.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: QMat,
    label_matrix: Vec<Vec<i64>>,
    permutation: Vec<usize>,
}

impl WeylElement {
    /// Simple reflection indices (0-based) in the order they are applied.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Matrix on the ambient space, acting on column vectors.
    pub fn matrix(&self) -> &QMat {
        &self.matrix
    }

    /// Action on Dynkin labels: column `j` holds the labels of `w λ_j`.
    pub fn label_matrix(&self) -> &[Vec<i64>] {
        &self.label_matrix
    }

    /// `w α_j = α_{perm[j]}` for `0 <= j <= n`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn apply(&self, v: &RVec) -> RVec {
        RVec(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&v.0).fold(Q::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    pub fn preserves_inner_product(&self, rs: &RootSystem) -> bool {
        let d = rs.ambient_dim();
        let basis: Vec<RVec> = (0..d).map(|i| RVec::unit(d, i)).collect();
        let images: Vec<RVec> = basis.iter().map(|b| self.apply(b)).collect();
        (0..d).all(|i| (0..d).all(|j| rs.ip(&images[i], &images[j]) == rs.ip(&basis[i], &basis[j])))
    }
}

fn apply_word(rs: &RootSystem, word: &[usize], v: &RVec) -> RVec {
    word.iter()
        .fold(v.clone(), |acc, &k| rs.reflect(&rs.simple_roots()[k], &acc))
}

/// Chamber descent: start from a vector strictly dominant for the basis
/// `Δ \ {α_i} ∪ {α_0}` and reflect until dominant. The element reached maps
/// that basis onto `Δ`; its inverse is the element sought.
pub fn weyl_element(rs: &RootSystem, z: CentralElement) -> Result<WeylElement> {
    let n = rs.rank();
    let a = rs.cartan();
    let i = z.node();
    if i > n || (i > 0 && rs.marks()[i - 1] != 1) {
        return Err(Error::NotInSubgroup(i));
    }
    let mut word_down: Vec<usize> = Vec::new();
    if i > 0 {
        let others: i64 = (0..n).filter(|&j| j != i - 1).map(|j| rs.marks()[j]).sum();
        let mut c: Vec<i64> = vec![1; n];
        c[i - 1] = -(1 + others);
        while let Some(k) = (0..n).find(|&k| c[k] < 0) {
            let ck = c[k];
            for (j, cj) in c.iter_mut().enumerate() {
                *cj -= ck * a[j][k];
            }
            word_down.push(k);
        }
    }
    let word: Vec<usize> = word_down.iter().rev().copied().collect();

    let d = rs.ambient_dim();
    let columns: Vec<RVec> = (0..d).map(|j| apply_word(rs, &word, &RVec::unit(d, j))).collect();
    let matrix: QMat = (0..d)
        .map(|r| (0..d).map(|c| columns[c].0[r]).collect())
        .collect();

    let label_cols: Vec<Vec<Q>> = rs
        .fundamental_weights()
        .iter()
        .map(|w| rs.to_dynkin_labels(&apply_word(rs, &word, w)))
        .collect();
    let mut label_matrix = vec![vec![0i64; n]; n];
    for (j, col) in label_cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            if !x.is_integer() {
                return Err(Error::Inconsistent("non-integral Weyl action on labels".into()));
            }
            label_matrix[r][j] = x.to_integer();
        }
    }

    let mut extended = vec![-rs.highest_root()];
    extended.extend(rs.simple_roots().iter().cloned());
    let permutation = extended
        .iter()
        .map(|root| {
            let image = apply_word(rs, &word, root);
            extended
                .iter()
                .position(|b| *b == image)
                .ok_or_else(|| Error::Inconsistent(format!("{} does not permute the extended basis", z)))
        })
        .collect::<Result<Vec<_>>>()?;
    if permutation[0] != i {
        return Err(Error::Inconsistent(format!("{z} does not send α_0 to α_{i}")));
    }
    Ok(WeylElement {
        word,
        matrix,
        label_matrix,
        permutation,
    })
}

/// A dominant integral weight in the level `ℓ` alcove, by Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlcoveWeight {
    labels: Vec<i64>,
    level: u32,
}

impl AlcoveWeight {
    pub fn new(rs: &RootSystem, labels: Vec<i64>, level: u32) -> Result<Self> {
        if labels.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                found: labels.len(),
            });
        }
        let height: i64 = labels.iter().zip(rs.comarks()).map(|(n, c)| n * c).sum();
        if labels.iter().any(|&n| n < 0) || height > level as i64 {
            return Err(Error::OutsideAlcove { labels, level });
        }
        Ok(AlcoveWeight { labels, level })
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// `(n_0, n_1, …, n_n)` with `n_0 = ℓ - <λ, θ>`.
    pub fn affine_labels(&self, rs: &RootSystem) -> Vec<i64> {
        let height: i64 = self.labels.iter().zip(rs.comarks()).map(|(n, c)| n * c).sum();
        let mut out = vec![self.level as i64 - height];
        out.extend(&self.labels);
        out
    }

    pub fn to_vector(&self, rs: &RootSystem) -> RVec {
        let labels: Vec<Q> = self.labels.iter().map(|&n| q(n)).collect();
        rs.from_dynkin_labels(&labels).expect("length checked at construction")
    }
}

impl fmt::Display for AlcoveWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All weights of the level `ℓ` alcove in lexicographic label order.
pub fn alcove(rs: &RootSystem, level: u32) -> Vec<AlcoveWeight> {
    fn rec(comarks: &[i64], budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == comarks.len() {
            out.push(prefix.clone());
            return;
        }
        let c = comarks[prefix.len()];
        for n in 0..=budget / c {
            prefix.push(n);
            rec(comarks, budget - n * c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rs.comarks(), level as i64, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|labels| AlcoveWeight { labels, level })
        .collect()
}

/// Precomputed action of the whole center on alcoves.
#[derive(Clone, Debug)]
pub struct Action {
    elements: Vec<CentralElement>,
    weyl: Vec<WeylElement>,
}

impl Action {
    pub fn new(rs: &RootSystem, c: &Center) -> Result<Self> {
        let weyl = c
            .elements()
            .iter()
            .map(|&z| weyl_element(rs, z))
            .collect::<Result<Vec<_>>>()?;
        Ok(Action {
            elements: c.elements().to_vec(),
            weyl,
        })
    }

    pub fn weyl(&self, z: CentralElement) -> Result<&WeylElement> {
        self.elements
            .iter()
            .position(|&e| e == z)
            .map(|i| &self.weyl[i])
            .ok_or(Error::NotInSubgroup(z.node()))
    }

    /// `λ ↦ ℓ λ_i^v + w_i λ`, in Dynkin labels.
    pub fn act(&self, rs: &RootSystem, z: CentralElement, lambda: &AlcoveWeight) -> Result<AlcoveWeight> {
        let lambda = AlcoveWeight::new(rs, lambda.labels.clone(), lambda.level)?;
        let w = self.weyl(z)?;
        let n = rs.rank();
        let mut labels: Vec<i64> = (0..n)
            .map(|r| (0..n).map(|j| w.label_matrix[r][j] * lambda.labels[j]).sum())
            .collect();
        if !z.is_identity() {
            labels[z.node() - 1] += lambda.level as i64;
        }
        AlcoveWeight::new(rs, labels, lambda.level)
            .map_err(|_| Error::Inconsistent(format!("{z} does not preserve the alcove")))
    }
}

/// One-off version of [`Action::act`].
pub fn act(rs: &RootSystem, c: &Center, z: CentralElement, lambda: &AlcoveWeight) -> Result<AlcoveWeight> {
    c.index_of(z)?;
    Action::new(rs, c)?.act(rs, z, lambda)
}

/// Coordinates `μ_1..μ_m` in the orthonormal basis used by the classical
/// coordinate formulas. For type A the last coordinate is normalized to 0.
fn classical_coords(rs: &RootSystem, labels: &[i64]) -> Vec<Q> {
    let n = labels.len();
    let lab: Vec<Q> = labels.iter().map(|&x| q(x)).collect();
    let mut mu = vec![Q::zero(); rs.ambient_dim()];
    match rs.simple_type().family {
        Family::A => {
            for i in (0..n).rev() {
                mu[i] = mu[i + 1] + lab[i];
            }
        }
        Family::B => {
            mu[n - 1] = lab[n - 1] / q(2);
            for i in (0..n - 1).rev() {
                mu[i] = mu[i + 1] + lab[i];
            }
        }
        Family::C => {
            mu[n - 1] = lab[n - 1];
            for i in (0..n - 1).rev() {
                mu[i] = mu[i + 1] + lab[i];
            }
        }
        Family::D => {
            mu[n - 1] = (lab[n - 1] - lab[n - 2]) / q(2);
            mu[n - 2] = (lab[n - 1] + lab[n - 2]) / q(2);
            for i in (0..n - 2).rev() {
                mu[i] = mu[i + 1] + lab[i];
            }
        }
        _ => unreachable!("classical families only"),
    }
    mu
}

fn classical_labels(family: Family, mu: &[Q]) -> Vec<Q> {
    let m = mu.len();
    match family {
        Family::A => (0..m - 1).map(|i| mu[i] - mu[i + 1]).collect(),
        Family::B => {
            let mut l: Vec<Q> = (0..m - 1).map(|i| mu[i] - mu[i + 1]).collect();
            l.push(q(2) * mu[m - 1]);
            l
        }
        Family::C => {
            let mut l: Vec<Q> = (0..m - 1).map(|i| mu[i] - mu[i + 1]).collect();
            l.push(mu[m - 1]);
            l
        }
        Family::D => {
            let mut l: Vec<Q> = (0..m - 1).map(|i| mu[i] - mu[i + 1]).collect();
            l.push(mu[m - 2] + mu[m - 1]);
            l
        }
        _ => unreachable!("classical families only"),
    }
}

/// The action through the explicit coordinate formulas of the classical
/// families. Independent of [`Action`]; used as a cross-check.
pub fn act_classical(rs: &RootSystem, z: CentralElement, lambda: &AlcoveWeight) -> Result<AlcoveWeight> {
    let ty = rs.simple_type();
    if !ty.family.is_classical() {
        return Err(Error::Unsupported(format!(
            "no coordinate formula for type {ty}"
        )));
    }
    let lambda = AlcoveWeight::new(rs, lambda.labels.clone(), lambda.level)?;
    if z.is_identity() {
        return Ok(lambda);
    }
    let k = z.node();
    let n = ty.rank;
    let l = q(lambda.level as i64);
    let h = l * qf(1, 2);
    let mu = classical_coords(rs, &lambda.labels);
    let bad = || Error::NotInSubgroup(k);
    let image: Vec<Q> = match ty.family {
        Family::A => {
            let m = n + 1;
            if k > n {
                return Err(bad());
            }
            let mut v: Vec<Q> = (m - k..m).map(|j| l + mu[j]).collect();
            v.extend((0..m - k).map(|j| mu[j]));
            v
        }
        Family::B => {
            if k != 1 {
                return Err(bad());
            }
            let mut v = mu.clone();
            v[0] = l - mu[0];
            v
        }
        Family::C => {
            if k != n {
                return Err(bad());
            }
            (0..n).map(|j| l - mu[n - 1 - j]).collect()
        }
        Family::D => {
            if k == 1 {
                let mut v = mu.clone();
                v[0] = l - mu[0];
                v[n - 1] = -mu[n - 1];
                v
            } else if k == n - 1 {
                let mut v = Vec::with_capacity(n);
                if n.is_multiple_of(2) {
                    v.push(h + mu[n - 1]);
                } else {
                    v.push(h - mu[n - 1]);
                }
                v.extend((1..n - 1).map(|j| h - mu[n - 1 - j]));
                v.push(-h + mu[0]);
                v
            } else if k == n {
                let mut v = Vec::with_capacity(n);
                if n.is_multiple_of(2) {
                    v.push(h - mu[n - 1]);
                } else {
                    v.push(h + mu[n - 1]);
                }
                v.extend((1..n).map(|j| h - mu[n - 1 - j]));
                v
            } else {
                return Err(bad());
            }
        }
        _ => unreachable!(),
    };
    let labels = classical_labels(ty.family, &image)
        .into_iter()
        .map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::Inconsistent("coordinate formula left the weight lattice".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    AlcoveWeight::new(rs, labels, lambda.level)
}

/// A `Z`-orbit in the alcove.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    members: Vec<AlcoveWeight>,
    stabilizer: CentralSubgroup,
}

impl Orbit {
    /// Members in lexicographic order.
    pub fn members(&self) -> &[AlcoveWeight] {
        &self.members
    }

    /// Lexicographically smallest member.
    pub fn canonical(&self) -> &AlcoveWeight {
        &self.members[0]
    }

    pub fn stabilizer(&self) -> &CentralSubgroup {
        &self.stabilizer
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

/// Partition of the alcove into `Z`-orbits, sorted by canonical member.
pub fn orbits(
    rs: &RootSystem,
    c: &Center,
    action: &Action,
    z: &CentralSubgroup,
    level: u32,
) -> Result<Vec<Orbit>> {
    let subs = lattices::subgroups(rs, c);
    let mut assigned: BTreeMap<AlcoveWeight, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for lambda in alcove(rs, level) {
        if assigned.contains_key(&lambda) {
            continue;
        }
        let mut members = Vec::new();
        let mut fixing = Vec::new();
        for &g in z.elements() {
            let image = action.act(rs, g, &lambda)?;
            if image == lambda {
                fixing.push(g);
            }
            if !members.contains(&image) {
                members.push(image);
            }
        }
        members.sort();
        let stabilizer = subs
            .iter()
            .find(|s| s.elements() == fixing.as_slice())
            .cloned()
            .ok_or_else(|| Error::Inconsistent("stabilizer is not a subgroup".into()))?;
        for m in &members {
            assigned.insert(m.clone(), out.len());
        }
        out.push(Orbit {
            members,
            stabilizer,
        });
    }
    out.sort_by(|a, b| a.canonical().cmp(b.canonical()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{center, find_subgroup};

    fn setup(name: &str) -> (RootSystem, Center, Action) {
        let rs = RootSystem::build(name.parse().unwrap()).unwrap();
        let c = center(&rs).unwrap();
        let a = Action::new(&rs, &c).unwrap();
        (rs, c, a)
    }

    fn w(rs: &RootSystem, labels: &[i64], level: u32) -> AlcoveWeight {
        AlcoveWeight::new(rs, labels.to_vec(), level).unwrap()
    }

    #[test]
    fn diagrams() {
        let (a1, _, _) = setup("A1");
        assert_eq!(extended_diagram(&a1).cartan(), &[vec![2, -2], vec![-2, 2]]);
        let (d4, _, _) = setup("D4");
        let d = extended_diagram(&d4);
        assert_eq!(d.neighbours(0), vec![2]);
        assert_eq!(d.neighbours(2), vec![0, 1, 3, 4]);
        let (c2, _, _) = setup("C2");
        let d = extended_diagram(&c2);
        assert_eq!(d.neighbours(0), vec![1]);
        assert_eq!(d.neighbours(1), vec![0, 2]);
        // theta = 2e1 is long; alpha_1 short: arrow from node 0 to node 1.
        assert_eq!(d.bond(0, 1), (2, true));
        assert_eq!(d.bond(2, 1), (2, true));
    }

    #[test]
    fn type_a_weyl_elements_are_rotations() {
        let (rs, c, _) = setup("A3");
        for &z in c.elements() {
            let k = z.node();
            let p = weyl_element(&rs, z).unwrap();
            let expected: Vec<usize> = (0..4).map(|j| (j + k) % 4).collect();
            assert_eq!(p.permutation(), expected.as_slice());
        }
    }

    #[test]
    fn type_b_weyl_element_is_a_sign_change() {
        let (rs, _, _) = setup("B3");
        let w1 = weyl_element(&rs, CentralElement(1)).unwrap();
        assert_eq!(w1.apply(&RVec::from_ints(&[1, 0, 0])), RVec::from_ints(&[-1, 0, 0]));
        assert_eq!(w1.apply(&RVec::from_ints(&[0, 1, 0])), RVec::from_ints(&[0, 1, 0]));
        assert_eq!(w1.permutation(), &[1, 0, 2, 3]);
    }

    #[test]
    fn d_even_vector_element_factorizes() {
        let (rs, _, _) = setup("D4");
        let w1 = weyl_element(&rs, CentralElement(1)).unwrap();
        let a = RVec::from_ints(&[1, 0, 0, 1]);
        let b = RVec::from_ints(&[1, 0, 0, -1]);
        for i in 0..4 {
            let e = RVec::unit(4, i);
            assert_eq!(w1.apply(&e), rs.reflect(&a, &rs.reflect(&b, &e)));
        }
        assert!(w1.preserves_inner_product(&rs));
    }

    #[test]
    fn alcove_sizes() {
        let (a1, _, _) = setup("A1");
        let l: Vec<String> = alcove(&a1, 2).iter().map(|w| w.to_string()).collect();
        assert_eq!(l, ["0", "1", "2"]);
        let (a2, _, _) = setup("A2");
        let l: Vec<String> = alcove(&a2, 1).iter().map(|w| w.to_string()).collect();
        assert_eq!(l, ["0,0", "0,1", "1,0"]);
        let (d4, _, _) = setup("D4");
        assert_eq!(alcove(&d4, 2).len(), 11);
        assert_eq!(alcove(&d4, 0).len(), 1);
    }

    #[test]
    fn a1_action_reflects() {
        let (rs, _, act) = setup("A1");
        for (x, y) in [(0, 2), (1, 1), (2, 0)] {
            let img = act.act(&rs, CentralElement(1), &w(&rs, &[x], 2)).unwrap();
            assert_eq!(img.labels(), &[y]);
        }
        let out = act.act(&rs, CentralElement(1), &AlcoveWeight { labels: vec![3], level: 2 });
        assert!(matches!(out, Err(Error::OutsideAlcove { .. })));
    }

    #[test]
    fn a2_vacuum_moves_to_first_vertex() {
        let (rs, _, act) = setup("A2");
        let img = act.act(&rs, CentralElement(1), &w(&rs, &[0, 0], 1)).unwrap();
        assert_eq!(img.to_string(), "1,0");
        let cl = act_classical(&rs, CentralElement(1), &w(&rs, &[0, 0], 1)).unwrap();
        assert_eq!(cl, img);
    }

    #[test]
    fn classical_formulas_match_on_examples() {
        let (rs, _, act) = setup("D4");
        for lam in alcove(&rs, 3) {
            for node in [1, 3, 4] {
                let z = CentralElement(node);
                assert_eq!(act.act(&rs, z, &lam).unwrap(), act_classical(&rs, z, &lam).unwrap());
            }
        }
        let (e6, _, _) = setup("E6");
        let lam = w(&e6, &[0; 6], 1);
        assert!(matches!(
            act_classical(&e6, CentralElement(1), &lam),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn orbit_examples() {
        let (rs, c, act) = setup("A1");
        let full = find_subgroup(&rs, &c, "full").unwrap();
        let o = orbits(&rs, &c, &act, &full, 2).unwrap();
        assert_eq!(o.len(), 2);
        assert_eq!(o[0].members().len(), 2);
        assert_eq!(o[1].canonical().labels(), &[1]);
        assert_eq!(o[1].stabilizer().name(), "full");
        let o = orbits(&rs, &c, &act, &full, 1).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].stabilizer().name(), "triv");

        let (rs, c, act) = setup("D4");
        let full = find_subgroup(&rs, &c, "full").unwrap();
        let o = orbits(&rs, &c, &act, &full, 2).unwrap();
        let mut sizes: Vec<usize> = o.iter().map(Orbit::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(sizes, [4, 2, 2, 2, 1]);
        let single = o.iter().find(|x| x.is_singleton()).unwrap();
        assert_eq!(single.canonical().labels(), &[0, 1, 0, 0]);
    }
}
