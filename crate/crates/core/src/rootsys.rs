//! Cartan data for the simple types in their standard orthonormal realizations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, qf, QMat, RVec, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple type such as `D4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (ok, allowed) = match family {
            Family::A => (rank >= 1, "A needs rank >= 1"),
            Family::B => (rank >= 2, "B needs rank >= 2"),
            Family::C => (rank >= 1, "C needs rank >= 1"),
            Family::D => (rank >= 3, "D needs rank >= 3"),
            Family::E => (matches!(rank, 6..=8), "E needs rank 6, 7 or 8"),
            Family::F => (rank == 4, "F needs rank 4"),
            Family::G => (rank == 2, "G needs rank 2"),
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                allowed,
            })
        }
    }

    /// Every valid type of rank at most `max_rank`, in family then rank order.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let families = [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ];
        families
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| SimpleType::new(f, r).ok()))
            .collect()
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// Accepted spellings of group names, for diagnostics.
    pub const GRAMMAR: &'static str =
        "A<n> B<n> C<n> D<n> E6 E7 E8 F4 G2, or SU<n>, Spin<n>, Sp<n> (case-insensitive)";
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(s.to_string());
        let lower = s.trim().to_ascii_lowercase().replace('_', "");
        let split = lower
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(unknown)?;
        let (prefix, digits) = lower.split_at(split);
        let n: usize = digits.parse().map_err(|_| unknown())?;
        match prefix {
            "su" if n >= 2 => SimpleType::new(Family::A, n - 1),
            "su" => Err(unknown()),
            "sp" => SimpleType::new(Family::C, n),
            "spin" if n % 2 == 1 && n >= 5 => SimpleType::new(Family::B, (n - 1) / 2),
            "spin" if n.is_multiple_of(2) && n >= 6 => SimpleType::new(Family::D, n / 2),
            "spin" => Err(unknown()),
            p if p.len() == 1 => {
                let fam = Family::from_letter(p.chars().next().unwrap()).ok_or_else(unknown)?;
                SimpleType::new(fam, n)
            }
            _ => Err(unknown()),
        }
    }
}

/// Exact Cartan data of one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: SimpleType,
    dim: usize,
    scale: Q,
    simple_roots: Vec<RVec>,
    simple_coroots: Vec<RVec>,
    highest_root: RVec,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    cartan: Vec<Vec<i64>>,
    gram: QMat,
    fund_weights: Vec<RVec>,
    fund_coweights: Vec<RVec>,
    all_roots: Vec<RVec>,
}

/// Simple roots, ambient dimension and inner-product scale.
fn realization(ty: SimpleType) -> (Vec<RVec>, usize, Q) {
    let r = ty.rank;
    let e = |dim: usize, pairs: &[(usize, i64)]| {
        let mut v = RVec::zero(dim);
        for &(i, c) in pairs {
            v.0[i] += q(c);
        }
        v
    };
    match ty.family {
        Family::A => {
            let roots = (0..r).map(|i| e(r + 1, &[(i, 1), (i + 1, -1)])).collect();
            (roots, r + 1, q(1))
        }
        Family::B => {
            let mut roots: Vec<RVec> = (0..r - 1).map(|i| e(r, &[(i, 1), (i + 1, -1)])).collect();
            roots.push(e(r, &[(r - 1, 1)]));
            (roots, r, q(1))
        }
        Family::C => {
            let mut roots: Vec<RVec> = (0..r - 1).map(|i| e(r, &[(i, 1), (i + 1, -1)])).collect();
            roots.push(e(r, &[(r - 1, 2)]));
            (roots, r, qf(1, 2))
        }
        Family::D => {
            let mut roots: Vec<RVec> = (0..r - 1).map(|i| e(r, &[(i, 1), (i + 1, -1)])).collect();
            roots.push(e(r, &[(r - 2, 1), (r - 1, 1)]));
            (roots, r, q(1))
        }
        Family::E => {
            let h = qf(1, 2);
            let mut a1 = RVec(vec![-h; 8]);
            a1.0[0] = h;
            a1.0[7] = h;
            let mut roots = vec![a1, e(8, &[(0, 1), (1, 1)])];
            for k in 3..=8 {
                roots.push(e(8, &[(k - 2, 1), (k - 3, -1)]));
            }
            roots.truncate(r);
            (roots, 8, q(1))
        }
        Family::F => {
            let h = qf(1, 2);
            let roots = vec![
                e(4, &[(1, 1), (2, -1)]),
                e(4, &[(2, 1), (3, -1)]),
                e(4, &[(3, 1)]),
                RVec(vec![h, -h, -h, -h]),
            ];
            (roots, 4, q(1))
        }
        Family::G => {
            let roots = vec![e(3, &[(0, 1), (1, -1)]), e(3, &[(0, -2), (1, 1), (2, 1)])];
            (roots, 3, qf(1, 3))
        }
    }
}

/// Dynkin diagram as edges `(long_end, other_end, multiplicity)`, 0-based.
fn diagram_edges(ty: SimpleType) -> Vec<(usize, usize, i64)> {
    let r = ty.rank;
    let path = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect::<Vec<_>>();
    match ty.family {
        Family::A => path(r),
        Family::B => {
            let mut v = path(r - 1);
            v.push((r - 2, r - 1, 2));
            v
        }
        Family::C => {
            let mut v = path(r - 1);
            if r >= 2 {
                v.push((r - 1, r - 2, 2));
            }
            v
        }
        Family::D => {
            let mut v = path(r - 1);
            v.push((r - 3, r - 1, 1));
            v
        }
        Family::E => {
            let mut v = vec![(0, 2, 1), (2, 3, 1), (1, 3, 1)];
            v.extend((3..r - 1).map(|i| (i, i + 1, 1)));
            v
        }
        Family::F => vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
        Family::G => vec![(1, 0, 3)],
    }
}

/// Cartan matrix and squared root lengths derived only from the diagram.
fn cartan_from_diagram(ty: SimpleType) -> (Vec<Vec<i64>>, Vec<Q>) {
    let r = ty.rank;
    let edges = diagram_edges(ty);
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, m) in &edges {
        a[i][j] = -m;
        a[j][i] = -1;
    }
    // Propagate relative lengths along the (tree-shaped) diagram.
    let mut len: Vec<Option<Q>> = vec![None; r];
    len[0] = Some(Q::one());
    let mut changed = true;
    while changed {
        changed = false;
        for &(i, j, m) in &edges {
            match (len[i], len[j]) {
                (Some(li), None) => {
                    len[j] = Some(li / q(m));
                    changed = true;
                }
                (None, Some(lj)) => {
                    len[i] = Some(lj * q(m));
                    changed = true;
                }
                _ => {}
            }
        }
    }
    let len: Vec<Q> = len.into_iter().map(|l| l.unwrap_or_else(Q::one)).collect();
    let longest = len.iter().copied().max().unwrap();
    let sq = len.iter().map(|l| q(2) * l / longest).collect();
    (a, sq)
}

impl RootSystem {
    pub fn build(ty: SimpleType) -> Result<RootSystem> {
        let ty = SimpleType::new(ty.family, ty.rank)?;
        let r = ty.rank;
        let (simple_roots, dim, scale) = realization(ty);
        let ip = |x: &RVec, y: &RVec| scale * x.dot(y);

        let simple_coroots: Vec<RVec> = simple_roots
            .iter()
            .map(|a| a.scale(q(2) / ip(a, a)))
            .collect();
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v = ip(&simple_roots[i], &simple_coroots[j]);
                if !v.is_integer() {
                    return Err(Error::Inconsistent(format!("non-integral Cartan entry in {ty}")));
                }
                cartan[i][j] = v.to_integer();
            }
        }
        let (diagram_cartan, diagram_lengths) = cartan_from_diagram(ty);
        if diagram_cartan != cartan {
            return Err(Error::Inconsistent(format!(
                "Cartan matrix of {ty} disagrees with its diagram"
            )));
        }

        let aq = linalg::to_q(&cartan);
        let ainv = linalg::inverse(&aq)
            .ok_or_else(|| Error::Inconsistent(format!("singular Cartan matrix for {ty}")))?;
        let atinv = linalg::transpose(&ainv);
        let fund_weights: Vec<RVec> = ainv
            .iter()
            .map(|row| linalg::combine(&simple_roots, row, dim))
            .collect();
        let fund_coweights: Vec<RVec> = atinv
            .iter()
            .map(|row| linalg::combine(&simple_coroots, row, dim))
            .collect();

        // Gram of fundamental coweights, computed from Cartan data alone:
        // <a_k^v, a_l^v> = 2 A_kl / |a_k|^2.
        let coroot_gram: QMat = (0..r)
            .map(|k| (0..r).map(|l| q(2) * aq[k][l] / diagram_lengths[k]).collect())
            .collect();
        let gram = linalg::mat_mul(&linalg::mat_mul(&atinv, &coroot_gram), &ainv);
        let ambient_gram = linalg::gram(&fund_coweights, ip);
        if gram != ambient_gram {
            return Err(Error::Inconsistent(format!(
                "coweight Gram matrix of {ty} disagrees with the ambient inner product"
            )));
        }
        for (i, a) in simple_roots.iter().enumerate() {
            if ip(a, a) != diagram_lengths[i] {
                return Err(Error::Inconsistent(format!("root lengths of {ty} disagree")));
            }
        }

        // Close the simple roots under simple reflections.
        let mut seen: BTreeSet<RVec> = simple_roots.iter().cloned().collect();
        let mut frontier: Vec<RVec> = simple_roots.clone();
        while let Some(v) = frontier.pop() {
            for (a, av) in simple_roots.iter().zip(&simple_coroots) {
                let w = &v - &a.scale(ip(&v, av));
                if seen.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        let all_roots: Vec<RVec> = seen.into_iter().collect();
        let expected = match ty.family {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::E => [72, 126, 240][r - 6],
            Family::F => 48,
            Family::G => 12,
        };
        if all_roots.len() != expected {
            return Err(Error::Inconsistent(format!(
                "{ty} has {} roots, expected {expected}",
                all_roots.len()
            )));
        }

        let height = |v: &RVec| -> Q { fund_coweights.iter().map(|c| ip(v, c)).sum() };
        let highest_root = all_roots
            .iter()
            .max_by_key(|v| height(v))
            .cloned()
            .unwrap();
        let marks: Vec<i64> = fund_coweights
            .iter()
            .map(|c| ip(&highest_root, c).to_integer())
            .collect();
        let comarks: Vec<i64> = fund_weights
            .iter()
            .map(|w| ip(&highest_root, w).to_integer())
            .collect();
        if ip(&highest_root, &highest_root) != q(2) {
            return Err(Error::Inconsistent(format!("highest root of {ty} is not of squared length 2")));
        }

        Ok(RootSystem {
            ty,
            dim,
            scale,
            simple_roots,
            simple_coroots,
            highest_root,
            marks,
            comarks,
            cartan,
            gram,
            fund_weights,
            fund_coweights,
            all_roots,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Factor relating the basic inner product to the ambient dot product.
    pub fn scale(&self) -> Q {
        self.scale
    }

    pub fn simple_roots(&self) -> &[RVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[RVec] {
        &self.simple_coroots
    }

    pub fn highest_root(&self) -> &RVec {
        &self.highest_root
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `gram[i][j] = <λ_i^v, λ_j^v>`.
    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    pub fn fundamental_weights(&self) -> &[RVec] {
        &self.fund_weights
    }

    pub fn fundamental_coweights(&self) -> &[RVec] {
        &self.fund_coweights
    }

    pub fn all_roots(&self) -> &[RVec] {
        &self.all_roots
    }

    pub fn inner(&self, x: &RVec, y: &RVec) -> Result<Q> {
        for v in [x, y] {
            if v.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.dim(),
                });
            }
        }
        Ok(self.ip(x, y))
    }

    pub(crate) fn ip(&self, x: &RVec, y: &RVec) -> Q {
        self.scale * x.dot(y)
    }

    pub fn coroot(&self, alpha: &RVec) -> RVec {
        alpha.scale(q(2) / self.ip(alpha, alpha))
    }

    /// `<λ, α_i^v>` for each simple coroot.
    pub fn to_dynkin_labels(&self, lambda: &RVec) -> Vec<Q> {
        self.simple_coroots.iter().map(|c| self.ip(lambda, c)).collect()
    }

    pub fn from_dynkin_labels(&self, labels: &[Q]) -> Result<RVec> {
        self.check_len(labels.len())?;
        Ok(linalg::combine(&self.fund_weights, labels, self.dim))
    }

    /// `<μ, α_i>`: coordinates of a coweight in the fundamental coweight basis.
    pub fn to_coweight_coords(&self, mu: &RVec) -> Vec<Q> {
        self.simple_roots.iter().map(|a| self.ip(mu, a)).collect()
    }

    pub fn from_coweight_coords(&self, coords: &[Q]) -> Result<RVec> {
        self.check_len(coords.len())?;
        Ok(linalg::combine(&self.fund_coweights, coords, self.dim))
    }

    /// Coefficients of a vector in the simple-root basis.
    pub fn root_coords(&self, v: &RVec) -> Vec<Q> {
        self.fund_coweights.iter().map(|c| self.ip(v, c)).collect()
    }

    /// Coefficients of a vector in the simple-coroot basis.
    pub fn coroot_coords(&self, v: &RVec) -> Vec<Q> {
        self.fund_weights.iter().map(|w| self.ip(v, w)).collect()
    }

    pub fn is_dominant(&self, v: &RVec) -> bool {
        self.simple_roots.iter().all(|a| self.ip(v, a) >= Q::zero())
    }

    /// True when `μ` pairs integrally with every root.
    pub fn in_coweight_lattice(&self, mu: &RVec) -> bool {
        mu.dim() == self.dim && self.to_coweight_coords(mu).iter().all(|c| c.is_integer()) && self.in_span(mu)
    }

    /// True when `μ` is an integral combination of simple coroots.
    pub fn in_coroot_lattice(&self, mu: &RVec) -> bool {
        mu.dim() == self.dim && self.coroot_coords(mu).iter().all(|c| c.is_integer()) && self.in_span(mu)
    }

    // A vector lies in the span iff it is recovered from its root coordinates.
    fn in_span(&self, v: &RVec) -> bool {
        linalg::combine(&self.simple_roots, &self.root_coords(v), self.dim) == *v
    }

    /// Reflection of `v` in the hyperplane orthogonal to the root `alpha`.
    pub fn reflect(&self, alpha: &RVec, v: &RVec) -> RVec {
        let c = self.ip(v, &self.coroot(alpha));
        v - &alpha.scale(c)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: n,
            })
        }
    }
}
