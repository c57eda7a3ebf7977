//! Small exact linear algebra over the rationals and the integers.
//!
//! Everything here is dense and cubic; the matrices involved never exceed
//! the rank of a simple Lie algebra.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: Q) -> Q {
    x - x.floor()
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// A vector with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RVec(pub Vec<Q>);

impl RVec {
    pub fn zero(dim: usize) -> Self {
        RVec(vec![Q::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Q::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        RVec(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Q) -> Self {
        RVec(self.0.iter().map(|x| x * c).collect())
    }

    pub fn dot(&self, other: &Self) -> Q {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }
}

impl Add for &RVec {
    type Output = RVec;
    fn add(self, rhs: &RVec) -> RVec {
        RVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RVec {
    type Output = RVec;
    fn sub(self, rhs: &RVec) -> RVec {
        RVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RVec {
    type Output = RVec;
    fn neg(self) -> RVec {
        RVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub type QMat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> QMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> QMat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + row[k] * b[k][j]))
                .collect()
        })
        .collect()
}

pub fn to_q(m: &[Vec<i64>]) -> QMat {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<QMat> {
    let n = m.len();
    let mut a: QMat = m.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

pub fn determinant(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: QMat = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if !f.is_zero() {
                for j in col..n {
                    let v = a[col][j];
                    a[r][j] -= f * v;
                }
            }
        }
    }
    det
}

/// Gram matrix of `vs` under `inner`.
pub fn gram<F: Fn(&RVec, &RVec) -> Q>(vs: &[RVec], inner: F) -> QMat {
    vs.iter()
        .map(|a| vs.iter().map(|b| inner(a, b)).collect())
        .collect()
}

/// Coordinates of `v` in terms of `basis` (linearly independent, possibly
/// spanning a proper subspace). Returns `None` if `v` is not in the span.
pub fn coordinates<F: Fn(&RVec, &RVec) -> Q>(basis: &[RVec], v: &RVec, inner: F) -> Option<Vec<Q>> {
    let g = gram(basis, &inner);
    let ginv = inverse(&g)?;
    let rhs: Vec<Q> = basis.iter().map(|b| inner(b, v)).collect();
    let c: Vec<Q> = ginv
        .iter()
        .map(|row| row.iter().zip(&rhs).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect();
    let recon = combine(basis, &c, v.dim());
    (recon == *v).then_some(c)
}

/// `Σ c_i b_i`.
pub fn combine(basis: &[RVec], c: &[Q], dim: usize) -> RVec {
    basis
        .iter()
        .zip(c)
        .fold(RVec::zero(dim), |acc, (b, &ci)| &acc + &b.scale(ci))
}

pub fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Q>>(xs: I) -> i64 {
    xs.into_iter().fold(1i64, |acc, x| acc.lcm(x.denom()))
}

/// Row-style Hermite normal form of the lattice generated by `rows`.
///
/// Returns the non-zero rows: upper triangular, positive pivots, entries
/// above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        for i in r + 1..rows.len() {
            while rows[i][c] != 0 {
                let quot = rows[r][c].div_euclid(rows[i][c]);
                let (top, bottom) = rows.split_at_mut(i);
                for (x, y) in top[r].iter_mut().zip(&bottom[0]) {
                    *x -= quot * y;
                }
                rows.swap(r, i);
            }
        }
        if rows[r][c] == 0 {
            continue;
        }
        if rows[r][c] < 0 {
            rows[r].iter_mut().for_each(|x| *x = -*x);
        }
        let pivot = rows[r][c];
        for i in 0..r {
            let quot = rows[i][c].div_euclid(pivot);
            if quot != 0 {
                let (top, bottom) = rows.split_at_mut(r);
                for (x, y) in top[i].iter_mut().zip(&bottom[0]) {
                    *x -= quot * y;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|&x| x != 0));
    rows
}

pub fn abs_det_int(m: &[Vec<i64>]) -> i64 {
    let d = determinant(&to_q(m));
    debug_assert!(d.is_integer());
    d.abs().to_integer()
}

pub fn signum_nonneg(x: &Q) -> bool {
    !x.is_negative()
}
