//! Exact linear algebra over Q and a little over Z.
//!
//! Subspaces are always stored by their reduced row-echelon basis, so two
//! [`Subspace`]s are equal iff their bases are equal.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{rat, Rat};

pub type QVec = Vec<Rat>;

pub fn to_qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Pairing of an integer covector with a rational vector.
pub fn pair(cov: &[i64], v: &[Rat]) -> Rat {
    cov.iter().zip(v).filter(|(c, _)| **c != 0).fold(Rat::zero(), |acc, (c, x)| acc + rat(*c) * x)
}

pub fn pair_int(cov: &[i64], v: &[i64]) -> i64 {
    cov.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Reduce `rows` to reduced row-echelon form, dropping zero rows.
/// Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<QVec>) -> (Vec<QVec>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<QVec>) -> usize {
    rref(rows).0.len()
}

/// Basis of `{x : rows · x = 0}` in `Q^ncols`.
pub fn kernel(rows: Vec<QVec>, ncols: usize) -> Vec<QVec> {
    let (red, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Solve `x · rows = target` for a row vector `x` (i.e. express `target` as a
/// combination of `rows`). Returns `None` if `target` is not in the span.
pub fn express_in_span(rows: &[QVec], target: &[Rat]) -> Option<QVec> {
    let n = rows.len();
    let m = target.len();
    // Columns = rows, augmented by target: solve A^T x = target.
    let mut aug: Vec<QVec> = (0..m)
        .map(|j| {
            let mut r: QVec = rows.iter().map(|row| row[j].clone()).collect();
            r.push(target[j].clone());
            r
        })
        .collect();
    if aug.is_empty() {
        return Some(vec![Rat::zero(); n]);
    }
    let (red, pivots) = rref(std::mem::take(&mut aug));
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Scale a rational vector to a primitive integer vector (same direction).
pub fn primitive(v: &[Rat]) -> Vec<i64> {
    let lcm = v.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            i64::try_from(y).expect("primitive vector entry overflows i64")
        })
        .collect()
}

/// Primitive integer covector up to sign: first nonzero entry positive.
pub fn normalize_hyperplane(v: &[Rat]) -> Vec<i64> {
    let mut p = primitive(v);
    if p.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        for x in p.iter_mut() {
            *x = -*x;
        }
    }
    p
}

/// A rational subspace of `Q^ambient`, stored by its RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<QVec>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        let (basis, pivots) = rref(vectors);
        Subspace { ambient, basis, pivots }
    }

    pub fn span_int(ambient: usize, vectors: &[Vec<i64>]) -> Self {
        Self::span(ambient, vectors.iter().map(|v| to_qvec(v)).collect())
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![], pivots: vec![] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<QVec> {
        let c: QVec = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let recon = self.from_coords(&c);
        (recon.as_slice() == v).then_some(c)
    }

    pub fn from_coords(&self, c: &[Rat]) -> QVec {
        let mut v = vec![Rat::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x += ci * y;
            }
        }
        v
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Does the integer covector vanish on the whole subspace?
    pub fn annihilated_by(&self, cov: &[i64]) -> bool {
        self.basis.iter().all(|b| pair(cov, b).is_zero())
    }

    /// Restriction of an integer covector to the subspace, in echelon coordinates.
    pub fn restrict(&self, cov: &[i64]) -> QVec {
        self.basis.iter().map(|b| pair(cov, b)).collect()
    }

    /// Intersection with the kernel of a covector.
    pub fn intersect_kernel(&self, cov: &[i64]) -> Subspace {
        let r = self.restrict(cov);
        let ker = kernel(vec![r], self.dim());
        Subspace::span(self.ambient, ker.iter().map(|c| self.from_coords(c)).collect())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = sum a_i b_i = sum c_j d_j
        let k = self.dim();
        let l = other.dim();
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient);
        }
        let rows: Vec<QVec> = (0..self.ambient)
            .map(|row| {
                let mut r: QVec = self.basis.iter().map(|b| b[row].clone()).collect();
                r.extend(other.basis.iter().map(|d| -d[row].clone()));
                r
            })
            .collect();
        let ker = kernel(rows, k + l);
        Subspace::span(self.ambient, ker.iter().map(|c| self.from_coords(&c[..k])).collect())
    }

    /// Image under an integer matrix acting on column vectors.
    pub fn image(&self, m: &IntMatrix) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().map(|b| m.apply_q(b)).collect())
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        IntMatrix { n, data: rows.concat() }
    }

    /// `I - v ⊗ cov`: the reflection `x ↦ x - <cov, x> v`.
    pub fn reflection(cov: &[i64], v: &[i64]) -> Self {
        let n = cov.len();
        let mut m = Self::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] -= v[i] * cov[j];
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.data[i * self.n + j] * v[j]).sum()).collect()
    }

    pub fn apply_q(&self, v: &[Rat]) -> QVec {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(Rat::zero(), |acc, j| {
                    let a = self.data[i * self.n + j];
                    if a == 0 {
                        acc
                    } else {
                        acc + rat(a) * &v[j]
                    }
                })
            })
            .collect()
    }

    /// Row covector times matrix: `cov ↦ cov · M`.
    pub fn covector_times(&self, cov: &[i64]) -> Vec<i64> {
        (0..self.n).map(|j| (0..self.n).map(|i| cov[i] * self.data[i * self.n + j]).sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Determinant by exact rational elimination.
    pub fn det(&self) -> i64 {
        let mut rows: Vec<QVec> = self.rows().iter().map(|r| to_qvec(r)).collect();
        let n = self.n;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
                return 0;
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            det *= &rows[c][c];
            let pivot = rows[c].clone();
            for row in rows.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        i64::try_from(det.to_integer()).expect("determinant overflow")
    }
}

/// Row-style Hermite reduction over Z.
///
/// Returns a unimodular `p` (with inverse `p_inv`) such that the rows of
/// `p · b` below `rank` are zero, where `b` is `rows × cols`.
pub fn integer_row_reduce(b: &[Vec<i64>], rows: usize, cols: usize) -> (Vec<Vec<i128>>, Vec<Vec<i128>>, usize) {
    let mut a: Vec<Vec<i128>> = b.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut p: Vec<Vec<i128>> = (0..rows).map(|i| (0..rows).map(|j| i128::from(i == j)).collect()).collect();
    let mut p_inv = p.clone();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Smallest nonzero |entry| in column c at or below row r.
            let Some(piv) = (r..rows).filter(|&i| a[i][c] != 0).min_by_key(|&i| a[i][c].abs()) else {
                break;
            };
            swap_rows(&mut a, &mut p, &mut p_inv, r, piv);
            let mut done = true;
            for i in (r + 1)..rows {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    add_row(&mut a, &mut p, &mut p_inv, i, r, -q);
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][c] != 0 {
            r += 1;
        }
    }
    (p, p_inv, r)
}

fn swap_rows(a: &mut [Vec<i128>], p: &mut [Vec<i128>], p_inv: &mut [Vec<i128>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    p.swap(i, j);
    // P' = E P with E the swap; (E P)^{-1} = P^{-1} E: swap columns.
    for row in p_inv.iter_mut() {
        row.swap(i, j);
    }
}

/// row_i += k * row_j
fn add_row(a: &mut [Vec<i128>], p: &mut [Vec<i128>], p_inv: &mut [Vec<i128>], i: usize, j: usize, k: i128) {
    for m in [a, p] {
        let src = m[j].clone();
        for (x, y) in m[i].iter_mut().zip(&src) {
            *x += k * y;
        }
    }
    // Inverse: column_j -= k * column_i.
    for row in p_inv.iter_mut() {
        let v = row[i];
        row[j] -= k * v;
    }
}

/// Whether `x` lies in the Z-span of `gens` (all of length `x.len()`).
pub fn lattice_contains(gens: &[Vec<i64>], x: &[i64]) -> bool {
    let n = x.len();
    let (p, _, r) = integer_row_reduce(gens, gens.len(), n);
    // Rows of p·gens are an echelon basis of the same lattice.
    let h: Vec<Vec<i128>> = p[..r]
        .iter()
        .map(|row| (0..n).map(|j| row.iter().zip(gens).map(|(c, g)| c * g[j] as i128).sum()).collect())
        .collect();
    let mut rest: Vec<i128> = x.iter().map(|&v| v as i128).collect();
    for row in &h {
        let pivot = row.iter().position(|&v| v != 0).expect("echelon rows are nonzero");
        if rest[pivot] % row[pivot] != 0 {
            return false;
        }
        let k = rest[pivot] / row[pivot];
        for (a, b) in rest.iter_mut().zip(row) {
            *a -= k * b;
        }
    }
    rest.iter().all(|&v| v == 0)
}
