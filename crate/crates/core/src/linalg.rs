//! Exact rational linear algebra: ranks, kernels and a lattice of subspaces.
//!
//! Every subspace is stored in reduced row-echelon form, which is unique for a
//! given subspace. Two equal subspaces therefore compare equal with `==`
//! regardless of how they were generated.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Sparse row: `(column, value)` pairs sorted by column, never storing zeros.
pub(crate) type SparseRow = Vec<(usize, Rat)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn to_sparse(v: &[Rat]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub(crate) fn to_dense(row: &SparseRow, n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (i, x) in row {
        out[*i] = x.clone();
    }
    out
}

/// `a - c * b` for sparse rows.
pub(crate) fn sparse_axpy(a: &SparseRow, c: &Rat, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn sparse_get(row: &SparseRow, col: usize) -> Option<&Rat> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &row[k].1)
}

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows are kept sorted by pivot column with a leading 1 and zeros in every
/// other pivot column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    ambient: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `row` after eliminating every pivot column.
    pub(crate) fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for (k, p) in self.pivots.iter().enumerate() {
            if let Some(c) = sparse_get(&row, *p).cloned() {
                row = sparse_axpy(&row, &c, &self.rows[k]);
            }
        }
        row
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub(crate) fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = self.reduce(row);
        let Some((lead, lead_val)) = row.first().cloned() else {
            return false;
        };
        if !lead_val.is_one() {
            let inv = lead_val.recip();
            for (_, x) in row.iter_mut() {
                *x *= &inv;
            }
        }
        for existing in self.rows.iter_mut() {
            if let Some(c) = sparse_get(existing, lead).cloned() {
                *existing = sparse_axpy(existing, &c, &row);
            }
        }
        let at = self.pivots.partition_point(|p| *p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, row);
        true
    }

    pub(crate) fn into_basis(self) -> SubspaceBasis {
        let n = self.ambient;
        SubspaceBasis {
            ambient_dim: n,
            vectors: self.rows.iter().map(|r| to_dense(r, n)).collect(),
            pivots: self.pivots,
        }
    }
}

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<Rat>>) -> Result<Self, LinalgError> {
        for (row, r) in data.iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::RaggedRow {
                    row,
                    len: r.len(),
                    expected: cols,
                });
            }
        }
        Ok(RatMatrix {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|x| rat(*x)).collect())
            .collect();
        RatMatrix::from_rows(cols, data).expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        self.data
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub(crate) fn sparse_rows(&self) -> impl Iterator<Item = SparseRow> + '_ {
        self.data.iter().map(|r| to_sparse(r))
    }

    /// Inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut ech = Echelon::new(2 * n);
        for (i, r) in self.data.iter().enumerate() {
            let mut row = to_sparse(r);
            row.push((n + i, Rat::one()));
            ech.insert(row);
        }
        if ech.rank() != n || ech.pivots.iter().any(|p| *p >= n) {
            return None;
        }
        let data = ech
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![Rat::zero(); n];
                for (c, x) in r {
                    if *c >= n {
                        out[c - n] = x.clone();
                    }
                }
                out
            })
            .collect();
        Some(RatMatrix { rows: n, cols: n, data })
    }
}

/// Canonical basis of a subspace of `Q^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    #[serde(with = "rat_rows_serde")]
    vectors: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let m = RatMatrix::identity(ambient_dim);
        SubspaceBasis {
            ambient_dim,
            vectors: m.data,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical basis of the span of `gens`. Vectors of the wrong length are
    /// rejected.
    pub fn span<I>(ambient_dim: usize, gens: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator,
        I::Item: AsRef<[Rat]>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for g in gens {
            let g = g.as_ref();
            if g.len() != ambient_dim {
                return Err(LinalgError::AmbientMismatch {
                    left: ambient_dim,
                    right: g.len(),
                });
            }
            ech.insert(to_sparse(g));
        }
        Ok(ech.into_basis())
    }

    pub(crate) fn from_sparse<I: IntoIterator<Item = SparseRow>>(ambient_dim: usize, gens: I) -> Self {
        let mut ech = Echelon::new(ambient_dim);
        for g in gens {
            ech.insert(g);
        }
        ech.into_basis()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn echelon(&self) -> Echelon {
        Echelon {
            ambient: self.ambient_dim,
            rows: self.vectors.iter().map(|v| to_sparse(v)).collect(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        v.len() == self.ambient_dim && self.echelon().reduce(to_sparse(v)).is_empty()
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is not in the
    /// subspace. For a reduced echelon basis these are the pivot entries.
    pub fn coordinates(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|p| v[*p].clone()).collect())
    }

    /// Linear combination of basis vectors.
    pub fn combine(&self, coeffs: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.ambient_dim];
        for (c, v) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors.iter().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &SubspaceBasis) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        self.check_ambient(other)?;
        let mut ech = self.echelon();
        for v in &other.vectors {
            ech.insert(to_sparse(v));
        }
        Ok(ech.into_basis())
    }

    /// Intersection by the Zassenhaus algorithm: reduce `[a | a]` stacked
    /// on `[b | 0]`; rows with an empty left half span `a ∩ b`.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let mut ech = Echelon::new(2 * n);
        for v in &self.vectors {
            let s = to_sparse(v);
            let mut row = s.clone();
            row.extend(s.into_iter().map(|(c, x)| (c + n, x)));
            ech.insert(row);
        }
        for v in &other.vectors {
            ech.insert(to_sparse(v));
        }
        let gens = ech
            .rows
            .iter()
            .zip(&ech.pivots)
            .filter(|(_, p)| **p >= n)
            .map(|(r, _)| r.iter().map(|(c, x)| (c - n, x.clone())).collect::<SparseRow>());
        Ok(SubspaceBasis::from_sparse(n, gens))
    }
}

/// Rank of `m` and a canonical basis of its right kernel.
pub fn rank_and_kernel(m: &RatMatrix) -> (usize, SubspaceBasis) {
    let ker = kernel_of_rows(m.cols, m.sparse_rows());
    (m.cols - ker.dim(), ker)
}

/// Kernel of the matrix whose rows are given sparsely.
///
/// Fraction-free Gauss-Jordan over the integers: after elimination every
/// pivot entry equals the last pivot `d`, so free column `f` gives the
/// kernel vector with `d` at `f` and `-a[k][f]` at pivot `k`.
pub(crate) fn kernel_of_rows<I: IntoIterator<Item = SparseRow>>(cols: usize, rows: I) -> SubspaceBasis {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| integer_row(&to_dense(&r, cols)))
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(i) = (r..a.len()).find(|i| !a[*i][c].is_zero()) else {
            continue;
        };
        a.swap(i, r);
        let (head, tail) = a.split_at_mut(r);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        let p = prow[c].clone();
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let f = std::mem::take(&mut row[c]);
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let mut v = &p * &row[j];
                if !f.is_zero() && !prow[j].is_zero() {
                    v -= &f * &prow[j];
                }
                if !v.is_zero() {
                    v /= &prev;
                }
                row[j] = v;
            }
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    let mut is_pivot = vec![false; cols];
    for p in &pivots {
        is_pivot[*p] = true;
    }
    let d = Rat::from_integer(prev);
    let gens = (0..cols).filter(|c| !is_pivot[*c]).map(|free| {
        let mut v: SparseRow = vec![(free, d.clone())];
        for (k, p) in pivots.iter().enumerate() {
            if !a[k][free].is_zero() {
                v.push((*p, Rat::from_integer(-a[k][free].clone())));
            }
        }
        v.sort_by_key(|(c, _)| *c);
        v
    });
    SubspaceBasis::from_sparse(cols, gens)
}

pub fn rank(m: &RatMatrix) -> usize {
    let int_rows: Vec<Vec<BigInt>> = m.data.iter().map(|r| integer_row(r)).collect();
    integer_rank(int_rows)
}

/// One solution of `m x = b`, free variables set to zero; `None` when the
/// system is inconsistent.
pub fn solve(m: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(b.len(), m.rows, "right-hand side length");
    let n = m.cols;
    let mut ech = Echelon::new(n + 1);
    for (r, rhs) in m.sparse_rows().zip(b) {
        let mut row = r;
        if !rhs.is_zero() {
            row.push((n, rhs.clone()));
        }
        ech.insert(row);
    }
    if ech.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (row, p) in ech.rows.iter().zip(&ech.pivots) {
        if let Some(v) = sparse_get(row, n) {
            x[*p] = v.clone();
        }
    }
    Some(x)
}

/// Scales a rational row to a primitive integer row.
pub(crate) fn integer_row(r: &[Rat]) -> Vec<BigInt> {
    let l = r
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    r.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|i| !a[*i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Determinant of a square rational matrix (fraction-free).
pub fn determinant(m: &RatMatrix) -> Rat {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rat::one();
    }
    let mut scale = Rat::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in &m.data {
        let ir = integer_row(r);
        let nz = r.iter().zip(&ir).find(|(x, _)| !x.is_zero());
        if let Some((x, i)) = nz {
            // ir = x_row * (i / x)
            scale *= Rat::new(i.clone(), BigInt::one()) / x;
        }
        a.push(ir);
    }
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for c in 0..n {
        let Some(p) = (c..n).find(|i| !a[*i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(c, p);
            sign = -sign;
        }
        let (head, tail) = a.split_at_mut(c + 1);
        let pivot_row = &head[c];
        let piv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..n {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
    }
    let det = Rat::from_integer(a[n - 1][n - 1].clone()) / scale;
    if sign < 0 {
        -det
    } else {
        det
    }
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// Serializes rational rows as strings (`"p"` or `"p/q"`).
pub mod rat_rows_serde {
    use super::{fmt_rat, parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for r in rows {
            let strs: Vec<String> = r.iter().map(fmt_rat).collect();
            seq.serialize_element(&strs)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rat>>, D::Error> {
        let raw: Vec<Vec<String>> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|s| parse_rat(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
                    .collect()
            })
            .collect()
    }
}

/// Serializes a single rational vector as strings.
pub mod rat_vec_serde {
    use super::{fmt_rat, parse_rat, Rat};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|s| parse_rat(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|x| rat(*x)).collect()
    }

    #[test]
    fn identity_has_full_rank() {
        let (r, k) = rank_and_kernel(&RatMatrix::identity(2));
        assert_eq!((r, k.dim()), (2, 0));
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (r, k) = rank_and_kernel(&RatMatrix::zeros(3, 3));
        assert_eq!(r, 0);
        assert_eq!(k, SubspaceBasis::full(3));
    }

    #[test]
    fn empty_matrix() {
        let m = RatMatrix::zeros(0, 4);
        let (r, k) = rank_and_kernel(&m);
        assert_eq!((r, k.dim()), (0, 4));
    }

    #[test]
    fn rank_one_kernel() {
        // Hand elimination: [[1,2],[2,4]] -> [[1,2],[0,0]]; kernel x = -2y,
        // canonical form (1, -1/2), i.e. the line through (2, -1).
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, k) = rank_and_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k.vectors(), &[vec![rat(1), Rat::new(BigInt::from(-1), BigInt::from(2))]]);
        assert!(k.contains(&v(&[2, -1])));
    }

    #[test]
    fn sum_and_intersection_small() {
        let e1 = SubspaceBasis::span(3, [v(&[1, 0, 0])]).unwrap();
        let e2 = SubspaceBasis::span(3, [v(&[0, 1, 0])]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        assert_eq!(e1.sum(&e1).unwrap(), e1);

        let a = SubspaceBasis::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = SubspaceBasis::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), e2);
        assert_eq!(a.intersect(&SubspaceBasis::full(3)).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = SubspaceBasis::full(2);
        let b = SubspaceBasis::full(3);
        assert!(matches!(a.sum(&b), Err(LinalgError::AmbientMismatch { .. })));
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let m = RatMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let x = solve(&m, &v(&[3, 2])).unwrap();
        assert_eq!(x, v(&[1, 1]));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        let sing = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert!(solve(&sing, &v(&[1, 0])).is_none());
    }

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(determinant(&RatMatrix::from_i64(&[&[2, 1], &[1, 1]])), rat(1));
        assert_eq!(determinant(&RatMatrix::from_i64(&[&[0, 1], &[1, 0]])), rat(-1));
        let m = RatMatrix::from_rows(
            2,
            vec![
                vec![Rat::new(1.into(), 2.into()), rat(3)],
                vec![rat(1), Rat::new(1.into(), 3.into())],
            ],
        )
        .unwrap();
        // 1/6 - 3
        assert_eq!(determinant(&m), Rat::new((-17).into(), 6.into()));
    }

    #[test]
    fn bareiss_rank() {
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(6)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)],
        ];
        assert_eq!(integer_rank(rows), 2);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-3/6"), Some(Rat::new((-1).into(), 2.into())));
        assert_eq!(parse_rat("7"), Some(rat(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(fmt_rat(&Rat::new(4.into(), (-6).into())), "-2/3");
    }
}
