//! Lie algebras given by exact structure constants.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::linalg::{
    fmt_rat, kernel_of_rows, rat, sparse_axpy, to_dense, to_sparse, Rat, SparseRow, SubspaceBasis,
};
use crate::classical::MatrixRealization;
use crate::roots::{build_root_system, chevalley_structure_constants, CartanType, Root, RootSystemInfo};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("element belongs to a different algebra")]
    AlgebraMismatch,
    #[error("coordinate vector has length {got}, algebra has dimension {dim}")]
    BadLength { got: usize, dim: usize },
    #[error("subspace is not closed under the bracket: [b{0}, b{1}] leaves it")]
    NotSubalgebra(usize, usize),
    #[error("algebra has no root data")]
    NoRootData,
}

/// Root-space bookkeeping for algebras built from a root system.
#[derive(Clone, Debug)]
pub struct RootData {
    pub root_system: RootSystemInfo,
    /// Basis index of the simple coroot `h_i`.
    pub cartan: Vec<usize>,
    /// Basis index of the root vector for positive root `k`.
    pub positive: Vec<usize>,
    /// Basis index of the root vector for the negative of positive root `k`.
    pub negative: Vec<usize>,
    /// Root of each basis element (`None` for Cartan elements).
    pub weights: Vec<Option<Root>>,
}

impl RootData {
    pub fn rank(&self) -> usize {
        self.root_system.rank
    }

    pub fn basis_index(&self, r: Root) -> usize {
        if r.positive {
            self.positive[r.index]
        } else {
            self.negative[r.index]
        }
    }

    /// Root coordinates of basis element `i` (zero vector for Cartan elements).
    pub fn weight_coords(&self, i: usize) -> Vec<i64> {
        match self.weights[i] {
            Some(r) => self.root_system.coords(r),
            None => vec![0; self.rank()],
        }
    }
}

/// A finite-dimensional Lie algebra: basis labels plus the full bracket table.
pub struct LieAlgebraTable {
    id: u64,
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<SparseRow>>,
    killing: OnceLock<Vec<Vec<Rat>>>,
    roots: Option<RootData>,
    matrix: Option<MatrixRealization>,
}

impl fmt::Debug for LieAlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebraTable")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .finish()
    }
}

/// An element of a specific algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement {
    algebra: u64,
    coords: Vec<Rat>,
}

impl AlgElement {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> AlgElement {
        AlgElement {
            algebra: self.algebra,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement, AlgebraError> {
        if self.algebra != other.algebra {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(AlgElement {
            algebra: self.algebra,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }
}

impl LieAlgebraTable {
    /// Builds an algebra from `[b_i, b_j]` for `i < j`; the rest of the table
    /// follows by antisymmetry.
    pub fn from_brackets<I>(name: &str, labels: Vec<String>, brackets: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), Vec<(usize, Rat)>)>,
    {
        let n = labels.len();
        let mut table = vec![vec![SparseRow::new(); n]; n];
        for ((i, j), v) in brackets {
            assert!(i < j && j < n, "bracket index out of range");
            let mut v: SparseRow = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            v.sort_by_key(|(k, _)| *k);
            table[j][i] = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
            table[i][j] = v;
        }
        LieAlgebraTable {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            name: name.to_string(),
            labels,
            table,
            killing: OnceLock::new(),
            roots: None,
            matrix: None,
        }
    }

    pub(crate) fn with_roots(mut self, roots: RootData) -> Self {
        self.roots = Some(roots);
        self
    }

    pub(crate) fn with_matrix(mut self, m: MatrixRealization) -> Self {
        self.matrix = Some(m);
        self
    }

    pub fn matrix_realization(&self) -> Option<&MatrixRealization> {
        self.matrix.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn root_data(&self) -> Option<&RootData> {
        self.roots.as_ref()
    }

    pub fn rank(&self) -> Option<usize> {
        self.roots.as_ref().map(RootData::rank)
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.roots.as_ref().map(|r| r.root_system.cartan_type)
    }

    /// `[b_i, b_j]` as a sparse coordinate vector.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.table[i][j]
    }

    pub fn element(&self, coords: Vec<Rat>) -> Result<AlgElement, AlgebraError> {
        if coords.len() != self.dim() {
            return Err(AlgebraError::BadLength {
                got: coords.len(),
                dim: self.dim(),
            });
        }
        Ok(AlgElement { algebra: self.id, coords })
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement {
            algebra: self.id,
            coords: vec![Rat::zero(); self.dim()],
        }
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut e = self.zero();
        e.coords[i] = Rat::one();
        e
    }

    pub fn owns(&self, x: &AlgElement) -> bool {
        x.algebra == self.id
    }

    fn check(&self, x: &AlgElement) -> Result<(), AlgebraError> {
        if self.owns(x) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    /// Uniform integer coordinates in `[-bound, bound]`.
    pub fn random_element<R: Rng>(&self, rng: &mut R, bound: i64) -> AlgElement {
        let coords = (0..self.dim()).map(|_| rat(rng.gen_range(-bound..=bound))).collect();
        AlgElement { algebra: self.id, coords }
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        let ys: Vec<(usize, &Rat)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in &ys {
                let row = &self.table[i][*j];
                if row.is_empty() {
                    continue;
                }
                let c = xi * *yj;
                for (k, v) in row {
                    out[*k] += &c * v;
                }
            }
        }
        out
    }

    /// Rows of the matrix of `ad x`, sparse.
    pub(crate) fn ad_rows(&self, x: &[Rat]) -> Vec<SparseRow> {
        let n = self.dim();
        let mut rows: Vec<SparseRow> = vec![SparseRow::new(); n];
        for j in 0..n {
            let mut col = SparseRow::new();
            for (i, xi) in x.iter().enumerate() {
                if xi.is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                let scaled: SparseRow = self.table[i][j].iter().map(|(k, v)| (*k, v * xi)).collect();
                col = sparse_axpy(&col, &-Rat::one(), &scaled);
            }
            for (k, v) in col {
                rows[k].push((j, v));
            }
        }
        rows
    }

    /// Killing form, computed once.
    pub fn killing(&self) -> &Vec<Vec<Rat>> {
        self.killing.get_or_init(|| self.compute_killing())
    }

    fn compute_killing(&self) -> Vec<Vec<Rat>> {
        let n = self.dim();
        let mut k = vec![vec![Rat::zero(); n]; n];
        // Dense lookup of ad b_j entries: ad_j[l][m] = coefficient of b_m in [b_j, b_l].
        let dense: Vec<Vec<Vec<Rat>>> = (0..n)
            .map(|j| (0..n).map(|l| to_dense(&self.table[j][l], n)).collect())
            .collect();
        for i in 0..n {
            for j in i..n {
                if let Some(rd) = &self.roots {
                    let (wi, wj) = (rd.weight_coords(i), rd.weight_coords(j));
                    if wi.iter().zip(&wj).any(|(a, b)| a + b != 0) {
                        continue;
                    }
                }
                // tr(ad b_i ad b_j) = Σ_l Σ_m [b_i, b_l]_m [b_j, b_m]_l
                let mut s = Rat::zero();
                for l in 0..n {
                    for (m, c) in &self.table[i][l] {
                        let d = &dense[j][*m][l];
                        if !d.is_zero() {
                            s += c * d;
                        }
                    }
                }
                k[i][j] = s.clone();
                k[j][i] = s;
            }
        }
        k
    }

    /// `K(x, y)`.
    pub fn killing_pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let k = self.killing();
        let mut s = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !k[i][j].is_zero() {
                    s += xi * &k[i][j] * yj;
                }
            }
        }
        s
    }

    /// The functional `K(y, ·)` as a coordinate vector.
    pub fn killing_functional(&self, y: &[Rat]) -> Vec<Rat> {
        let k = self.killing();
        let n = self.dim();
        (0..n)
            .map(|j| {
                let mut s = Rat::zero();
                for (i, yi) in y.iter().enumerate() {
                    if !yi.is_zero() && !k[i][j].is_zero() {
                        s += yi * &k[i][j];
                    }
                }
                s
            })
            .collect()
    }

    /// Exact Jacobi check on one basis triple.
    pub fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.dim();
        let b = |t: usize| {
            let mut v = vec![Rat::zero(); n];
            v[t] = Rat::one();
            v
        };
        let (a, bb, c) = (b(i), b(j), b(k));
        let t1 = self.bracket_vec(&self.bracket_vec(&a, &bb), &c);
        let t2 = self.bracket_vec(&self.bracket_vec(&bb, &c), &a);
        let t3 = self.bracket_vec(&self.bracket_vec(&c, &a), &bb);
        t1.iter().zip(&t2).zip(&t3).all(|((x, y), z)| (x + y + z).is_zero())
    }

    /// `(ad x)^p = 0` for some `p ≤ max_power`.
    pub fn is_ad_nilpotent(&self, x: &[Rat], max_power: usize) -> bool {
        let n = self.dim();
        let mut span: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut v = vec![Rat::zero(); n];
                v[i] = Rat::one();
                v
            })
            .collect();
        for _ in 0..max_power {
            span = span
                .iter()
                .map(|v| self.bracket_vec(x, v))
                .filter(|v| v.iter().any(|c| !c.is_zero()))
                .collect();
            if span.is_empty() {
                return true;
            }
            span = SubspaceBasis::span(n, &span).expect("lengths match").vectors().to_vec();
        }
        false
    }

    pub fn format_vec(&self, v: &[Rat]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = &self.labels[i];
            let s = if c.is_one() {
                l.clone()
            } else if (-c).is_one() {
                format!("-{l}")
            } else {
                format!("{}*{l}", fmt_rat(c))
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    /// Basis index for a label such as `x14`, `y3` or `h2`.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

pub fn bracket(l: &LieAlgebraTable, x: &AlgElement, y: &AlgElement) -> Result<AlgElement, AlgebraError> {
    l.check(x)?;
    l.check(y)?;
    Ok(AlgElement {
        algebra: l.id,
        coords: l.bracket_vec(&x.coords, &y.coords),
    })
}

/// Split simple Lie algebra in a Chevalley basis.
///
/// Basis order: `x1..xN` (positive roots), `y1..yN` (negatives), `h1..hℓ`
/// (simple coroots).
pub fn chevalley_algebra(t: CartanType) -> LieAlgebraTable {
    let rs = build_root_system(t);
    let nc = chevalley_structure_constants(&rs);
    let np = rs.num_positive;
    let ell = rs.rank;
    let dim = 2 * np + ell;
    let mut labels = Vec::with_capacity(dim);
    labels.extend((1..=np).map(|k| format!("x{k}")));
    labels.extend((1..=np).map(|k| format!("y{k}")));
    labels.extend((1..=ell).map(|i| format!("h{i}")));

    let idx = |r: Root| if r.positive { r.index } else { np + r.index };
    let roots: Vec<Root> = (0..np).map(Root::pos).chain((0..np).map(Root::neg)).collect();
    let mut brackets = Vec::new();
    for (a_pos, &a) in roots.iter().enumerate() {
        for &b in &roots[a_pos + 1..] {
            let (i, j) = (idx(a), idx(b));
            if b == a.negate() {
                // [x_α, y_α] = h_α
                let co = rs.coroot(a.index);
                let sign = if a.positive { 1 } else { -1 };
                let v: Vec<(usize, Rat)> = co
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (2 * np + k, rat(sign * c)))
                    .collect();
                brackets.push(((i.min(j), i.max(j)), orient(i, j, v)));
            } else if let Some(s) = rs.sum(a, b) {
                let v = vec![(idx(s), rat(nc.n(a, b)))];
                brackets.push(((i.min(j), i.max(j)), orient(i, j, v)));
            }
        }
    }
    for &r in &roots {
        let c = rs.coords(r);
        for h in 0..ell {
            let v = rs.pairing(&c, h);
            if v != 0 {
                // [x_r, h] = -<r, α_h^∨> x_r with x_r before h in the basis.
                brackets.push(((idx(r), 2 * np + h), vec![(idx(r), rat(-v))]));
            }
        }
    }
    let weights = roots.iter().map(|r| Some(*r)).chain(std::iter::repeat(None).take(ell)).collect();
    let rd = RootData {
        cartan: (0..ell).map(|i| 2 * np + i).collect(),
        positive: (0..np).collect(),
        negative: (np..2 * np).collect(),
        weights,
        root_system: rs,
    };
    LieAlgebraTable::from_brackets(&t.to_string(), labels, brackets).with_roots(rd)
}

/// `[b_i, b_j] = v` stored with the smaller index first.
fn orient(i: usize, j: usize, v: Vec<(usize, Rat)>) -> Vec<(usize, Rat)> {
    if i < j {
        v
    } else {
        v.into_iter().map(|(k, c)| (k, -c)).collect()
    }
}

/// Kernel of the stacked ad-matrices of `elems`.
pub fn centralizer(l: &LieAlgebraTable, elems: &[AlgElement]) -> Result<SubspaceBasis, AlgebraError> {
    for e in elems {
        l.check(e)?;
    }
    Ok(centralizer_of_vectors(l, elems.iter().map(|e| e.coords.as_slice())))
}

pub(crate) fn centralizer_of_vectors<'a, I>(l: &LieAlgebraTable, elems: I) -> SubspaceBasis
where
    I: IntoIterator<Item = &'a [Rat]>,
{
    let n = l.dim();
    let rows = elems.into_iter().flat_map(|x| l.ad_rows(x)).filter(|r| !r.is_empty());
    kernel_of_rows(n, rows.collect::<Vec<_>>())
}

/// Elements of `sub` commuting with every element of `elems`.
pub fn centralizer_in(l: &LieAlgebraTable, sub: &SubspaceBasis, elems: &[Vec<Rat>]) -> SubspaceBasis {
    let n = l.dim();
    let d = sub.dim();
    // Column k of the stacked map is ([x, s_k])_x.
    let cols: Vec<Vec<Rat>> = sub
        .vectors()
        .iter()
        .map(|s| elems.iter().flat_map(|x| l.bracket_vec(x, s)).collect())
        .collect();
    let m = elems.len() * n;
    let mut rows: Vec<SparseRow> = vec![SparseRow::new(); m];
    for (k, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            if !v.is_zero() {
                rows[r].push((k, v.clone()));
            }
        }
    }
    let ker = kernel_of_rows(d, rows.into_iter().filter(|r| !r.is_empty()).collect::<Vec<_>>());
    let gens: Vec<Vec<Rat>> = ker.vectors().iter().map(|c| sub.combine(c)).collect();
    SubspaceBasis::span(n, &gens).expect("lengths match")
}

/// A bracket-closed subspace with structure constants in its own basis.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    basis: SubspaceBasis,
    /// `consts[i][j]` = coordinates of `[s_i, s_j]` in the subalgebra basis.
    consts: Vec<Vec<SparseRow>>,
}

impl Subalgebra {
    /// Verifies bracket closure on every pair of basis vectors.
    pub fn new(l: &LieAlgebraTable, basis: &SubspaceBasis) -> Result<Self, AlgebraError> {
        let d = basis.dim();
        let vs = basis.vectors();
        let ech = basis.echelon();
        let mut consts = vec![vec![SparseRow::new(); d]; d];
        for i in 0..d {
            for j in i + 1..d {
                let b = l.bracket_vec(&vs[i], &vs[j]);
                if !ech.reduce(to_sparse(&b)).is_empty() {
                    return Err(AlgebraError::NotSubalgebra(i, j));
                }
                let c: SparseRow = basis
                    .pivots()
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !b[**p].is_zero())
                    .map(|(k, p)| (k, b[*p].clone()))
                    .collect();
                consts[j][i] = c.iter().map(|(k, x)| (*k, -x.clone())).collect();
                consts[i][j] = c;
            }
        }
        Ok(Subalgebra {
            basis: basis.clone(),
            consts,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.consts[i][j]
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|r| r.iter().all(|c| c.is_empty()))
    }

    /// Center, computed inside the subalgebra's own coordinates.
    pub fn center(&self) -> SubspaceBasis {
        let d = self.dim();
        // Unknown c; equations Σ_k c_k [s_k, s_j] = 0 for each j and output m.
        let mut rows: Vec<SparseRow> = vec![SparseRow::new(); d * d];
        for k in 0..d {
            for j in 0..d {
                for (m, v) in &self.consts[k][j] {
                    rows[j * d + m].push((k, v.clone()));
                }
            }
        }
        let ker = kernel_of_rows(d, rows.into_iter().filter(|r| !r.is_empty()).collect::<Vec<_>>());
        let gens: Vec<Vec<Rat>> = ker.vectors().iter().map(|c| self.basis.combine(c)).collect();
        SubspaceBasis::span(self.basis.ambient_dim(), &gens).expect("lengths match")
    }

    /// Antisymmetric Kirillov matrix `ξ([s_i, s_j])` for `ξ` in subalgebra
    /// dual coordinates.
    pub fn kirillov_matrix(&self, xi: &[Rat]) -> Vec<Vec<Rat>> {
        let d = self.dim();
        let mut m = vec![vec![Rat::zero(); d]; d];
        for i in 0..d {
            for j in i + 1..d {
                let mut s = Rat::zero();
                for (k, v) in &self.consts[i][j] {
                    if !xi[*k].is_zero() {
                        s += v * &xi[*k];
                    }
                }
                if !s.is_zero() {
                    m[j][i] = -s.clone();
                    m[i][j] = s;
                }
            }
        }
        m
    }
}

/// Center of a subalgebra; errors when `sub` is not bracket-closed.
pub fn center_of(l: &LieAlgebraTable, sub: &SubspaceBasis) -> Result<SubspaceBasis, AlgebraError> {
    Ok(Subalgebra::new(l, sub)?.center())
}

/// `dim 𝔤ˣ = rank`.
pub fn is_regular(l: &LieAlgebraTable, x: &AlgElement) -> Result<bool, AlgebraError> {
    l.check(x)?;
    let rank = l.rank().ok_or(AlgebraError::NoRootData)?;
    Ok(centralizer_of_vectors(l, [x.coords.as_slice()]).dim() == rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(s: &str) -> LieAlgebraTable {
        chevalley_algebra(s.parse().unwrap())
    }

    fn v(l: &LieAlgebraTable, label: &str) -> AlgElement {
        l.basis_element(l.label_index(label).unwrap())
    }

    #[test]
    fn sl2_relations() {
        let l = alg("A1");
        let (x, y, h) = (v(&l, "x1"), v(&l, "y1"), v(&l, "h1"));
        assert_eq!(bracket(&l, &x, &y).unwrap(), h);
        assert_eq!(bracket(&l, &h, &x).unwrap(), x.scale(&rat(2)));
        assert_eq!(bracket(&l, &h, &y).unwrap(), y.scale(&rat(-2)));
        assert!(bracket(&l, &x, &x).unwrap().is_zero());
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = alg("A1");
        let b = alg("A1");
        assert_eq!(
            bracket(&a, &a.basis_element(0), &b.basis_element(0)),
            Err(AlgebraError::AlgebraMismatch)
        );
    }

    #[test]
    fn jacobi_exhaustive_small_ranks() {
        for s in ["A2", "B2", "G2", "C3", "B3"] {
            let l = alg(s);
            let n = l.dim();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        assert!(l.jacobi_holds(i, j, k), "{s}: ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_sampled_e6() {
        let l = alg("E6");
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let (i, j, k) = (rng.gen_range(0..78), rng.gen_range(0..78), rng.gen_range(0..78));
            assert!(l.jacobi_holds(i, j, k));
        }
    }

    #[test]
    fn cartan_action_on_root_vectors() {
        let l = alg("F4");
        let rd = l.root_data().unwrap();
        let rs = &rd.root_system;
        for k in 0..rs.num_positive {
            for i in 0..4 {
                let b = l.bracket_vec(l.basis_element(rd.cartan[i]).coords(), l.basis_element(k).coords());
                let expect = rs.pairing(&rs.positive_roots[k], i);
                assert_eq!(b[k], rat(expect));
            }
        }
    }

    #[test]
    fn killing_is_invariant_and_nondegenerate() {
        let l = alg("G2");
        let k = l.killing();
        let m = crate::linalg::RatMatrix::from_rows(14, k.clone()).unwrap();
        assert!(!crate::linalg::determinant(&m).is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let (a, b, c) = (l.random_element(&mut rng, 3), l.random_element(&mut rng, 3), l.random_element(&mut rng, 3));
            let lhs = l.killing_pair(&l.bracket_vec(a.coords(), b.coords()), c.coords());
            let rhs = l.killing_pair(a.coords(), &l.bracket_vec(b.coords(), c.coords()));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn killing_agrees_with_unfiltered_trace() {
        let l = alg("B2");
        let k = l.killing().clone();
        let n = l.dim();
        for i in 0..n {
            for j in 0..n {
                let mut s = Rat::zero();
                for t in 0..n {
                    let bt = l.basis_element(t);
                    let inner = l.bracket_vec(l.basis_element(j).coords(), bt.coords());
                    let outer = l.bracket_vec(l.basis_element(i).coords(), &inner);
                    s += &outer[t];
                }
                assert_eq!(k[i][j], s);
            }
        }
    }

    #[test]
    fn centralizers_and_regularity() {
        let l = alg("A1");
        let x = v(&l, "x1");
        assert_eq!(centralizer(&l, &[x.clone()]).unwrap().dim(), 1);
        assert_eq!(centralizer(&l, &[l.zero()]).unwrap().dim(), 3);
        assert!(is_regular(&l, &x).unwrap());
        assert!(!is_regular(&l, &l.zero()).unwrap());

        let a2 = alg("A2");
        let theta = v(&a2, "x3");
        assert_eq!(centralizer(&a2, &[theta.clone()]).unwrap().dim(), 4);
        assert!(!is_regular(&a2, &theta).unwrap());

        let f4 = alg("F4");
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let x = f4.random_element(&mut rng, 9);
        assert!(is_regular(&f4, &x).unwrap());
    }

    #[test]
    fn centers() {
        let l = alg("A1");
        assert_eq!(center_of(&l, &SubspaceBasis::full(3)).unwrap().dim(), 0);
        let ge = centralizer(&l, &[v(&l, "x1")]).unwrap();
        assert_eq!(center_of(&l, &ge).unwrap(), ge);
        let not_closed = SubspaceBasis::span(3, [v(&l, "x1").coords().to_vec(), v(&l, "y1").coords().to_vec()]).unwrap();
        assert!(matches!(center_of(&l, &not_closed), Err(AlgebraError::NotSubalgebra(_, _))));
    }

    #[test]
    fn centralizer_in_matches_intersection() {
        let l = alg("B3");
        let e = v(&l, "x1").add(&v(&l, "x3")).unwrap();
        let ge = centralizer(&l, &[e]).unwrap();
        let h = v(&l, "h2");
        let direct = centralizer(&l, &[h.clone()]).unwrap().intersect(&ge).unwrap();
        assert_eq!(centralizer_in(&l, &ge, &[h.coords().to_vec()]), direct);
    }

    #[test]
    fn nilpotency_check() {
        let l = alg("G2");
        assert!(l.is_ad_nilpotent(v(&l, "x6").coords(), 20));
        assert!(!l.is_ad_nilpotent(v(&l, "h1").coords(), 20));
    }

    #[test]
    fn formatting() {
        let l = alg("A2");
        let mut c = vec![Rat::zero(); 8];
        c[0] = rat(1);
        c[6] = rat(-2);
        assert_eq!(l.format_vec(&c), "x1 - 2*h1");
        assert_eq!(l.format_vec(&vec![Rat::zero(); 8]), "0");
    }
}
