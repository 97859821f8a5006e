//! Nilpotent orbits: partitions, representatives, sl2-triples, parabolics.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{centralizer_of_vectors, AlgElement, LieAlgebraTable};
use crate::linalg::{rank, rat, solve, Rat, RatMatrix, SubspaceBasis};
use crate::roots::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("partition {partition} is not valid for type {family} on {n}-space")]
    InvalidPartition { family: Family, n: usize, partition: Partition },
    #[error("algebra has no matrix realization")]
    NotClassical,
    #[error("algebra has no root data")]
    NoRootData,
    #[error("element is not ad-nilpotent")]
    NotNilpotent,
    #[error("element is zero")]
    ZeroElement,
    #[error("parabolic subset must be a proper subset of the simple roots")]
    ImproperSubset,
    #[error("no Richardson element found after {attempts} samples (seed {seed})")]
    SamplingFailed { attempts: usize, seed: u64 },
    #[error("predicate only defined for types B and D")]
    Unsupported,
    #[error("internal error: {0}")]
    Internal(String),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|p| *p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|p| **p == k).count()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.parts.first().copied().unwrap_or(0);
        Partition::new((1..=m).map(|k| self.parts.iter().filter(|p| **p >= k).count()).collect())
    }

    /// `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_valid_for(&self, family: Family, n: usize) -> bool {
        if self.total() != n {
            return false;
        }
        let distinct = {
            let mut d = self.parts.clone();
            d.dedup();
            d
        };
        match family {
            Family::A => true,
            Family::B | Family::D => distinct.iter().all(|k| k % 2 == 1 || self.multiplicity(*k) % 2 == 0),
            Family::C => distinct.iter().all(|k| k % 2 == 0 || self.multiplicity(*k) % 2 == 0),
            _ => false,
        }
    }

    /// Dimension of the centralizer of a nilpotent of this Jordan type.
    pub fn centralizer_dim(&self, family: Family) -> usize {
        let sq: usize = self.conjugate().parts.iter().map(|c| c * c).sum();
        let odd = self.parts.iter().filter(|p| *p % 2 == 1).count();
        match family {
            Family::A => sq - 1,
            Family::C => (sq + odd) / 2,
            _ => (sq - odd) / 2,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=max.min(rem)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Jordan types of nilpotent orbits in the classical algebra on `n`-space.
pub fn enumerate_nilpotent_partitions(family: Family, n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.is_valid_for(family, n)).collect()
}

pub fn is_rigid_partition(family: Family, p: &Partition) -> bool {
    let parts = p.parts();
    match family {
        Family::A => parts.iter().all(|k| *k == 1),
        Family::B | Family::C | Family::D => {
            if parts.last() != Some(&1) {
                return false;
            }
            if parts.windows(2).any(|w| w[0] - w[1] > 1) {
                return false;
            }
            // Parts whose multiplicity is unconstrained must not occur exactly twice.
            let free_parity = if family == Family::C { 0 } else { 1 };
            parts
                .iter()
                .filter(|k| *k % 2 == free_parity)
                .all(|k| p.multiplicity(*k) != 2)
        }
        _ => false,
    }
}

/// False exactly when the two largest parts are odd and the third is smaller
/// than the second (missing parts count as zero).
pub fn center_generated_by_powers(family: Family, p: &Partition) -> Result<bool, OrbitError> {
    if !matches!(family, Family::B | Family::D) {
        return Err(OrbitError::Unsupported);
    }
    let (n1, n2, n3) = (p.part(1), p.part(2), p.part(3));
    Ok(!(n1 % 2 == 1 && n2 % 2 == 1 && n3 < n2))
}

/// `[h,e] = 2e`, `[e,f] = h`, `[h,f] = -2f`.
#[derive(Clone, Debug)]
pub struct Sl2Triple {
    pub e: AlgElement,
    pub h: AlgElement,
    pub f: AlgElement,
}

impl Sl2Triple {
    pub fn holds(&self, l: &LieAlgebraTable) -> bool {
        let (e, h, f) = (self.e.coords(), self.h.coords(), self.f.coords());
        let two = rat(2);
        let he = l.bracket_vec(h, e);
        let ef = l.bracket_vec(e, f);
        let hf = l.bracket_vec(h, f);
        he.iter().zip(e).all(|(a, b)| *a == b * &two)
            && ef.iter().zip(h).all(|(a, b)| a == b)
            && hf.iter().zip(f).all(|(a, b)| *a == -(b * &two))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitKind {
    Classical(Partition),
    /// Basis indices with coefficients.
    Exceptional(Vec<(usize, String)>),
    Richardson { subset: Vec<usize>, seed: u64, attempts: usize },
}

#[derive(Clone, Debug)]
pub struct OrbitDescriptor {
    pub kind: OrbitKind,
    pub representative: AlgElement,
    pub centralizer: SubspaceBasis,
    pub sl2: Option<Sl2Triple>,
    pub dim_centralizer: usize,
    pub dim_orbit: usize,
}

impl OrbitDescriptor {
    fn build(l: &LieAlgebraTable, kind: OrbitKind, e: AlgElement) -> Self {
        let c = centralizer_of_vectors(l, [e.coords()]);
        let d = c.dim();
        OrbitDescriptor {
            kind,
            representative: e,
            centralizer: c,
            sl2: None,
            dim_centralizer: d,
            dim_orbit: l.dim() - d,
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            OrbitKind::Classical(p) => p.to_string(),
            OrbitKind::Exceptional(s) => {
                let v: Vec<String> = s.iter().map(|(i, c)| format!("{c}*b{}", i + 1)).collect();
                v.join("+")
            }
            OrbitKind::Richardson { subset, .. } => {
                let v: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
                format!("P{{{}}}", v.join(","))
            }
        }
    }

    pub fn with_sl2(mut self, l: &LieAlgebraTable) -> Result<Self, OrbitError> {
        if !self.representative.is_zero() {
            self.sl2 = Some(jacobson_morozov(l, &self.representative)?);
        }
        Ok(self)
    }
}

/// Adapted basis vector: either a standard basis vector or an anisotropic
/// combination `v_a ± ½ v_{a'}` of a mirrored pair.
fn basis_column(n: usize, i: usize, sign: Option<i64>) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    if let Some(s) = sign {
        v[n - 1 - i] = Rat::new(s.into(), 2.into());
    }
    v
}

/// A form-compatible nilpotent with Jordan type `p`.
pub fn nilpotent_from_partition(l: &LieAlgebraTable, p: &Partition) -> Result<OrbitDescriptor, OrbitError> {
    let mr = l.matrix_realization().ok_or(OrbitError::NotClassical)?;
    let family = mr.family();
    let n = mr.size();
    if !p.is_valid_for(family, n) {
        return Err(OrbitError::InvalidPartition {
            family,
            n,
            partition: p.clone(),
        });
    }

    let e_mat = if family == Family::A {
        let mut y = RatMatrix::zeros(n, n);
        let mut start = 0;
        for &k in p.parts() {
            for i in start..start + k - 1 {
                y.set(i, i + 1, rat(1));
            }
            start += k;
        }
        y
    } else {
        form_nilpotent(mr, family, n, p)?
    };

    for k in 1..=p.part(1) {
        let mut pow = RatMatrix::identity(n);
        for _ in 0..k {
            pow = pow.mul(&e_mat);
        }
        let expect: usize = p.parts().iter().map(|x| x.saturating_sub(k)).sum();
        if rank(&pow) != expect {
            return Err(OrbitError::Internal(format!("Jordan type mismatch for {p}")));
        }
    }
    let coords = mr
        .coords_of(&e_mat)
        .ok_or_else(|| OrbitError::Internal("representative not in the algebra".into()))?;
    let e = l.element(coords).expect("dimension matches");
    let d = OrbitDescriptor::build(l, OrbitKind::Classical(p.clone()), e);
    if d.dim_centralizer != p.centralizer_dim(family) {
        return Err(OrbitError::Internal(format!(
            "centralizer of {p} has dimension {}, expected {}",
            d.dim_centralizer,
            p.centralizer_dim(family)
        )));
    }
    Ok(d)
}

fn form_nilpotent(
    mr: &crate::classical::MatrixRealization,
    family: Family,
    n: usize,
    p: &Partition,
) -> Result<RatMatrix, OrbitError> {
    let good_parity = if family == Family::C { 0 } else { 1 };
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    let mut next_pair = 0usize;
    // Centers for odd self-dual blocks in the orthogonal case.
    let odd_blocks = if good_parity == 1 {
        p.parts().iter().filter(|k| *k % 2 == 1).count()
    } else {
        0
    };
    let mut centers: Vec<usize> = Vec::new();
    if n % 2 == 1 {
        cols.push(basis_column(n, n / 2, None));
        centers.push(cols.len() - 1);
    }
    while centers.len() < odd_blocks {
        let a = next_pair;
        next_pair += 1;
        cols.push(basis_column(n, a, Some(1)));
        centers.push(cols.len() - 1);
        cols.push(basis_column(n, a, Some(-1)));
        centers.push(cols.len() - 1);
    }
    if centers.len() != odd_blocks {
        return Err(OrbitError::Internal("center allocation".into()));
    }

    // Half chains Y in the adapted basis.
    let mut take_pair = |cols: &mut Vec<Vec<Rat>>| -> (usize, usize) {
        let a = next_pair;
        next_pair += 1;
        cols.push(basis_column(n, a, None));
        cols.push(basis_column(n, n - 1 - a, None));
        (cols.len() - 2, cols.len() - 1)
    };
    let mut half: Vec<(usize, usize)> = Vec::new();
    let mut distinct: Vec<usize> = p.parts().to_vec();
    distinct.dedup();
    let mut center_iter = centers.into_iter();
    for k in distinct {
        let mult = p.multiplicity(k);
        if k % 2 == good_parity {
            for _ in 0..mult {
                let r = k / 2;
                let mut chain: Vec<usize> = Vec::with_capacity(k);
                let mut mirror: Vec<usize> = Vec::with_capacity(r);
                for _ in 0..r {
                    let (a, b) = take_pair(&mut cols);
                    chain.push(a);
                    mirror.push(b);
                }
                if k % 2 == 1 {
                    chain.push(center_iter.next().expect("center allocated"));
                }
                chain.extend(mirror.into_iter().rev());
                for i in 0..k / 2 {
                    half.push((chain[i], chain[i + 1]));
                }
            }
        } else {
            for _ in 0..mult / 2 {
                let chain: Vec<usize> = (0..k).map(|_| take_pair(&mut cols).0).collect();
                for w in chain.windows(2) {
                    half.push((w[0], w[1]));
                }
            }
        }
    }
    if cols.len() != n {
        return Err(OrbitError::Internal("adapted basis has wrong size".into()));
    }

    let pmat = RatMatrix::from_rows(n, (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
        .expect("square");
    let j = mr.form().expect("form present");
    let g = pmat.transpose().mul(j).mul(&pmat);
    let ginv = g.inverse().ok_or_else(|| OrbitError::Internal("degenerate adapted form".into()))?;
    let mut y = RatMatrix::zeros(n, n);
    for (a, b) in half {
        y.set(a, b, rat(1));
    }
    let mirror = ginv.mul(&y.transpose()).mul(&g);
    let mut x = RatMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            x.set(r, c, y.get(r, c) - mirror.get(r, c));
        }
    }
    let pinv = pmat.inverse().ok_or_else(|| OrbitError::Internal("singular adapted basis".into()))?;
    Ok(pmat.mul(&x).mul(&pinv))
}

/// Orbit of an explicit element given by basis indices and coefficients.
pub fn nilpotent_from_support(l: &LieAlgebraTable, support: &[(usize, Rat)]) -> Result<OrbitDescriptor, OrbitError> {
    let mut c = vec![Rat::zero(); l.dim()];
    for (i, v) in support {
        c[*i] += v;
    }
    let e = l.element(c).map_err(|e| OrbitError::Internal(e.to_string()))?;
    if !l.is_ad_nilpotent(e.coords(), l.dim()) {
        return Err(OrbitError::NotNilpotent);
    }
    let kind = OrbitKind::Exceptional(support.iter().map(|(i, v)| (*i, crate::linalg::fmt_rat(v))).collect());
    Ok(OrbitDescriptor::build(l, kind, e))
}

fn columns_to_matrix(n: usize, cols: &[Vec<Rat>]) -> RatMatrix {
    let data = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    RatMatrix::from_rows(cols.len(), data).expect("rectangular")
}

/// Completes a nonzero nilpotent `e` to an sl2-triple.
pub fn jacobson_morozov(l: &LieAlgebraTable, e: &AlgElement) -> Result<Sl2Triple, OrbitError> {
    if !l.owns(e) {
        return Err(OrbitError::Internal("element from another algebra".into()));
    }
    if e.is_zero() {
        return Err(OrbitError::ZeroElement);
    }
    let ec = e.coords();
    let n = l.dim();
    if !l.is_ad_nilpotent(ec, n) {
        return Err(OrbitError::NotNilpotent);
    }
    let basis = |j: usize| {
        let mut v = vec![Rat::zero(); n];
        v[j] = Rat::one();
        v
    };
    // (ad e)^2 z = -2e, h = [e, z].
    let ad2: Vec<Vec<Rat>> = (0..n).map(|j| l.bracket_vec(ec, &l.bracket_vec(ec, &basis(j)))).collect();
    let rhs: Vec<Rat> = ec.iter().map(|x| x * rat(-2)).collect();
    let z = solve(&columns_to_matrix(n, &ad2), &rhs)
        .ok_or_else(|| OrbitError::Internal("no neutral element".into()))?;
    let h = l.bracket_vec(ec, &z);

    // [e, f] = h and [h, f] + 2f = 0.
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for j in 0..n {
        let b = basis(j);
        let mut col = l.bracket_vec(ec, &b);
        let mut hb = l.bracket_vec(&h, &b);
        hb[j] += rat(2);
        col.extend(hb);
        cols.push(col);
    }
    let mut rhs = h.clone();
    rhs.extend(std::iter::repeat(Rat::zero()).take(n));
    let f = solve(&columns_to_matrix(2 * n, &cols), &rhs)
        .ok_or_else(|| OrbitError::Internal("no nilpositive element".into()))?;
    let t = Sl2Triple {
        e: e.clone(),
        h: l.element(h).expect("dim"),
        f: l.element(f).expect("dim"),
    };
    if !t.holds(l) {
        return Err(OrbitError::Internal("sl2 relations fail".into()));
    }
    Ok(t)
}

/// Standard parabolic `𝔭 = 𝔩 ⊕ 𝔭_u` attached to a set of simple roots.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    /// 0-based simple-root indices.
    pub simple_subset: Vec<usize>,
    pub levi: SubspaceBasis,
    pub nilradical: SubspaceBasis,
    pub opposite_nilradical: SubspaceBasis,
    /// Basis indices spanning the nilradical.
    pub nilradical_indices: Vec<usize>,
}

pub fn parabolic(l: &LieAlgebraTable, subset: &[usize]) -> Result<ParabolicData, OrbitError> {
    let rd = l.root_data().ok_or(OrbitError::NoRootData)?;
    let rs = &rd.root_system;
    let mut s: Vec<usize> = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() >= rs.rank || s.iter().any(|i| *i >= rs.rank) {
        return Err(OrbitError::ImproperSubset);
    }
    let n = l.dim();
    let unit = |i: usize| {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        v
    };
    let mut levi = Vec::new();
    let mut nil = Vec::new();
    let mut opp = Vec::new();
    let mut nil_idx = Vec::new();
    for (k, r) in rs.positive_roots.iter().enumerate() {
        let outside = r.iter().enumerate().any(|(i, c)| *c != 0 && !s.contains(&i));
        if outside {
            nil.push(unit(rd.positive[k]));
            nil_idx.push(rd.positive[k]);
            opp.push(unit(rd.negative[k]));
        } else {
            levi.push(unit(rd.positive[k]));
            levi.push(unit(rd.negative[k]));
        }
    }
    for &h in &rd.cartan {
        levi.push(unit(h));
    }
    Ok(ParabolicData {
        simple_subset: s,
        levi: SubspaceBasis::span(n, &levi).expect("dim"),
        nilradical: SubspaceBasis::span(n, &nil).expect("dim"),
        opposite_nilradical: SubspaceBasis::span(n, &opp).expect("dim"),
        nilradical_indices: nil_idx,
    })
}

pub const RICHARDSON_RANGE: i64 = 9;
pub const RICHARDSON_ATTEMPTS: usize = 64;

/// Samples integer points of `𝔭_u` until the centralizer has dimension
/// `dim 𝔩`.
pub fn richardson_representative(
    l: &LieAlgebraTable,
    pd: &ParabolicData,
    seed: u64,
) -> Result<OrbitDescriptor, OrbitError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = pd.levi.dim();
    for attempt in 1..=RICHARDSON_ATTEMPTS {
        let mut c = vec![Rat::zero(); l.dim()];
        for &i in &pd.nilradical_indices {
            c[i] = rat(rng.gen_range(-RICHARDSON_RANGE..=RICHARDSON_RANGE));
        }
        let e = l.element(c).expect("dim");
        let kind = OrbitKind::Richardson {
            subset: pd.simple_subset.clone(),
            seed,
            attempts: attempt,
        };
        let d = OrbitDescriptor::build(l, kind, e);
        if d.dim_centralizer == target {
            return Ok(d);
        }
    }
    Err(OrbitError::SamplingFailed {
        attempts: RICHARDSON_ATTEMPTS,
        seed,
    })
}

/// Proper subsets of `{0, …, rank-1}`, ordered by size then lexicographically.
pub fn proper_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..(1u32 << rank) - 1)
        .map(|m| (0..rank).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chevalley_algebra;
    use crate::classical::classical_matrix_algebra;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn enumeration_examples() {
        let a3: Vec<_> = enumerate_nilpotent_partitions(Family::A, 3);
        assert_eq!(a3, vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        let c2 = enumerate_nilpotent_partitions(Family::C, 4);
        assert_eq!(c2, vec![part(&[4]), part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])]);
        let b3 = enumerate_nilpotent_partitions(Family::B, 7);
        assert!(b3.contains(&part(&[3, 2, 2])));
        assert!(!b3.contains(&part(&[2, 2, 2, 1])));
        assert_eq!(b3.len(), 7);
    }

    #[test]
    fn partition_counts_match_generating_function() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn rigidity_examples() {
        assert!(is_rigid_partition(Family::B, &part(&[2, 2, 1, 1, 1])));
        assert!(!is_rigid_partition(Family::B, &part(&[3, 3, 1])));
        assert!(!is_rigid_partition(Family::A, &part(&[4])));
        assert!(is_rigid_partition(Family::A, &part(&[1, 1, 1])));
        assert!(is_rigid_partition(Family::C, &part(&[2, 1, 1])));
        assert!(!is_rigid_partition(Family::C, &part(&[2, 2])));
    }

    #[test]
    fn center_power_examples() {
        assert!(center_generated_by_powers(Family::B, &part(&[2, 2, 1, 1, 1])).unwrap());
        assert!(!center_generated_by_powers(Family::B, &part(&[3, 3, 1])).unwrap());
        assert!(center_generated_by_powers(Family::B, &part(&[5, 3, 3])).unwrap());
        assert!(center_generated_by_powers(Family::C, &part(&[2])).is_err());
    }

    #[test]
    fn representatives_match_centralizer_formula() {
        for (f, n) in [(Family::A, 4), (Family::B, 7), (Family::C, 6), (Family::D, 8), (Family::B, 9), (Family::D, 6)] {
            let l = classical_matrix_algebra(f, n).unwrap();
            for p in enumerate_nilpotent_partitions(f, n) {
                let d = nilpotent_from_partition(&l, &p).unwrap();
                assert_eq!(d.dim_centralizer, p.centralizer_dim(f), "{f}{n} {p}");
                assert_eq!(d.dim_orbit % 2, 0);
                assert!(l.is_ad_nilpotent(d.representative.coords(), 2 * l.dim()));
            }
        }
    }

    #[test]
    fn spec_centralizer_examples() {
        let sl3 = classical_matrix_algebra(Family::A, 3).unwrap();
        assert_eq!(nilpotent_from_partition(&sl3, &part(&[2, 1])).unwrap().dim_centralizer, 4);
        let sl4 = classical_matrix_algebra(Family::A, 4).unwrap();
        assert_eq!(nilpotent_from_partition(&sl4, &part(&[4])).unwrap().dim_centralizer, 3);
        let sp4 = classical_matrix_algebra(Family::C, 4).unwrap();
        assert_eq!(nilpotent_from_partition(&sp4, &part(&[2, 1, 1])).unwrap().dim_centralizer, 6);
        let so7 = classical_matrix_algebra(Family::B, 7).unwrap();
        assert!(nilpotent_from_partition(&so7, &part(&[2, 2, 2, 1])).is_err());
    }

    #[test]
    fn sl2_triples() {
        let l = chevalley_algebra("A1".parse().unwrap());
        let t = jacobson_morozov(&l, &l.basis_element(0)).unwrap();
        assert!(t.holds(&l));
        assert_eq!(t.h, l.basis_element(2));
        assert_eq!(t.f, l.basis_element(1));
        assert!(jacobson_morozov(&l, &l.basis_element(2)).is_err());
        assert_eq!(jacobson_morozov(&l, &l.zero()).unwrap_err(), OrbitError::ZeroElement);
    }

    #[test]
    fn minimal_sl3_h_eigenvalues() {
        let l = classical_matrix_algebra(Family::A, 3).unwrap();
        let d = nilpotent_from_partition(&l, &part(&[2, 1])).unwrap();
        let t = jacobson_morozov(&l, &d.representative).unwrap();
        // ad h has eigenvalues 2, 1, 1, 0, 0, -1, -1, -2.
        for k in [-2i64, -1, 0, 1, 2] {
            let mut m = RatMatrix::zeros(8, 8);
            let cols: Vec<Vec<Rat>> = (0..8)
                .map(|j| {
                    let mut v = l.bracket_vec(t.h.coords(), l.basis_element(j).coords());
                    v[j] -= rat(k);
                    v
                })
                .collect();
            for (j, c) in cols.iter().enumerate() {
                for (i, x) in c.iter().enumerate() {
                    m.set(i, j, x.clone());
                }
            }
            let mult = 8 - rank(&m);
            let expect = if k.abs() == 2 { 1 } else { 2 };
            assert_eq!(mult, expect, "eigenvalue {k}");
        }
    }

    #[test]
    fn parabolic_dimensions() {
        let a1 = chevalley_algebra("A1".parse().unwrap());
        assert_eq!(parabolic(&a1, &[]).unwrap().nilradical.dim(), 1);
        let a2 = chevalley_algebra("A2".parse().unwrap());
        let p = parabolic(&a2, &[0]).unwrap();
        assert_eq!((p.levi.dim(), p.nilradical.dim()), (4, 2));
        let f4 = chevalley_algebra("F4".parse().unwrap());
        assert_eq!(parabolic(&f4, &[]).unwrap().nilradical.dim(), 24);
        assert_eq!(parabolic(&a2, &[0, 1]).unwrap_err(), OrbitError::ImproperSubset);
    }

    #[test]
    fn richardson_examples() {
        let a2 = chevalley_algebra("A2".parse().unwrap());
        let b = parabolic(&a2, &[]).unwrap();
        let d = richardson_representative(&a2, &b, 1).unwrap();
        assert_eq!(d.dim_orbit, 6);
        let g2 = chevalley_algebra("G2".parse().unwrap());
        let p = parabolic(&g2, &[0]).unwrap();
        let d = richardson_representative(&g2, &p, 1).unwrap();
        assert_eq!((d.dim_centralizer, p.levi.dim()), (4, 4));
        assert_eq!(d.dim_orbit, 2 * p.nilradical.dim());
    }

    #[test]
    fn jacobson_morozov_on_classical_orbits() {
        let l = classical_matrix_algebra(Family::C, 6).unwrap();
        for p in enumerate_nilpotent_partitions(Family::C, 6) {
            let d = nilpotent_from_partition(&l, &p).unwrap().with_sl2(&l).unwrap();
            if let Some(t) = d.sl2 {
                assert!(t.holds(&l));
            }
        }
    }
}
