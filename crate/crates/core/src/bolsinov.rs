//! Argument-shift subspaces `V_{x,y}` and the dimension criterion.
//!
//! `V_{x,y}` is built as the sum of the centralizers `𝔤^{x+ty}` over
//! consecutive integers `t ≥ 0` for which `x + ty` is regular. Values of `t`
//! where `x + ty` is singular are recorded and skipped; they are finitely many
//! and their centralizers need not lie in `V_{x,y}` (e.g. `y = -x`, `t = 1`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{centralizer_of_vectors, AlgElement, LieAlgebraTable};
use crate::linalg::{integer_rank, integer_row, kernel_of_rows, rat, to_sparse, Rat, SparseRow, SubspaceBasis};
use crate::orbits::OrbitDescriptor;

pub const SATURATION_RUN: usize = 3;
pub const REGULAR_ATTEMPTS: usize = 16;
pub const CRITERION_ATTEMPTS: usize = 4;
pub const X_RANGE: i64 = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BolsinovError {
    #[error("x is not regular")]
    NotRegular,
    #[error("algebra has no root data")]
    NoRootData,
    #[error("element from another algebra")]
    AlgebraMismatch,
    #[error("shift space is not saturated")]
    Unsaturated,
    #[error("no regular element found in {0} samples")]
    NoRegularElement(usize),
}

#[derive(Clone, Debug)]
pub struct ShiftSpace {
    pub x: AlgElement,
    pub y: AlgElement,
    pub space: SubspaceBasis,
    /// Values of `t` whose centralizers were summed.
    pub t_samples: Vec<Rat>,
    /// Values of `t` with `x + ty` singular.
    pub singular_t: Vec<Rat>,
    pub saturated: bool,
    next_t: i64,
    stable_run: usize,
}

impl ShiftSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

fn rank_and_degrees(l: &LieAlgebraTable) -> Result<(usize, usize, usize), BolsinovError> {
    let rd = l.root_data().ok_or(BolsinovError::NoRootData)?;
    let rs = &rd.root_system;
    Ok((rs.rank, *rs.degrees.last().expect("nonempty"), rs.borel_dim))
}

/// Adds the centralizer at the next value of `t`; returns whether `t` was
/// regular.
fn step(l: &LieAlgebraTable, v: &mut ShiftSpace, rank: usize) -> bool {
    let t = rat(v.next_t);
    v.next_t += 1;
    let z: Vec<Rat> = v.x.coords().iter().zip(v.y.coords()).map(|(a, b)| a + &t * b).collect();
    let c = centralizer_of_vectors(l, [z.as_slice()]);
    if c.dim() != rank {
        v.singular_t.push(t);
        return false;
    }
    let before = v.space.dim();
    v.space = v.space.sum(&c).expect("same ambient");
    v.t_samples.push(t);
    if v.space.dim() == before {
        v.stable_run += 1;
    } else {
        v.stable_run = 0;
    }
    true
}

/// `V_{x,y}` for regular `x`.
///
/// Sampling stops once at least `d_max + 1` regular values have been used
/// and the last three additions did not grow the space, or after
/// `max(2 b_𝔤, d_max + 4)` values of `t` in total.
pub fn shift_space(l: &LieAlgebraTable, x: &AlgElement, y: &AlgElement) -> Result<ShiftSpace, BolsinovError> {
    if !l.owns(x) || !l.owns(y) {
        return Err(BolsinovError::AlgebraMismatch);
    }
    let (rank, dmax, borel) = rank_and_degrees(l)?;
    let gx = centralizer_of_vectors(l, [x.coords()]);
    if gx.dim() != rank {
        return Err(BolsinovError::NotRegular);
    }
    let mut v = ShiftSpace {
        x: x.clone(),
        y: y.clone(),
        space: SubspaceBasis::zero(l.dim()),
        t_samples: Vec::new(),
        singular_t: Vec::new(),
        saturated: false,
        next_t: 0,
        stable_run: 0,
    };
    let cap = (2 * borel).max(dmax + 1 + SATURATION_RUN);
    while (v.t_samples.len() + v.singular_t.len()) < cap {
        step(l, &mut v, rank);
        if v.t_samples.len() > dmax && v.stable_run >= SATURATION_RUN {
            v.saturated = true;
            break;
        }
    }
    Ok(v)
}

/// Adds `extra` further regular values of `t`; returns whether the space grew.
pub fn extend_shift_space(l: &LieAlgebraTable, v: &mut ShiftSpace, extra: usize) -> Result<bool, BolsinovError> {
    let (rank, _, _) = rank_and_degrees(l)?;
    let before = v.space.clone();
    let mut added = 0;
    let mut tries = 0;
    while added < extra && tries < 4 * extra + 8 {
        tries += 1;
        if step(l, v, rank) {
            added += 1;
        }
    }
    Ok(v.space != before)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ShiftReport {
    pub dim_v: usize,
    /// (a) `𝔤ˣ ⊆ V`.
    pub centralizer_contained: bool,
    /// (b) `K(y, [u, w]) = 0` on `𝔤ʸ + V`.
    pub totally_isotropic: bool,
    /// (c) `[x, V] = [y, V]`.
    pub brackets_equal: bool,
    /// (d) `dim(𝔤ʸ ∩ V)`.
    pub dim_gy_cap_v: usize,
    pub gy_cap_v_ok: bool,
    /// (e) `dim V ≤ b_𝔤`.
    pub dim_bound_ok: bool,
    /// `dim(𝔤ʸ + V) = dim 𝔤ʸ + dim V − ℓ`.
    pub grassmann_ok: bool,
}

impl ShiftReport {
    pub fn all_hold(&self) -> bool {
        self.centralizer_contained
            && self.totally_isotropic
            && self.brackets_equal
            && self.gy_cap_v_ok
            && self.dim_bound_ok
            && self.grassmann_ok
    }
}

/// Basis vectors scaled to primitive integer vectors.
fn primitive(b: &SubspaceBasis) -> Vec<Vec<BigInt>> {
    b.vectors().iter().map(|v| integer_row(v)).collect()
}

/// Sparse matrix times a common denominator. Every test below is a zero or
/// rank test, so the scale does not matter.
struct IntMatrix(Vec<Vec<(usize, BigInt)>>);

impl IntMatrix {
    fn new(rows: &[SparseRow]) -> Self {
        let den = rows.iter().flatten().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        IntMatrix(
            rows.iter()
                .map(|r| r.iter().map(|(j, c)| (*j, (c * &den).to_integer())).collect())
                .collect(),
        )
    }

    fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.0
            .iter()
            .map(|r| r.iter().filter(|(j, _)| !v[*j].is_zero()).map(|(j, c)| c * &v[*j]).sum())
            .collect()
    }
}

fn rank_of<'a, I: IntoIterator<Item = &'a Vec<BigInt>>>(rows: I) -> usize {
    integer_rank(rows.into_iter().cloned().collect())
}

pub fn verify_shift_properties(l: &LieAlgebraTable, v: &ShiftSpace) -> Result<ShiftReport, BolsinovError> {
    if !v.saturated {
        return Err(BolsinovError::Unsaturated);
    }
    let (rank, _, borel) = rank_and_degrees(l)?;
    let n = l.dim();
    let (x, y) = (v.x.coords(), v.y.coords());
    let gx = primitive(&centralizer_of_vectors(l, [x]));
    let gy = primitive(&centralizer_of_vectors(l, [y]));
    let vs = primitive(&v.space);
    let ad_x = IntMatrix::new(&l.ad_rows(x));
    let ad_y = IntMatrix::new(&l.ad_rows(y));
    let killing = IntMatrix::new(&l.killing().iter().map(|r| to_sparse(r)).collect::<Vec<_>>());
    let dim_w = rank_of(gy.iter().chain(&vs));

    // K(y, [u, w]) = K([y, u], w), so one bracket per spanning vector.
    let k_w: Vec<Vec<BigInt>> = gy.iter().chain(&vs).map(|w| killing.apply(w)).collect();
    let totally_isotropic = gy.iter().chain(&vs).all(|u| {
        let a = ad_y.apply(u);
        k_w.iter().all(|kw| a.iter().zip(kw).map(|(p, q)| p * q).sum::<BigInt>().is_zero())
    });

    let bx: Vec<Vec<BigInt>> = vs.iter().map(|u| ad_x.apply(u)).collect();
    let by: Vec<Vec<BigInt>> = vs.iter().map(|u| ad_y.apply(u)).collect();
    let rx = rank_of(&bx);
    let brackets_equal = rx == rank_of(&by) && rx == rank_of(bx.iter().chain(&by));

    // Relations a·gʸ = b·V, counted as the kernel of the stacked coordinates.
    let cols = gy.len() + vs.len();
    let rows = (0..n).map(|i| {
        gy.iter()
            .map(|g| g[i].clone())
            .chain(vs.iter().map(|u| -u[i].clone()))
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, Rat::from_integer(c)))
            .collect()
    });
    let cap = kernel_of_rows(cols, rows.collect::<Vec<_>>()).dim();
    Ok(ShiftReport {
        dim_v: v.dim(),
        centralizer_contained: rank_of(vs.iter().chain(&gx)) == vs.len(),
        totally_isotropic,
        brackets_equal,
        dim_gy_cap_v: cap,
        gy_cap_v_ok: cap == rank,
        dim_bound_ok: v.dim() <= borel,
        grassmann_ok: dim_w + rank == gy.len() + vs.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionOutcome {
    pub holds: bool,
    pub dim_v: usize,
    pub expected_dim_v: usize,
    /// Seed of the generator that produced the regular element `x`.
    pub seed: u64,
    pub x_attempts: usize,
    pub report: Option<ShiftReport>,
}

/// Regular element with coordinates in `[-9, 9]`.
pub fn sample_regular<R: rand::Rng>(l: &LieAlgebraTable, rng: &mut R) -> Result<(AlgElement, usize), BolsinovError> {
    let (rank, _, _) = rank_and_degrees(l)?;
    for k in 1..=REGULAR_ATTEMPTS {
        let x = l.random_element(rng, X_RANGE);
        if centralizer_of_vectors(l, [x.coords()]).dim() == rank {
            return Ok((x, k));
        }
    }
    Err(BolsinovError::NoRegularElement(REGULAR_ATTEMPTS))
}

/// `dim V_{x,e} = ½ dim G.e + ℓ` for some sampled regular `x`.
pub fn check_criterion(l: &LieAlgebraTable, e: &OrbitDescriptor, seed: u64) -> Result<CriterionOutcome, BolsinovError> {
    let (rank, _, _) = rank_and_degrees(l)?;
    let expected = e.dim_orbit / 2 + rank;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total_attempts = 0;
    let mut last = None;
    for _ in 0..CRITERION_ATTEMPTS {
        let (x, k) = sample_regular(l, &mut rng)?;
        total_attempts += k;
        let v = shift_space(l, &x, &e.representative)?;
        let report = verify_shift_properties(l, &v).ok();
        let out = CriterionOutcome {
            holds: v.dim() == expected,
            dim_v: v.dim(),
            expected_dim_v: expected,
            seed,
            x_attempts: total_attempts,
            report,
        };
        if out.holds {
            return Ok(out);
        }
        last = Some(out);
    }
    Ok(last.expect("at least one attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chevalley_algebra;
    use crate::classical::classical_matrix_algebra;
    use crate::orbits::{enumerate_nilpotent_partitions, nilpotent_from_partition, Partition};
    use crate::roots::Family;

    #[test]
    fn sl2_regular_semisimple_and_e() {
        let l = chevalley_algebra("A1".parse().unwrap());
        let x = l.basis_element(2);
        let y = l.basis_element(0);
        let v = shift_space(&l, &x, &y).unwrap();
        assert!(v.saturated);
        assert_eq!(v.dim(), 2);
        let r = verify_shift_properties(&l, &v).unwrap();
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn y_equal_x_gives_centralizer() {
        let l = chevalley_algebra("B2".parse().unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (x, _) = sample_regular(&l, &mut rng).unwrap();
        let v = shift_space(&l, &x, &x).unwrap();
        assert_eq!(v.dim(), 2);
        let r = verify_shift_properties(&l, &v).unwrap();
        assert!(r.brackets_equal && r.all_hold());
    }

    #[test]
    fn singular_t_is_skipped() {
        let l = chevalley_algebra("A2".parse().unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let (x, _) = sample_regular(&l, &mut rng).unwrap();
        let y = x.scale(&rat(-1));
        let v = shift_space(&l, &x, &y).unwrap();
        assert!(v.singular_t.contains(&rat(1)));
        assert_eq!(v.dim(), 2);
    }

    #[test]
    fn minimal_sl3() {
        let l = classical_matrix_algebra(Family::A, 3).unwrap();
        let e = nilpotent_from_partition(&l, &Partition::new(vec![2, 1])).unwrap();
        let out = check_criterion(&l, &e, 1).unwrap();
        assert!(out.holds);
        assert_eq!(out.dim_v, 4);
        assert!(out.report.unwrap().all_hold());
    }

    #[test]
    fn zero_orbit() {
        let l = classical_matrix_algebra(Family::C, 4).unwrap();
        let e = nilpotent_from_partition(&l, &Partition::new(vec![1, 1, 1, 1])).unwrap();
        let out = check_criterion(&l, &e, 2).unwrap();
        assert!(out.holds);
        assert_eq!(out.dim_v, 2);
    }

    #[test]
    fn c2_sweep() {
        let l = classical_matrix_algebra(Family::C, 4).unwrap();
        for p in enumerate_nilpotent_partitions(Family::C, 4) {
            let e = nilpotent_from_partition(&l, &p).unwrap();
            assert!(check_criterion(&l, &e, 3).unwrap().holds, "{p}");
        }
    }

    #[test]
    fn saturated_space_is_stable() {
        let l = chevalley_algebra("G2".parse().unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let (x, _) = sample_regular(&l, &mut rng).unwrap();
        let y = l.random_element(&mut rng, 5);
        let mut v = shift_space(&l, &x, &y).unwrap();
        assert!(v.saturated);
        assert!(!extend_shift_space(&l, &mut v, 5).unwrap());
    }

    #[test]
    fn non_regular_x_rejected() {
        let l = chevalley_algebra("A2".parse().unwrap());
        let x = l.basis_element(0);
        assert_eq!(shift_space(&l, &x, &x).unwrap_err(), BolsinovError::NotRegular);
    }
}
