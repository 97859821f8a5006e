//! Index of Lie subalgebras from sampled Kirillov ranks.
//!
//! The rank of `(v, w) ↦ ξ([v, w])` at any `ξ` bounds the index from above.
//! For centralizers `𝔤ˣ` the index is at least `rk 𝔤`, so one sample that
//! reaches the floor pins the index exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebraTable, Subalgebra};
use crate::linalg::{integer_rank, integer_row, rat, rat_vec_serde, Rat, SubspaceBasis};
use crate::orbits::OrbitDescriptor;

pub const XI_RANGE: i64 = 99;
pub const DEFAULT_SAMPLES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("functional has {got} coordinates, subalgebra has dimension {dim}")]
    BadFunctional { got: usize, dim: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundSource {
    VinbergRank,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexCertificate {
    pub subalgebra_dim: usize,
    pub claimed_index: usize,
    /// Coordinates of `ξ` on the canonical basis of the subalgebra.
    #[serde(with = "rat_vec_serde")]
    pub witness_functional: Vec<Rat>,
    pub witness_rank: usize,
    pub samples_tried: usize,
    pub rng_seed: u64,
    pub lower_bound_source: LowerBoundSource,
    /// Index floor when `lower_bound_source` is `vinberg_rank`.
    pub lower_bound: Option<usize>,
    pub certified: bool,
    pub parity_ok: bool,
    pub vinberg_ok: bool,
    /// Kirillov rank of every sample, in sampling order.
    pub sample_ranks: Vec<usize>,
}

impl IndexCertificate {
    /// Recomputes the witness rank from the stored functional.
    pub fn replay(&self, sub: &Subalgebra) -> bool {
        sub.dim() == self.subalgebra_dim
            && kirillov_rank_in(sub, &self.witness_functional).ok() == Some(self.witness_rank)
    }
}

/// Rank of the Kirillov form of `ξ` on the subalgebra.
pub fn kirillov_rank_in(sub: &Subalgebra, xi: &[Rat]) -> Result<usize, IndexError> {
    if xi.len() != sub.dim() {
        return Err(IndexError::BadFunctional {
            got: xi.len(),
            dim: sub.dim(),
        });
    }
    let m = sub.kirillov_matrix(xi);
    let r = integer_rank(m.iter().map(|row| integer_row(row)).collect());
    assert!(r % 2 == 0, "Kirillov form of odd rank");
    Ok(r)
}

pub fn kirillov_rank(l: &LieAlgebraTable, sub: &SubspaceBasis, xi: &[Rat]) -> Result<usize, IndexError> {
    kirillov_rank_in(&Subalgebra::new(l, sub)?, xi)
}

/// Functional number `i` drawn from its own stream of the seeded generator.
pub fn sample_functional(dim: usize, seed: u64, i: usize) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    (0..dim).map(|_| rat(rng.gen_range(-XI_RANGE..=XI_RANGE))).collect()
}

#[derive(Clone, Debug)]
pub struct UpperBound {
    pub bound: usize,
    pub best_xi: Vec<Rat>,
    pub best_rank: usize,
    pub ranks: Vec<usize>,
}

/// `dim − max rank` over `samples` functionals.
pub fn index_upper_bound(sub: &Subalgebra, samples: usize, seed: u64) -> UpperBound {
    sample_until(sub, samples, seed, None)
}

fn sample_until(sub: &Subalgebra, samples: usize, seed: u64, stop_at: Option<usize>) -> UpperBound {
    let d = sub.dim();
    let mut best = UpperBound {
        bound: d,
        best_xi: vec![Rat::from_integer(0.into()); d],
        best_rank: 0,
        ranks: Vec::new(),
    };
    for i in 0..samples.max(1) {
        let xi = sample_functional(d, seed, i);
        let r = kirillov_rank_in(sub, &xi).expect("dimension matches");
        best.ranks.push(r);
        if best.ranks.len() == 1 || r > best.best_rank {
            best.best_rank = r;
            best.bound = d - r;
            best.best_xi = xi;
        }
        if stop_at == Some(best.bound) {
            break;
        }
    }
    best
}

/// Certifies `ind sub = floor` when a sample reaches a known lower bound;
/// otherwise reports the best upper bound.
pub fn certify_index(sub: &Subalgebra, floor: Option<usize>, samples: usize, seed: u64) -> IndexCertificate {
    let ub = sample_until(sub, samples, seed, floor);
    let d = sub.dim();
    let (parity_ok, vinberg_ok) = match floor {
        Some(f) => (
            ub.ranks.iter().all(|r| (d - r) >= f && (d - r - f) % 2 == 0),
            ub.ranks.iter().all(|r| d - r >= f),
        ),
        None => (true, true),
    };
    IndexCertificate {
        subalgebra_dim: d,
        claimed_index: ub.bound,
        witness_functional: ub.best_xi,
        witness_rank: ub.best_rank,
        samples_tried: ub.ranks.len(),
        rng_seed: seed,
        lower_bound_source: if floor.is_some() {
            LowerBoundSource::VinbergRank
        } else {
            LowerBoundSource::None
        },
        lower_bound: floor,
        certified: floor == Some(ub.bound) && parity_ok && vinberg_ok,
        parity_ok,
        vinberg_ok,
        sample_ranks: ub.ranks,
    }
}

/// `ind 𝔤ᵉ = rk 𝔤` for the orbit's representative.
pub fn certify_elashvili(
    l: &LieAlgebraTable,
    orbit: &OrbitDescriptor,
    samples: usize,
    seed: u64,
) -> Result<IndexCertificate, IndexError> {
    let rank = l.rank().ok_or(AlgebraError::NoRootData)?;
    let sub = Subalgebra::new(l, &orbit.centralizer)?;
    Ok(certify_index(&sub, Some(rank), samples, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chevalley_algebra;
    use crate::classical::classical_matrix_algebra;
    use crate::orbits::{nilpotent_from_partition, parabolic, Partition};
    use crate::roots::Family;

    #[test]
    fn abelian_has_rank_zero() {
        let l = chevalley_algebra("B2".parse().unwrap());
        let cartan = SubspaceBasis::span(10, (8..10).map(|i| l.basis_element(i).into_coords())).unwrap();
        let sub = Subalgebra::new(&l, &cartan).unwrap();
        let xi = sample_functional(2, 1, 0);
        assert_eq!(kirillov_rank_in(&sub, &xi).unwrap(), 0);
        assert_eq!(index_upper_bound(&sub, 4, 1).bound, 2);
    }

    #[test]
    fn sl2_index_one() {
        let l = chevalley_algebra("A1".parse().unwrap());
        let sub = Subalgebra::new(&l, &SubspaceBasis::full(3)).unwrap();
        let ub = index_upper_bound(&sub, 8, 3);
        assert_eq!((ub.best_rank, ub.bound), (2, 1));
    }

    #[test]
    fn borel_of_sl2_has_index_zero() {
        let l = chevalley_algebra("A1".parse().unwrap());
        let b = SubspaceBasis::span(3, [l.basis_element(0).into_coords(), l.basis_element(2).into_coords()]).unwrap();
        let sub = Subalgebra::new(&l, &b).unwrap();
        assert_eq!(index_upper_bound(&sub, 8, 0).bound, 0);
        let cert = certify_index(&sub, None, 8, 0);
        assert!(!cert.certified);
        assert_eq!(cert.lower_bound_source, LowerBoundSource::None);
    }

    #[test]
    fn minimal_sl3_certified() {
        let l = classical_matrix_algebra(Family::A, 3).unwrap();
        let d = nilpotent_from_partition(&l, &Partition::new(vec![2, 1])).unwrap();
        let c = certify_elashvili(&l, &d, 8, 42).unwrap();
        assert!(c.certified);
        assert_eq!((c.subalgebra_dim, c.claimed_index, c.witness_rank), (4, 2, 2));
        let sub = Subalgebra::new(&l, &d.centralizer).unwrap();
        assert!(c.replay(&sub));
    }

    #[test]
    fn regular_centralizer_is_abelian() {
        let l = classical_matrix_algebra(Family::C, 6).unwrap();
        let d = nilpotent_from_partition(&l, &Partition::new(vec![6])).unwrap();
        let sub = Subalgebra::new(&l, &d.centralizer).unwrap();
        assert!(sub.is_abelian());
        for i in 0..4 {
            assert_eq!(kirillov_rank_in(&sub, &sample_functional(3, 9, i)).unwrap(), 0);
        }
    }

    #[test]
    fn non_subalgebra_rejected() {
        let l = chevalley_algebra("A1".parse().unwrap());
        let s = SubspaceBasis::span(3, [l.basis_element(0).into_coords(), l.basis_element(1).into_coords()]).unwrap();
        assert!(kirillov_rank(&l, &s, &[rat(1), rat(1)]).is_err());
    }

    #[test]
    fn certificate_json_round_trip() {
        let l = classical_matrix_algebra(Family::A, 3).unwrap();
        let d = nilpotent_from_partition(&l, &Partition::new(vec![3])).unwrap();
        let c = certify_elashvili(&l, &d, 8, 5).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"lower_bound_source\":\"vinberg_rank\""));
        let back: IndexCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_functional(5, 7, 2), sample_functional(5, 7, 2));
        assert_ne!(sample_functional(5, 7, 2), sample_functional(5, 7, 3));
    }

    #[test]
    fn parabolic_upper_bound_only() {
        let l = chevalley_algebra("A2".parse().unwrap());
        let p = parabolic(&l, &[0]).unwrap();
        let pb = p.levi.sum(&p.nilradical).unwrap();
        let sub = Subalgebra::new(&l, &pb).unwrap();
        let c = certify_index(&sub, None, 8, 1);
        assert!(!c.certified);
        // Maximal parabolic of sl3 with blocks (2,1): index gcd(2,1) - 1 = 0.
        assert_eq!(c.claimed_index, 0);
        // Borel of sl3: dimension 5, index 1.
        let b = parabolic(&l, &[]).unwrap();
        let sub = Subalgebra::new(&l, &b.levi.sum(&b.nilradical).unwrap()).unwrap();
        assert_eq!(index_upper_bound(&sub, 8, 1).bound, 1);
    }
}
