//! Matrix realizations of `sl_n`, `so_n` and `sp_n`.
//!
//! Orthogonal and symplectic algebras preserve an antidiagonal form `J`
//! (symmetric for `so_n`; for `sp_n` the top half of the antidiagonal is `+1`
//! and the bottom half `-1`). With these forms the upper-triangular part of
//! the algebra is a Borel subalgebra. The Cartan basis consists of the simple
//! coroots, so root data and labels line up with [`chevalley_algebra`].
//!
//! [`chevalley_algebra`]: crate::algebra::chevalley_algebra

use std::collections::HashSet;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{LieAlgebraTable, RootData};
use crate::linalg::{rat, solve, Rat, RatMatrix};
use crate::roots::{build_root_system, CartanType, Family, Root};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    #[error("{family} has no matrix realization of size {n}")]
    InvalidSize { family: Family, n: usize },
}

/// Matrix data behind a classical [`LieAlgebraTable`].
#[derive(Clone, Debug)]
pub struct MatrixRealization {
    family: Family,
    n: usize,
    form: Option<RatMatrix>,
    basis: Vec<RatMatrix>,
    probes: Vec<Option<(usize, usize)>>,
    cartan: Vec<usize>,
    cartan_rows: usize,
}

/// Cartan type of the classical algebra of `n × n` matrices.
pub fn classical_type(family: Family, n: usize) -> Result<CartanType, ClassicalError> {
    let bad = ClassicalError::InvalidSize { family, n };
    let rank = match family {
        Family::A if n >= 2 => n - 1,
        Family::B if n >= 3 && n % 2 == 1 => (n - 1) / 2,
        Family::C if n >= 2 && n % 2 == 0 => n / 2,
        Family::D if n >= 4 && n % 2 == 0 => n / 2,
        _ => return Err(bad),
    };
    CartanType::new(family, rank).map_err(|_| bad)
}

/// Matrix size of the natural representation.
pub fn natural_size(t: CartanType) -> Option<usize> {
    let l = t.rank();
    match t.family() {
        Family::A => Some(l + 1),
        Family::B => Some(2 * l + 1),
        Family::C => Some(2 * l),
        Family::D => Some(2 * l),
        _ => None,
    }
}

fn antidiagonal_form(family: Family, n: usize) -> Option<RatMatrix> {
    match family {
        Family::A => None,
        Family::B | Family::D => {
            let mut j = RatMatrix::zeros(n, n);
            for i in 0..n {
                j.set(i, n - 1 - i, rat(1));
            }
            Some(j)
        }
        _ => {
            let mut j = RatMatrix::zeros(n, n);
            for i in 0..n {
                j.set(i, n - 1 - i, rat(if i < n / 2 { 1 } else { -1 }));
            }
            Some(j)
        }
    }
}

fn elementary(n: usize, i: usize, j: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    m.set(i, j, rat(1));
    m
}

fn commutator(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    let mut out = RatMatrix::zeros(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let v = ab.get(i, j) - ba.get(i, j);
            if !v.is_zero() {
                out.set(i, j, v);
            }
        }
    }
    out
}

impl MatrixRealization {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> Option<&RatMatrix> {
        self.form.as_ref()
    }

    pub fn basis_matrix(&self, i: usize) -> &RatMatrix {
        &self.basis[i]
    }

    /// `Y - J⁻¹ Yᵀ J`, which lies in the algebra for every `Y`; for `sl_n`
    /// the trace is removed instead.
    pub fn project(&self, y: &RatMatrix) -> RatMatrix {
        let n = self.n;
        match &self.form {
            None => {
                let tr = (0..n).fold(Rat::zero(), |acc, i| acc + y.get(i, i));
                let shift = tr / rat(n as i64);
                let mut out = y.clone();
                for i in 0..n {
                    let v = out.get(i, i) - &shift;
                    out.set(i, i, v);
                }
                out
            }
            Some(j) => {
                let jinv = j.inverse().expect("nondegenerate form");
                let t = jinv.mul(&y.transpose()).mul(j);
                let mut out = y.clone();
                for r in 0..n {
                    for c in 0..n {
                        let v = y.get(r, c) - t.get(r, c);
                        out.set(r, c, v);
                    }
                }
                out
            }
        }
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        self.coords_of(m).is_some()
    }

    /// Coordinates of a matrix in the algebra basis, or `None` when the
    /// matrix is not in the algebra.
    pub fn coords_of(&self, m: &RatMatrix) -> Option<Vec<Rat>> {
        let dim = self.basis.len();
        let mut c = vec![Rat::zero(); dim];
        for (k, p) in self.probes.iter().enumerate() {
            if let Some((r, col)) = p {
                c[k] = m.get(*r, *col) / self.basis[k].get(*r, *col);
            }
        }
        let l = self.cartan.len();
        let mut a = RatMatrix::zeros(self.cartan_rows, l);
        let mut rhs = Vec::with_capacity(self.cartan_rows);
        for i in 0..self.cartan_rows {
            for (k, &b) in self.cartan.iter().enumerate() {
                a.set(i, k, self.basis[b].get(i, i).clone());
            }
            rhs.push(m.get(i, i).clone());
        }
        let hc = solve(&a, &rhs)?;
        for (k, &b) in self.cartan.iter().enumerate() {
            c[b] = hc[k].clone();
        }
        if self.to_matrix(&c) == *m {
            Some(c)
        } else {
            None
        }
    }

    pub fn to_matrix(&self, coords: &[Rat]) -> RatMatrix {
        let n = self.n;
        let mut out = RatMatrix::zeros(n, n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let x = b.get(i, j);
                    if !x.is_zero() {
                        let v = out.get(i, j) + c * x;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

/// `sl_n`, `so_n` or `sp_n` as a [`LieAlgebraTable`], with brackets computed
/// as matrix commutators.
pub fn classical_matrix_algebra(family: Family, n: usize) -> Result<LieAlgebraTable, ClassicalError> {
    let t = classical_type(family, n)?;
    let rs = build_root_system(t);
    let ell = t.rank();
    let np = rs.num_positive;
    let form = antidiagonal_form(family, n);

    // Simple coroots as diagonal matrices.
    let mut coroots: Vec<RatMatrix> = Vec::with_capacity(ell);
    for k in 0..ell {
        let mut d = vec![0i64; n];
        match family {
            Family::A => {
                d[k] = 1;
                d[k + 1] = -1;
            }
            _ => {
                let m = ell;
                let mut a = vec![0i64; m];
                if k + 1 < m {
                    a[k] = 1;
                    a[k + 1] = -1;
                } else {
                    match family {
                        Family::B => a[m - 1] = 2,
                        Family::C => a[m - 1] = 1,
                        _ => {
                            a[m - 2] = 1;
                            a[m - 1] = 1;
                        }
                    }
                }
                for i in 0..m {
                    d[i] = a[i];
                    d[n - 1 - i] = -a[i];
                }
            }
        }
        let mut h = RatMatrix::zeros(n, n);
        for (i, v) in d.iter().enumerate() {
            h.set(i, i, rat(*v));
        }
        coroots.push(h);
    }

    let mut proto = MatrixRealization {
        family,
        n,
        form,
        basis: Vec::new(),
        probes: Vec::new(),
        cartan: Vec::new(),
        cartan_rows: if family == Family::A { n - 1 } else { ell },
    };

    let cartan_t: Vec<Vec<Rat>> = (0..ell)
        .map(|j| (0..ell).map(|i| rat(rs.cartan_matrix[i][j])).collect())
        .collect();
    let cartan_t = RatMatrix::from_rows(ell, cartan_t).expect("square");

    let mut slots: Vec<Option<(RatMatrix, (usize, usize))>> = vec![None; 2 * np];
    let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let x = proto.project(&elementary(n, i, j));
            let mut support: Vec<(usize, usize)> = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    if !x.get(r, c).is_zero() {
                        support.push((r, c));
                    }
                }
            }
            if support.is_empty() || !seen.insert(support.clone()) {
                continue;
            }
            let (r, c) = support[0];
            let lambda: Vec<Rat> = coroots.iter().map(|h| h.get(r, r) - h.get(c, c)).collect();
            let coeffs = solve(&cartan_t, &lambda).expect("Cartan matrix invertible");
            let ints: Vec<i64> = coeffs
                .iter()
                .map(|q| {
                    assert!(q.is_integer(), "non-integral root");
                    i64::try_from(q.to_integer()).expect("small root coordinate")
                })
                .collect();
            let root = rs.find(&ints).expect("weight of a root vector is a root");
            let slot = if root.positive { root.index } else { np + root.index };
            assert!(slots[slot].is_none(), "root space of dimension > 1");
            slots[slot] = Some((x, (r, c)));
        }
    }

    for s in slots {
        let (m, probe) = s.expect("every root has a root vector");
        proto.basis.push(m);
        proto.probes.push(Some(probe));
    }
    for h in coroots {
        proto.cartan.push(proto.basis.len());
        proto.basis.push(h);
        proto.probes.push(None);
    }

    let dim = proto.basis.len();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let c = commutator(&proto.basis[i], &proto.basis[j]);
            if c.is_zero() {
                continue;
            }
            let coords = proto.coords_of(&c).expect("algebra is closed under commutators");
            let v: Vec<(usize, Rat)> = coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            brackets.push(((i, j), v));
        }
    }

    let mut labels = Vec::with_capacity(dim);
    labels.extend((1..=np).map(|k| format!("x{k}")));
    labels.extend((1..=np).map(|k| format!("y{k}")));
    labels.extend((1..=ell).map(|i| format!("h{i}")));
    let weights = (0..np)
        .map(|k| Some(Root::pos(k)))
        .chain((0..np).map(|k| Some(Root::neg(k))))
        .chain(std::iter::repeat(None).take(ell))
        .collect();
    let rd = RootData {
        cartan: (2 * np..2 * np + ell).collect(),
        positive: (0..np).collect(),
        negative: (np..2 * np).collect(),
        weights,
        root_system: rs,
    };
    let name = match family {
        Family::A => format!("sl{n}"),
        Family::C => format!("sp{n}"),
        _ => format!("so{n}"),
    };
    Ok(LieAlgebraTable::from_brackets(&name, labels, brackets)
        .with_roots(rd)
        .with_matrix(proto))
}
