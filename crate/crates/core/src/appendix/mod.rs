//! Verifier for rigid nilpotent orbits whose centralizer has a
//! two-dimensional center.
//!
//! Given `e`, a nonzero semisimple `t ∈ 𝔤ᵉ` and a torus `𝔱₁ ∋ t` of `𝔩ᵉ = 𝔤ᵉ ∩ 𝔤ᵗ`,
//! `𝔤ᵉ` splits into `𝔱₁`-weight spaces. For every pair `±λ` with `λ(t) > 0`
//! the bracket `𝔤ᵉ_λ × 𝔤ᵉ_{-λ} → 𝔩₁ᵉ` gives a square matrix of linear forms
//! on `(𝔩₁ᵉ)*`; its determinant `q_λ` decides which sufficient condition
//! applies.

pub mod case_file;
pub mod poly;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{centralizer_in, chevalley_algebra, AlgebraError, LieAlgebraTable, Subalgebra};
use crate::index::{certify_index, IndexCertificate};
use crate::linalg::{determinant, fmt_rat, rank_and_kernel, rat, solve, Rat, RatMatrix, SubspaceBasis};
use crate::orbits::{nilpotent_from_support, OrbitError};

pub use case_file::{Expectations, RigidCaseSpec, Term};
pub use poly::{symbolic_det, Poly};

/// Largest order expanded symbolically without first trying a witness.
pub const SYMBOLIC_FIRST: usize = 5;
/// Largest order ever expanded symbolically.
pub const SYMBOLIC_MAX: usize = 8;
pub const WITNESS_TRIES: usize = 8;
pub const WITNESS_RANGE: i64 = 99;

const E7_41: &str = include_str!("../../cases/e7-41.case");
const E8_84: &str = include_str!("../../cases/e8-84.case");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AppendixError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("mapped entry {index} is not a positive root")]
    NotARoot { index: usize },
    #[error("algebra has no root data")]
    NoRootData,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("{0} is not in the centralizer of e")]
    NotInCentralizer(String),
    #[error("torus elements {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("t must be the first torus generator")]
    TorusMismatch,
    #[error("torus generator {0} does not act diagonalizably with rational eigenvalues")]
    NotSplitSemisimple(usize),
    #[error("weight {0} has no opposite of equal multiplicity")]
    Asymmetric(String),
    #[error("bracket of weight {0} with its opposite leaves the zero weight space")]
    PairingOutsideZeroSpace(String),
    #[error("determinant of order {order} has no nonzero witness and is too large to expand")]
    OrderTooLarge { order: usize },
    #[error("unknown built-in case `{0}`")]
    UnknownCase(String),
}

/// Names of the shipped case files.
pub fn builtin_case_names() -> &'static [&'static str] {
    &["e7-41", "e8-84"]
}

pub fn builtin_case_text(name: &str) -> Option<&'static str> {
    match name {
        "e7-41" => Some(E7_41),
        "e8-84" => Some(E8_84),
        _ => None,
    }
}

pub fn builtin_case(name: &str) -> Result<RigidCaseSpec, AppendixError> {
    RigidCaseSpec::parse(builtin_case_text(name).ok_or_else(|| AppendixError::UnknownCase(name.into()))?)
}

pub fn format_weight(w: &[Rat]) -> String {
    w.iter().map(fmt_rat).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Vec<Rat>,
    pub space: SubspaceBasis,
}

/// Simultaneous eigenspaces of commuting `ad`-semisimple elements acting on
/// an invariant subspace.
#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    pub torus: Vec<Vec<Rat>>,
    /// Sorted by weight, largest first.
    pub spaces: Vec<WeightSpace>,
}

impl WeightDecomposition {
    pub fn find(&self, w: &[Rat]) -> Option<&WeightSpace> {
        self.spaces.iter().find(|s| s.weight == w)
    }

    pub fn multiplicity(&self, w: &[Rat]) -> usize {
        self.find(w).map_or(0, |s| s.space.dim())
    }

    pub fn zero_space(&self) -> Option<&SubspaceBasis> {
        let z = vec![Rat::zero(); self.torus.len()];
        self.find(&z).map(|s| &s.space)
    }

    pub fn is_symmetric(&self) -> bool {
        self.spaces.iter().all(|s| {
            let neg: Vec<Rat> = s.weight.iter().map(|x| -x).collect();
            self.multiplicity(&neg) == s.space.dim()
        })
    }

    /// Multiplicities of the eigenvalues of the first generator.
    pub fn first_coordinate_multiplicities(&self) -> BTreeMap<Rat, usize> {
        let mut m = BTreeMap::new();
        for s in &self.spaces {
            *m.entry(s.weight[0].clone()).or_insert(0) += s.space.dim();
        }
        m
    }
}

/// Matrix of `g` acting on `w`, in the canonical coordinates of `w`.
fn restricted_action(l: &LieAlgebraTable, g: &[Rat], w: &SubspaceBasis) -> Option<RatMatrix> {
    let d = w.dim();
    let mut m = RatMatrix::zeros(d, d);
    for (k, v) in w.vectors().iter().enumerate() {
        let c = w.coordinates(&l.bracket_vec(g, v))?;
        for (r, x) in c.into_iter().enumerate() {
            m.set(r, k, x);
        }
    }
    Some(m)
}

/// Monic minimal polynomial, lowest coefficient first.
fn minimal_polynomial(a: &RatMatrix) -> Vec<Rat> {
    let d = a.rows();
    let flat = |m: &RatMatrix| -> Vec<Rat> { (0..d).flat_map(|i| m.row(i).to_vec()).collect() };
    let mut powers = vec![flat(&RatMatrix::identity(d))];
    let mut cur = RatMatrix::identity(d);
    loop {
        cur = cur.mul(a);
        let target = flat(&cur);
        let k = powers.len();
        let rows: Vec<Vec<Rat>> = (0..d * d).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect();
        let sys = RatMatrix::from_rows(k, rows).expect("rectangular");
        let rhs: Vec<Rat> = target.iter().map(|x| -x).collect();
        if let Some(c) = solve(&sys, &rhs) {
            let mut out = c;
            out.push(Rat::one());
            return out;
        }
        powers.push(target);
    }
}

fn divisors(n: &num_bigint::BigInt) -> Option<Vec<num_bigint::BigInt>> {
    use num_bigint::BigInt;
    let n = num_traits::Signed::abs(n);
    if n.bits() > 40 {
        return None;
    }
    let n: u64 = n.try_into().ok()?;
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Some(out)
}

/// Distinct rational roots of a monic polynomial, or `None` when it does not
/// split into distinct rational linear factors.
fn split_roots(poly: &[Rat]) -> Option<Vec<Rat>> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let deg = poly.len() - 1;
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero())?;
    let mut roots = Vec::new();
    if low > 1 {
        return None;
    }
    if low == 1 {
        roots.push(Rat::zero());
    }
    let eval = |x: &Rat| {
        let mut s = Rat::zero();
        for c in poly.iter().rev() {
            s = s * x + c;
        }
        s
    };
    for p in divisors(&ints[low])? {
        for q in divisors(&ints[deg])? {
            for sign in [1, -1] {
                let x = Rat::new(p.clone() * sign, q.clone());
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    (roots.len() == deg).then_some(roots)
}

/// Splits `ambient` into joint eigenspaces of `torus`.
pub fn weight_decomposition(
    l: &LieAlgebraTable,
    ambient: &SubspaceBasis,
    torus: &[Vec<Rat>],
) -> Result<WeightDecomposition, AppendixError> {
    for (i, a) in torus.iter().enumerate() {
        for (j, b) in torus.iter().enumerate().skip(i + 1) {
            if l.bracket_vec(a, b).iter().any(|x| !x.is_zero()) {
                return Err(AppendixError::NotCommuting(i, j));
            }
        }
    }
    let mut spaces = vec![WeightSpace {
        weight: Vec::new(),
        space: ambient.clone(),
    }];
    for (gi, g) in torus.iter().enumerate() {
        let mut next = Vec::new();
        for ws in spaces {
            if ws.space.dim() == 0 {
                continue;
            }
            let a = restricted_action(l, g, &ws.space).ok_or(AppendixError::NotSplitSemisimple(gi))?;
            let roots = split_roots(&minimal_polynomial(&a)).ok_or(AppendixError::NotSplitSemisimple(gi))?;
            let mut total = 0;
            for lam in roots {
                let mut shifted = a.clone();
                for i in 0..a.rows() {
                    shifted.set(i, i, a.get(i, i) - &lam);
                }
                let (_, ker) = rank_and_kernel(&shifted);
                let gens: Vec<Vec<Rat>> = ker.vectors().iter().map(|c| ws.space.combine(c)).collect();
                let space = SubspaceBasis::span(l.dim(), &gens).expect("lengths match");
                total += space.dim();
                let mut weight = ws.weight.clone();
                weight.push(lam);
                next.push(WeightSpace { weight, space });
            }
            if total != ws.space.dim() {
                return Err(AppendixError::NotSplitSemisimple(gi));
            }
        }
        spaces = next;
    }
    spaces.sort_by(|a, b| b.weight.cmp(&a.weight));
    Ok(WeightDecomposition {
        torus: torus.to_vec(),
        spaces,
    })
}

/// `[v_i, w_j]` for bases of `𝔤ᵉ_λ` and `𝔤ᵉ_{-λ}`.
#[derive(Clone, Debug)]
pub struct PairingBlock {
    pub weight: Vec<Rat>,
    pub v: Vec<Vec<Rat>>,
    pub w: Vec<Vec<Rat>>,
    /// Entries as vectors of `𝔤`.
    pub entries: Vec<Vec<Vec<Rat>>>,
}

impl PairingBlock {
    pub fn order(&self) -> usize {
        self.v.len()
    }

    /// Evaluates every entry at a functional on `𝔤`.
    pub fn evaluate(&self, xi: &[Rat]) -> RatMatrix {
        let m = self.order();
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| crate::linalg::dot(e, xi)).collect())
            .collect();
        RatMatrix::from_rows(m, rows).expect("square")
    }

    fn submatrix(&self, drop_row: usize, drop_col: usize) -> PairingBlock {
        let keep = |k: usize, d: usize| k != d;
        PairingBlock {
            weight: self.weight.clone(),
            v: (0..self.order()).filter(|&i| keep(i, drop_row)).map(|i| self.v[i].clone()).collect(),
            w: (0..self.order()).filter(|&j| keep(j, drop_col)).map(|j| self.w[j].clone()).collect(),
            entries: (0..self.order())
                .filter(|&i| keep(i, drop_row))
                .map(|i| {
                    (0..self.order())
                        .filter(|&j| keep(j, drop_col))
                        .map(|j| self.entries[i][j].clone())
                        .collect()
                })
                .collect(),
        }
    }
}

/// One block per weight with positive first coordinate.
pub fn pairing_blocks(l: &LieAlgebraTable, wd: &WeightDecomposition) -> Result<Vec<PairingBlock>, AppendixError> {
    let zero = wd.zero_space();
    let mut out = Vec::new();
    for ws in wd.spaces.iter().filter(|s| s.weight[0] > Rat::zero()) {
        let neg: Vec<Rat> = ws.weight.iter().map(|x| -x).collect();
        let opp = wd
            .find(&neg)
            .filter(|o| o.space.dim() == ws.space.dim())
            .ok_or_else(|| AppendixError::Asymmetric(format_weight(&ws.weight)))?;
        let v = ws.space.vectors().to_vec();
        let w = opp.space.vectors().to_vec();
        let mut entries = Vec::with_capacity(v.len());
        for a in &v {
            let row: Vec<Vec<Rat>> = w.iter().map(|b| l.bracket_vec(a, b)).collect();
            for e in &row {
                let inside = match zero {
                    Some(z) => z.contains(e),
                    None => e.iter().all(|x| x.is_zero()),
                };
                if !inside {
                    return Err(AppendixError::PairingOutsideZeroSpace(format_weight(&ws.weight)));
                }
            }
            entries.push(row);
        }
        out.push(PairingBlock {
            weight: ws.weight.clone(),
            v,
            w,
            entries,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QMethod {
    Symbolic,
    EvaluationWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QResult {
    pub order: usize,
    pub nonzero: bool,
    pub method: QMethod,
    /// Dimension of the span of the entries (number of variables).
    pub variables: usize,
    /// Number of monomials when expanded symbolically.
    pub terms: Option<usize>,
    /// A functional on `𝔤` with nonzero determinant.
    #[serde(with = "opt_rat_vec")]
    pub witness: Option<Vec<Rat>>,
    #[serde(with = "opt_rat")]
    pub witness_value: Option<Rat>,
}

mod opt_rat_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rat>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|v| v.iter().map(fmt_rat).collect::<Vec<_>>()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rat>>, D::Error> {
        let v: Option<Vec<String>> = Option::deserialize(d)?;
        v.map(|v| {
            v.iter()
                .map(|s| crate::linalg::parse_rat(s).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{s}`"))))
                .collect()
        })
        .transpose()
    }
}

mod opt_rat {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(fmt_rat).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        let v: Option<String> = Option::deserialize(d)?;
        v.map(|s| crate::linalg::parse_rat(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{s}`"))))
            .transpose()
    }
}

/// Variables for the entries: coordinates on the span of all entries, with a
/// functional on `𝔤` realizing any assignment.
struct EntryCoordinates {
    span: SubspaceBasis,
    linear: Vec<Vec<Vec<Rat>>>,
}

fn entry_coordinates(block: &PairingBlock, ambient: usize) -> EntryCoordinates {
    let span = SubspaceBasis::span(ambient, block.entries.iter().flatten()).expect("lengths match");
    let linear = block
        .entries
        .iter()
        .map(|r| r.iter().map(|e| span.coordinates(e).expect("entry lies in its span")).collect())
        .collect();
    EntryCoordinates { span, linear }
}

fn functional_from(span: &SubspaceBasis, z: &[Rat]) -> Vec<Rat> {
    let mut xi = vec![Rat::zero(); span.ambient_dim()];
    for (p, v) in span.pivots().iter().zip(z) {
        xi[*p] = v.clone();
    }
    xi
}

fn find_witness(block: &PairingBlock, ec: &EntryCoordinates, seed: u64) -> Option<(Vec<Rat>, Rat)> {
    let s = ec.span.dim();
    for i in 0..WITNESS_TRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let z: Vec<Rat> = (0..s).map(|_| rat(rng.gen_range(-WITNESS_RANGE..=WITNESS_RANGE))).collect();
        let xi = functional_from(&ec.span, &z);
        let d = determinant(&block.evaluate(&xi));
        if !d.is_zero() {
            return Some((xi, d));
        }
    }
    None
}

/// Decides whether the determinant of the block is a nonzero polynomial.
///
/// Orders up to [`SYMBOLIC_FIRST`] are expanded exactly; larger orders look
/// for a nonzero evaluation first and fall back to expansion up to
/// [`SYMBOLIC_MAX`].
pub fn q_nonzero(block: &PairingBlock, ambient: usize, seed: u64) -> Result<QResult, AppendixError> {
    let order = block.order();
    let ec = entry_coordinates(block, ambient);
    let vars = ec.span.dim();
    let symbolic = || {
        let m: Vec<Vec<Poly>> = ec.linear.iter().map(|r| r.iter().map(|c| Poly::linear(c)).collect()).collect();
        symbolic_det(&m, vars)
    };
    if order <= SYMBOLIC_FIRST {
        let p = symbolic();
        let nonzero = !p.is_zero();
        let wit = if nonzero { find_witness(block, &ec, seed) } else { None };
        return Ok(QResult {
            order,
            nonzero,
            method: QMethod::Symbolic,
            variables: vars,
            terms: Some(p.num_terms()),
            witness: wit.as_ref().map(|w| w.0.clone()),
            witness_value: wit.map(|w| w.1),
        });
    }
    if let Some((xi, d)) = find_witness(block, &ec, seed) {
        return Ok(QResult {
            order,
            nonzero: true,
            method: QMethod::EvaluationWitness,
            variables: vars,
            terms: None,
            witness: Some(xi),
            witness_value: Some(d),
        });
    }
    if order > SYMBOLIC_MAX {
        return Err(AppendixError::OrderTooLarge { order });
    }
    let p = symbolic();
    Ok(QResult {
        order,
        nonzero: !p.is_zero(),
        method: QMethod::Symbolic,
        variables: vars,
        terms: Some(p.num_terms()),
        witness: None,
        witness_value: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub weight: String,
    pub order: usize,
    pub q: QResult,
}

/// Reordering that puts a nonzero `(m−1)`-minor of a singular block in the
/// leading position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularReport {
    pub weight: String,
    pub order: usize,
    /// Generic rank; `order − 1` when a nonzero minor exists.
    pub generic_rank: Option<usize>,
    /// Basis vector of `𝔤ᵉ_λ` moved to the last position (0-based).
    pub moved_row: Option<usize>,
    /// Basis vector of `𝔤ᵉ_{-λ}` moved to the last position (0-based).
    pub moved_col: Option<usize>,
    pub minor: Option<QResult>,
}

pub fn leading_minor_search(block: &PairingBlock, ambient: usize, seed: u64) -> Result<SingularReport, AppendixError> {
    let m = block.order();
    let mut report = SingularReport {
        weight: format_weight(&block.weight),
        order: m,
        generic_rank: None,
        moved_row: None,
        moved_col: None,
        minor: None,
    };
    if m == 0 {
        return Ok(report);
    }
    // Reverse order so the first hit moves the last basis vectors, leaving
    // the given order untouched whenever possible.
    for r in (0..m).rev() {
        for c in (0..m).rev() {
            let q = q_nonzero(&block.submatrix(r, c), ambient, seed)?;
            if q.nonzero {
                report.generic_rank = Some(m - 1);
                report.moved_row = Some(r);
                report.moved_col = Some(c);
                report.minor = Some(q);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl Check {
    fn new(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            ok: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub weight: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub name: String,
    pub cartan_type: String,
    pub rank: usize,
    pub e: String,
    pub t: String,
    pub dim_ge: usize,
    pub dim_z: usize,
    pub dim_le: usize,
    pub dim_l1e: usize,
    pub weights: Vec<WeightRow>,
    pub blocks: Vec<BlockReport>,
    pub singular: Vec<SingularReport>,
    /// `Some(1)` or `Some(2)` when the corresponding condition holds.
    pub condition: Option<u8>,
    pub elashvili: IndexCertificate,
    pub levi_index: IndexCertificate,
    pub checks: Vec<Check>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }
}

/// Replays every computation of a case and compares it with the case's
/// expectations.
pub fn verify_rigid_case(spec: &RigidCaseSpec, samples: usize, seed: u64) -> Result<CaseReport, AppendixError> {
    let l = chevalley_algebra(spec.cartan_type);
    let rank = spec.cartan_type.rank();
    let e_vec = spec.resolve(&l, &spec.e)?;
    let support: Vec<(usize, Rat)> = e_vec
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    let orbit = nilpotent_from_support(&l, &support)?;
    let ge = &orbit.centralizer;
    let ge_alg = Subalgebra::new(&l, ge)?;
    let z = ge_alg.center();

    let t = spec.resolve(&l, &spec.t)?;
    if !ge.contains(&t) {
        return Err(AppendixError::NotInCentralizer("t".into()));
    }
    let torus: Vec<Vec<Rat>> = spec.t1.iter().map(|g| spec.resolve(&l, g)).collect::<Result<_, _>>()?;
    if torus[0] != t {
        return Err(AppendixError::TorusMismatch);
    }
    for (i, g) in torus.iter().enumerate() {
        if !ge.contains(g) {
            return Err(AppendixError::NotInCentralizer(format!("torus generator {}", i + 1)));
        }
    }
    let le = centralizer_in(&l, ge, std::slice::from_ref(&t));
    let l1e = centralizer_in(&l, ge, &torus);
    let wd = weight_decomposition(&l, ge, &torus)?;

    let mut checks = Vec::new();
    let ex = &spec.expect;
    if let Some(d) = ex.dim_ge {
        checks.push(Check::new("dim_ge", d, ge.dim()));
    }
    if let Some(d) = ex.dim_z {
        checks.push(Check::new("dim_z", d, z.dim()));
    }
    if let Some(d) = ex.dim_le {
        checks.push(Check::new("dim_le", d, le.dim()));
    }
    checks.push(Check::new("t_nonzero", true, t.iter().any(|x| !x.is_zero())));
    checks.push(Check::new("weights_symmetric", true, wd.is_symmetric()));
    let zero_ok = wd.zero_space().map_or(l1e.dim() == 0, |s| *s == l1e);
    checks.push(Check::new("zero_weight_is_l1e", true, zero_ok));

    let tmult = wd.first_coordinate_multiplicities();
    for (w, m) in &ex.t_mult {
        let got = tmult.get(&crate::linalg::parse_rat(w).expect("normalized")).copied().unwrap_or(0);
        checks.push(Check::new(&format!("t_mult {w}"), m, got));
    }
    for (w, m) in &ex.weight_mult {
        let wv: Vec<Rat> = w.split(' ').map(|x| crate::linalg::parse_rat(x).expect("normalized")).collect();
        checks.push(Check::new(&format!("weight {w}"), m, wd.multiplicity(&wv)));
    }
    let levi_dim = tmult.get(&Rat::zero()).copied().unwrap_or(0);
    let paired: usize = wd
        .spaces
        .iter()
        .filter(|s| s.weight[0] > Rat::zero())
        .map(|s| s.space.dim())
        .sum();
    checks.push(Check::new("tally", ge.dim(), 2 * paired + levi_dim));
    checks.push(Check::new("zero_t_weight_is_le", le.dim(), levi_dim));

    let blocks = pairing_blocks(&l, &wd)?;
    let mut block_reports = Vec::new();
    let mut singular = Vec::new();
    for (k, b) in blocks.iter().enumerate() {
        let q = q_nonzero(b, l.dim(), seed.wrapping_add(k as u64))?;
        if !q.nonzero {
            singular.push(leading_minor_search(b, l.dim(), seed.wrapping_add(k as u64))?);
        }
        block_reports.push(BlockReport {
            weight: format_weight(&b.weight),
            order: b.order(),
            q,
        });
    }
    let condition = match singular.as_slice() {
        [] => Some(1),
        [s] if s.minor.is_some() => Some(2),
        _ => None,
    };
    if let Some(c) = ex.condition {
        checks.push(Check::new("condition", c, condition.map_or("none".into(), |c| c.to_string())));
    }
    if let Some(w) = &ex.singular_block {
        let got: Vec<&str> = singular.iter().map(|s| s.weight.as_str()).collect();
        checks.push(Check::new("singular_block", w, got.join("; ")));
    }
    if let Some(o) = ex.singular_order {
        checks.push(Check::new("singular_order", o, singular.first().map_or(0, |s| s.order)));
    }
    if let Some(r) = ex.singular_rank {
        let got = singular.first().and_then(|s| s.generic_rank);
        checks.push(Check::new("singular_rank", r, got.map_or("unknown".into(), |r| r.to_string())));
    }

    let elashvili = certify_index(&ge_alg, Some(rank), samples, seed);
    let levi_index = certify_index(&Subalgebra::new(&l, &le)?, Some(rank), samples, seed);
    if let Some(i) = ex.index {
        checks.push(Check::new("index", i, elashvili.claimed_index));
    }
    checks.push(Check::new("elashvili_certified", true, elashvili.certified));
    checks.push(Check::new("levi_index_certified", true, levi_index.certified));

    Ok(CaseReport {
        name: spec.name.clone(),
        cartan_type: spec.cartan_type.to_string(),
        rank,
        e: l.format_vec(&e_vec),
        t: l.format_vec(&t),
        dim_ge: ge.dim(),
        dim_z: z.dim(),
        dim_le: le.dim(),
        dim_l1e: l1e.dim(),
        weights: wd
            .spaces
            .iter()
            .map(|s| WeightRow {
                weight: format_weight(&s.weight),
                multiplicity: s.space.dim(),
            })
            .collect(),
        blocks: block_reports,
        singular,
        condition,
        elashvili,
        levi_index,
        checks,
    })
}
