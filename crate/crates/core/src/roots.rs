//! Root systems from Cartan type and Chevalley-basis structure constants.
//!
//! Conventions:
//! - Simple roots follow Bourbaki numbering. For `B_n` the last simple root is
//!   short, for `C_n` it is long, for `F4` roots 1 and 2 are long, for `G2`
//!   root 1 is short.
//! - `cartan[i][j] = <α_i, α_j^∨> = 2(α_i, α_j) / (α_j, α_j)`.
//! - The symmetric form is scaled so the shortest simple root has norm 2.
//! - Positive roots are sorted by height; roots of equal height are ordered
//!   lexicographically with larger coordinate vectors first, so the simple
//!   roots come first in index order.
//! - Structure-constant signs come from the extraspecial-pair rule: every
//!   extraspecial pair `(α, β)` gets `N_{α,β} = +(p + 1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
}

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
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(RootError::InvalidType(format!("{family}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Invariant degrees `d_1 ≤ … ≤ d_ℓ`.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        let mut d: Vec<usize> = match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|k| 2 * k).collect(),
            Family::D => {
                let mut v: Vec<usize> = (1..n).map(|k| 2 * k).collect();
                v.push(n);
                v
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        };
        d.sort_unstable();
        d
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 2 } else { 4 };
                }
                for i in 0..n.saturating_sub(1) {
                    link(&mut g, i, i + 1, -2);
                }
                if n == 1 {
                    g[0][0] = 2;
                }
            }
            Family::C => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 4 } else { 2 };
                }
                for i in 0..n.saturating_sub(1) {
                    let v = if i + 2 == n { -2 } else { -1 };
                    link(&mut g, i, i + 1, v);
                }
                if n == 1 {
                    g[0][0] = 2;
                }
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                if n >= 3 {
                    for i in 0..n - 2 {
                        link(&mut g, i, i + 1, -1);
                    }
                    link(&mut g, n - 3, n - 1, -1);
                }
            }
            Family::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.gram();
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| 2 * g[i][j] / g[j][j]).collect())
            .collect()
    }

    /// Dimension of the simple Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        let n = self.rank;
        let pos = match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        };
        2 * pos + n
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootError::InvalidType(s.to_string());
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(fam, rank)
    }
}

impl TryFrom<String> for CartanType {
    type Error = RootError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<CartanType> for String {
    fn from(t: CartanType) -> String {
        t.to_string()
    }
}

/// Positive roots and invariants of a root system.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootSystemInfo {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub gram: Vec<Vec<i64>>,
    /// Coordinates over the simple roots.
    pub positive_roots: Vec<Vec<i64>>,
    pub num_positive: usize,
    pub borel_dim: usize,
    pub degrees: Vec<usize>,
    #[serde(skip)]
    index: HashMap<Vec<i64>, usize>,
}

/// A root identified by its positive-root index and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub index: usize,
    pub positive: bool,
}

impl Root {
    pub fn pos(index: usize) -> Root {
        Root { index, positive: true }
    }
    pub fn neg(index: usize) -> Root {
        Root { index, positive: false }
    }
    pub fn negate(self) -> Root {
        Root {
            index: self.index,
            positive: !self.positive,
        }
    }
}

pub fn build_root_system(t: CartanType) -> RootSystemInfo {
    let n = t.rank();
    let gram = t.gram();
    let cartan = t.cartan_matrix();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();

    let pairing = |root: &[i64], j: usize| -> i64 {
        // <root, α_j^∨>
        (0..n).map(|i| root[i] * cartan[i][j]).sum()
    };

    let mut by_height: Vec<Vec<Vec<i64>>> = vec![simple.clone()];
    let mut all: std::collections::HashSet<Vec<i64>> = simple.iter().cloned().collect();
    loop {
        let current = by_height.last().unwrap();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for r in current {
            for j in 0..n {
                // Largest p with r - p α_j a root.
                let mut p = 0;
                let mut probe = r.clone();
                loop {
                    probe[j] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pairing(r, j);
                if q > 0 {
                    let mut s = r.clone();
                    s[j] += 1;
                    if !next.contains(&s) {
                        next.push(s);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for s in &next {
            all.insert(s.clone());
        }
        by_height.push(next);
    }

    let mut positive_roots: Vec<Vec<i64>> = Vec::new();
    for mut level in by_height {
        level.sort_by(|a, b| b.cmp(a));
        positive_roots.extend(level);
    }
    let index = positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    let num_positive = positive_roots.len();
    RootSystemInfo {
        cartan_type: t,
        rank: n,
        cartan_matrix: cartan,
        gram,
        positive_roots,
        num_positive,
        borel_dim: num_positive + n,
        degrees: t.degrees(),
        index,
    }
}

impl RootSystemInfo {
    fn ensure_index(&mut self) {
        if self.index.is_empty() {
            self.index = self
                .positive_roots
                .iter()
                .enumerate()
                .map(|(i, r)| (r.clone(), i))
                .collect();
        }
    }

    pub fn positive_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Looks up a root (either sign) from simple-root coordinates.
    pub fn find(&self, coords: &[i64]) -> Option<Root> {
        if let Some(i) = self.positive_index(coords) {
            return Some(Root::pos(i));
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.positive_index(&neg).map(Root::neg)
    }

    pub fn coords(&self, r: Root) -> Vec<i64> {
        let c = &self.positive_roots[r.index];
        if r.positive {
            c.clone()
        } else {
            c.iter().map(|x| -x).collect()
        }
    }

    pub fn height(&self, r: Root) -> i64 {
        self.coords(r).iter().sum()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn norm(&self, r: Root) -> i64 {
        let c = &self.positive_roots[r.index];
        self.inner(c, c)
    }

    /// `<root, α_j^∨>`.
    pub fn pairing(&self, root: &[i64], j: usize) -> i64 {
        (0..self.rank).map(|i| root[i] * self.cartan_matrix[i][j]).sum()
    }

    /// Coroot of a positive root in the basis of simple coroots.
    pub fn coroot(&self, index: usize) -> Vec<i64> {
        let c = &self.positive_roots[index];
        let nr = self.norm(Root::pos(index));
        (0..self.rank)
            .map(|i| {
                let v = c[i] * self.gram[i][i];
                debug_assert_eq!(v % nr, 0);
                v / nr
            })
            .collect()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn sum(&self, a: Root, b: Root) -> Option<Root> {
        let ca = self.coords(a);
        let cb = self.coords(b);
        let s: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        if s.iter().all(|x| *x == 0) {
            return None;
        }
        self.find(&s)
    }

    /// Largest `p` with `b - p a` a root.
    pub fn string_p(&self, a: Root, b: Root) -> i64 {
        let ca = self.coords(a);
        let mut probe = self.coords(b);
        let mut p = 0;
        loop {
            for (x, y) in probe.iter_mut().zip(&ca) {
                *x -= y;
            }
            if self.find(&probe).is_some() {
                p += 1;
            } else {
                return p;
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "liecert.rootsystem/1",
            "type": self.cartan_type.to_string(),
            "rank": self.rank,
            "dim": 2 * self.num_positive + self.rank,
            "num_positive": self.num_positive,
            "borel_dim": self.borel_dim,
            "degrees": self.degrees,
            "cartan_matrix": self.cartan_matrix,
            "cartan_convention": "cartan[i][j] = <alpha_i, alpha_j^vee>",
            "simple_root_norms": (0..self.rank).map(|i| self.gram[i][i]).collect::<Vec<_>>(),
            "positive_roots": self.positive_roots,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, serde_json::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "type")]
            cartan_type: CartanType,
        }
        let raw: Raw = serde_json::from_value(v.clone())?;
        let mut rs = build_root_system(raw.cartan_type);
        rs.ensure_index();
        Ok(rs)
    }
}

/// Structure constants `N_{α,β}` of a Chevalley basis, for every pair of
/// roots whose sum is a root.
#[derive(Clone, Debug)]
pub struct ChevalleyConstants {
    num_positive: usize,
    table: HashMap<(Root, Root), i64>,
}

impl ChevalleyConstants {
    pub fn n(&self, a: Root, b: Root) -> i64 {
        self.table.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Root, Root), &i64)> {
        self.table.iter()
    }
}

struct NSolver<'a> {
    rs: &'a RootSystemInfo,
    extraspecial: Vec<Option<(usize, usize)>>,
    memo: HashMap<(usize, usize), i64>,
}

impl<'a> NSolver<'a> {
    fn norm(&self, r: Root) -> Rat {
        Rat::from_integer(self.rs.norm(r).into())
    }

    /// `N_{a,b}` for positive roots whose sum is a positive root.
    fn n_pos(&mut self, a: usize, b: usize) -> i64 {
        if let Some(v) = self.memo.get(&(a, b)) {
            return *v;
        }
        let rs = self.rs;
        let xi = rs.sum(Root::pos(a), Root::pos(b)).expect("sum is a root");
        let (g, d) = self.extraspecial[xi.index].expect("non-simple root");
        let p_gd = rs.string_p(Root::pos(g), Root::pos(d));
        let v = if a == g {
            p_gd + 1
        } else if b == g {
            -(p_gd + 1)
        } else if a > b {
            -self.n_pos(b, a)
        } else {
            // Four-root identity with a + b + (-g) + (-d) = 0.
            let (ra, rb, rg, rd) = (Root::pos(a), Root::pos(b), Root::neg(g), Root::neg(d));
            let mut acc = Rat::zero();
            if let Some(bg) = rs.sum(rb, rg) {
                let term = Rat::from_integer((self.n(rb, rg) * self.n(ra, rd)).into()) / self.norm(bg);
                acc -= term;
            }
            if let Some(ag) = rs.sum(rg, ra) {
                let term = Rat::from_integer((self.n(rg, ra) * self.n(rb, rd)).into()) / self.norm(ag);
                acc -= term;
            }
            let n_gd_neg = -(p_gd + 1);
            let val = acc * self.norm(xi) / Rat::from_integer(n_gd_neg.into());
            assert!(val.is_integer(), "non-integral structure constant");
            val.to_integer().to_i64().expect("small structure constant")
        };
        self.memo.insert((a, b), v);
        v
    }

    /// `N_{r,s}` for arbitrary roots (zero when `r + s` is not a root).
    fn n(&mut self, r: Root, s: Root) -> i64 {
        let rs = self.rs;
        let Some(sum) = rs.sum(r, s) else {
            return 0;
        };
        match (r.positive, s.positive) {
            (true, true) => self.n_pos(r.index, s.index),
            (false, false) => -self.n(r.negate(), s.negate()),
            (false, true) => -self.n(s, r),
            (true, false) => {
                let t = sum.negate();
                let val = if sum.positive {
                    // t negative: N_{r,s} = (t,t)/(r,r) N_{s,t}
                    let nst = -self.n_pos(s.index, t.index);
                    Rat::from_integer(nst.into()) * self.norm(t) / self.norm(r)
                } else {
                    // t positive: N_{r,s} = (t,t)/(s,s) N_{t,r}
                    let ntr = self.n_pos(t.index, r.index);
                    Rat::from_integer(ntr.into()) * self.norm(t) / self.norm(s)
                };
                assert!(val.is_integer(), "non-integral structure constant");
                val.to_integer().to_i64().expect("small structure constant")
            }
        }
    }
}

pub fn chevalley_structure_constants(rs: &RootSystemInfo) -> ChevalleyConstants {
    let np = rs.num_positive;
    let mut extraspecial = vec![None; np];
    for (xi, slot) in extraspecial.iter_mut().enumerate() {
        for a in 0..np {
            let ca = &rs.positive_roots[a];
            let diff: Vec<i64> = rs.positive_roots[xi].iter().zip(ca).map(|(x, y)| x - y).collect();
            if let Some(b) = rs.positive_index(&diff) {
                *slot = Some((a, b));
                break;
            }
        }
    }
    let mut solver = NSolver {
        rs,
        extraspecial,
        memo: HashMap::new(),
    };
    let roots: Vec<Root> = (0..np).map(Root::pos).chain((0..np).map(Root::neg)).collect();
    let mut table = HashMap::new();
    for &r in &roots {
        for &s in &roots {
            if rs.sum(r, s).is_some() {
                let v = solver.n(r, s);
                table.insert((r, s), v);
            }
        }
    }
    ChevalleyConstants { num_positive: np, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    /// Independent count: closure of the simple roots under simple reflections.
    fn reflection_closure_count(t: CartanType) -> usize {
        let n = t.rank();
        let cartan = t.cartan_matrix();
        let mut seen: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        while let Some(r) = stack.pop() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for j in 0..n {
                let pair: i64 = (0..n).map(|i| r[i] * cartan[i][j]).sum();
                let mut s = r.clone();
                s[j] -= pair;
                if !seen.contains(&s) {
                    stack.push(s);
                }
            }
        }
        seen.len() / 2
    }

    #[test]
    fn counts_match_reflection_closure() {
        for s in ["A1", "A4", "B3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"] {
            let t = ty(s);
            let rs = build_root_system(t);
            assert_eq!(rs.num_positive, reflection_closure_count(t), "{s}");
            assert_eq!(2 * rs.num_positive + t.rank(), t.algebra_dim(), "{s}");
            assert_eq!(rs.degrees.iter().sum::<usize>(), rs.borel_dim, "{s}");
            assert_eq!(rs.degrees[0], 2, "{s}");
        }
    }

    #[test]
    fn classical_counts() {
        assert_eq!(build_root_system(ty("G2")).num_positive, 6);
        assert_eq!(build_root_system(ty("F4")).num_positive, 24);
        assert_eq!(build_root_system(ty("E7")).num_positive, 63);
        assert_eq!(build_root_system(ty("E8")).num_positive, 120);
        let a1 = build_root_system(ty("A1"));
        assert_eq!((a1.num_positive, a1.borel_dim, a1.degrees.clone()), (1, 2, vec![2]));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(build_root_system(ty("E8")).highest_root(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(build_root_system(ty("E7")).highest_root(), &[2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(build_root_system(ty("F4")).highest_root(), &[2, 3, 4, 2]);
        assert_eq!(build_root_system(ty("G2")).highest_root(), &[3, 2]);
        assert_eq!(build_root_system(ty("B3")).highest_root(), &[1, 2, 2]);
        assert_eq!(build_root_system(ty("C3")).highest_root(), &[2, 2, 1]);
    }

    #[test]
    fn ordering_is_height_then_descending_lex() {
        let rs = build_root_system(ty("D5"));
        for w in rs.positive_roots.windows(2) {
            let (h0, h1): (i64, i64) = (w[0].iter().sum(), w[1].iter().sum());
            assert!(h0 < h1 || (h0 == h1 && w[0] > w[1]));
        }
        for i in 0..rs.rank {
            assert_eq!(rs.positive_roots[i][i], 1);
        }
    }

    #[test]
    fn invalid_types_rejected() {
        for s in ["E5", "E9", "F3", "G3", "D1", "A0", "X2", ""] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
    }

    #[test]
    fn structure_constants_match_root_strings() {
        for s in ["A2", "B2", "G2", "B3", "C3", "F4", "D4"] {
            let rs = build_root_system(ty(s));
            let nc = chevalley_structure_constants(&rs);
            for (&(a, b), &v) in nc.iter() {
                let p = rs.string_p(a, b);
                assert_eq!(v.abs(), p + 1, "{s}: N({a:?},{b:?})");
            }
        }
    }

    #[test]
    fn a2_constants_are_unit() {
        let rs = build_root_system(ty("A2"));
        let nc = chevalley_structure_constants(&rs);
        assert_eq!(nc.n(Root::pos(0), Root::pos(1)), 1);
        assert_eq!(nc.n(Root::pos(1), Root::pos(0)), -1);
    }

    #[test]
    fn g2_constants_within_range() {
        let rs = build_root_system(ty("G2"));
        let nc = chevalley_structure_constants(&rs);
        let mut seen = std::collections::BTreeSet::new();
        for (_, v) in nc.iter() {
            seen.insert(v.abs());
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn json_round_trip_keeps_type() {
        let rs = build_root_system(ty("E6"));
        let j = rs.to_json();
        assert_eq!(j["num_positive"], 36);
        let back = RootSystemInfo::from_json(&j).unwrap();
        assert_eq!(back.positive_roots, rs.positive_roots);
    }
}
