//! Sparse multivariate polynomials over ℚ and symbolic determinants.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::linalg::Rat;

/// Exponent vector to coefficient; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// `Σ coeffs[i] · z_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Poly, c: &Rat) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars.max(other.nvars));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, z: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in z.iter().zip(e) {
                for _ in 0..*k {
                    t *= x;
                }
            }
            s += t;
        }
        s
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoized on the set of remaining columns.
pub fn symbolic_det(m: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = m.len();
    assert!(n < 32, "order too large for column masks");
    let mut memo: HashMap<u32, Poly> = HashMap::new();
    det_rec(m, nvars, 0, (1u32 << n) - 1, &mut memo)
}

fn det_rec(m: &[Vec<Poly>], nvars: usize, row: usize, cols: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
    if cols == 0 {
        return Poly::constant(nvars, Rat::one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut out = Poly::zero(nvars);
    let mut sign = Rat::one();
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !m[row][j].is_zero() {
            let minor = det_rec(m, nvars, row + 1, cols & !(1 << j), memo);
            if !minor.is_zero() {
                out.add_assign_scaled(&m[row][j].mul(&minor), &sign);
            }
        }
        sign = -sign;
    }
    memo.insert(cols, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn var(n: usize, i: usize) -> Poly {
        let mut c = vec![rat(0); n];
        c[i] = rat(1);
        Poly::linear(&c)
    }

    #[test]
    fn square_of_sum() {
        let x = var(2, 0);
        let mut s = x.clone();
        s.add_assign_scaled(&var(2, 1), &rat(1));
        let sq = s.mul(&s);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.eval(&[rat(2), rat(3)]), rat(25));
    }

    #[test]
    fn det_of_generic_2x2() {
        let m = vec![vec![var(4, 0), var(4, 1)], vec![var(4, 2), var(4, 3)]];
        let d = symbolic_det(&m, 4);
        assert_eq!(d.num_terms(), 2);
        assert_eq!(d.eval(&[rat(1), rat(2), rat(3), rat(4)]), rat(-2));
    }

    #[test]
    fn antisymmetric_odd_order_vanishes() {
        let (a, b, c) = (var(3, 0), var(3, 1), var(3, 2));
        let neg = |p: &Poly| {
            let mut z = Poly::zero(3);
            z.add_assign_scaled(p, &rat(-1));
            z
        };
        let m = vec![
            vec![Poly::zero(3), a.clone(), b.clone()],
            vec![neg(&a), Poly::zero(3), c.clone()],
            vec![neg(&b), neg(&c), Poly::zero(3)],
        ];
        assert!(symbolic_det(&m, 3).is_zero());
    }

    #[test]
    fn det_matches_numeric_evaluation() {
        let n = 4;
        let m: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| Poly::linear(&[rat((i * 3 + j) as i64 % 5 - 2), rat(1 + (i + j) as i64 % 2)])).collect())
            .collect();
        let d = symbolic_det(&m, 2);
        let z = [rat(3), rat(-7)];
        let numeric: Vec<Vec<Rat>> = m.iter().map(|r| r.iter().map(|p| p.eval(&z)).collect()).collect();
        let nm = crate::linalg::RatMatrix::from_rows(n, numeric).unwrap();
        assert_eq!(d.eval(&z), crate::linalg::determinant(&nm));
    }
}
