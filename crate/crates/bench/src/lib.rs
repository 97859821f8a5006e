//! Fixed inputs for the kernel benchmarks.

use liecert::appendix::builtin_case;
use liecert::linalg::rat;
use liecert::{centralizer, chevalley_algebra, AlgElement, LieAlgebraTable, Rat, RatMatrix, Subalgebra};

pub fn algebra(name: &str) -> LieAlgebraTable {
    chevalley_algebra(name.parse().expect("known type"))
}

/// Element with small integer coordinates cycling through `-3..=3`; regular
/// in every exceptional type.
pub fn spread_element(l: &LieAlgebraTable, offset: usize) -> AlgElement {
    let coords = (0..l.dim()).map(|i| rat(((i * 5 + offset) % 7) as i64 - 3)).collect();
    l.element(coords).expect("right length")
}

/// Matrix of `ad x`; column `j` holds `[x, b_j]`.
pub fn ad_matrix(l: &LieAlgebraTable, x: &AlgElement) -> RatMatrix {
    let cols: Vec<Vec<Rat>> = (0..l.dim())
        .map(|j| l.bracket_vec(x.coords(), l.basis_element(j).coords()))
        .collect();
    RatMatrix::from_rows(l.dim(), cols).expect("square").transpose()
}

/// `𝔤ᵉ` for the nilpotent element of a built-in case.
pub fn case_centralizer(name: &str) -> (LieAlgebraTable, Subalgebra) {
    let spec = builtin_case(name).expect("built-in case");
    let l = chevalley_algebra(spec.cartan_type);
    let e = l.element(spec.resolve(&l, &spec.e).expect("case resolves")).expect("right length");
    let ge = centralizer(&l, &[e]).expect("same algebra");
    let sub = Subalgebra::new(&l, &ge).expect("centralizers are subalgebras");
    (l, sub)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_sizes() {
        for (t, rank) in [("G2", 2), ("F4", 4), ("E6", 6), ("E7", 7), ("E8", 8)] {
            let l = algebra(t);
            assert_eq!(centralizer(&l, &[spread_element(&l, 0)]).unwrap().dim(), rank, "{t}");
        }
        let (_, sub) = case_centralizer("e7-41");
        assert_eq!(sub.dim(), 41);
    }
}
