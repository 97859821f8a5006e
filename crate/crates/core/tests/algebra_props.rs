use liecert::algebra::{chevalley_algebra, LieAlgebraTable};
use liecert::linalg::{rat, Rat};
use proptest::prelude::*;
use std::sync::OnceLock;

fn algebras() -> &'static Vec<LieAlgebraTable> {
    static A: OnceLock<Vec<LieAlgebraTable>> = OnceLock::new();
    A.get_or_init(|| ["A2", "B2", "G2", "C3"].iter().map(|t| chevalley_algebra(t.parse().unwrap())).collect())
}

fn element(l: &LieAlgebraTable, seed: &[i64]) -> Vec<Rat> {
    (0..l.dim()).map(|i| rat(seed[i % seed.len()] - (i as i64 % 3))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_identities(which in 0usize..4, a in prop::collection::vec(-4i64..=4, 5), b in prop::collection::vec(-4i64..=4, 7), c in prop::collection::vec(-4i64..=4, 3)) {
        let l = &algebras()[which];
        let (x, y, z) = (element(l, &a), element(l, &b), element(l, &c));
        let xy = l.bracket_vec(&x, &y);
        let yx = l.bracket_vec(&y, &x);
        prop_assert!(xy.iter().zip(&yx).all(|(p, q)| *p == -q.clone()));
        let j1 = l.bracket_vec(&x, &l.bracket_vec(&y, &z));
        let j2 = l.bracket_vec(&y, &l.bracket_vec(&z, &x));
        let j3 = l.bracket_vec(&z, &l.bracket_vec(&x, &y));
        prop_assert!(j1.iter().zip(&j2).zip(&j3).all(|((p, q), r)| (p + q + r) == rat(0)));
        // Killing form is invariant.
        prop_assert_eq!(l.killing_pair(&xy, &z), l.killing_pair(&x, &l.bracket_vec(&y, &z)));
    }
}
