use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use infgon::arc::{crossing, ext_dimension, extension_middle, Arc};
use infgon::cluster::{coefficient_frieze, initial_seed, cluster_variable};
use infgon::frieze::{frieze_from_quiddity, frieze_from_window, shift_frieze, FriezeKind};
use infgon::laurent::{LaurentPoly, Monomial};
use infgon::sequences::{penrose_decode, penrose_encode, x_sequence, x_to_y, y_sequence, y_to_x, BinarySeq};
use infgon::triangulation::{all_windows, polygon_triangulations, TriangulationWindow};

fn fin(a: i64, b: i64) -> Arc {
    Arc::finite(a, b)
}

/// Subsets of diagonals accepted by `validate` are exactly the
/// triangulations: pairwise noncrossing with `m - 3` diagonals.
#[test]
fn validate_accepts_exactly_the_triangulations() {
    for m in 3..=7i64 {
        let diagonals: Vec<Arc> = (0..m)
            .flat_map(|a| (a + 2..m).map(move |b| fin(a, b)))
            .filter(|&d| d != fin(0, m - 1))
            .collect();
        let mut accepted = 0;
        for mask in 0u32..1 << diagonals.len() {
            let chosen: Vec<Arc> =
                diagonals.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d).collect();
            let noncrossing = chosen.iter().all(|&p| chosen.iter().all(|&q| !crossing(p, q)));
            let oracle = noncrossing && chosen.len() as i64 == m - 3;
            let w = TriangulationWindow::new(0, m - 1, None, chosen.iter().copied().chain([fin(0, m - 1)]));
            assert_eq!(w.is_ok(), oracle, "m={m} {chosen:?}: {w:?}");
            accepted += usize::from(oracle);
        }
        assert_eq!(accepted, polygon_triangulations(0, m - 1).len());
    }
}

#[test]
fn flips_are_involutions() {
    for w in all_windows(-3, 4, Some(0)).into_iter().chain(all_windows(0, 6, None)) {
        for arc in w.mutable_arcs() {
            let v = w.flip(arc).unwrap();
            let partner = v.arcs().difference(w.arcs()).next().copied().unwrap();
            assert_eq!(v.flip(partner).unwrap(), w);
        }
    }
}

#[test]
fn extensions_conserve_endpoints() {
    let arcs: Vec<Arc> =
        (0..8).flat_map(|a| (a + 1..8).map(move |b| fin(a, b))).chain((0..8).map(Arc::infinite)).collect();
    let finite_ends = |v: &[Arc]| -> Vec<i64> {
        let mut e: Vec<i64> = v.iter().flat_map(|a| [Some(a.start()), a.end().finite()]).flatten().collect();
        e.sort();
        e
    };
    for &m in &arcs {
        for &n in &arcs {
            if ext_dimension(m, n) == 1 {
                let mid = extension_middle(m, n).unwrap();
                assert_eq!(finite_ends(&mid), finite_ends(&[m, n]), "{m} {n}");
            }
        }
    }
}

/// Shifting the integral frieze one place to the left lines it up with the
/// cluster variables of the shifted window at `x = 1`.
#[test]
fn shifted_frieze_matches_shifted_cluster_values() {
    let arcs = (2..=4).map(|n| fin(-n, n - 1)).chain((1..=4).map(|n| fin(-n, n)));
    let w = TriangulationWindow::new(-4, 4, None, arcs).unwrap().mirror();
    let f = frieze_from_window(&w).unwrap();
    let g = shift_frieze(&f, -1);
    assert_eq!(shift_frieze(&g, 1), f);
    let seed = initial_seed(&w.shifted(-1));
    for ((a, b), v) in g.off_diagonal() {
        assert_eq!(&cluster_variable(&seed, fin(a, b)).unwrap().specialize_ones(), v);
    }
    for arc in w.arcs().iter().filter(|a| !a.is_boundary()) {
        let (a, b) = arc.ends().unwrap();
        assert_eq!(g.get(a - 1, b - 1).unwrap(), &BigInt::from(1));
    }
}

#[test]
fn coefficient_frieze_specializes_to_integral_frieze() {
    for w in all_windows(-2, 4, Some(1)).into_iter().chain(all_windows(0, 6, None)) {
        let f = coefficient_frieze(&w).unwrap();
        assert_eq!(f.map(LaurentPoly::specialize_ones), frieze_from_window(&w).unwrap());
    }
}

fn word() -> impl Strategy<Value = BinarySeq> {
    prop::collection::vec(any::<bool>(), 0..64).prop_map(BinarySeq::from_bits)
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    let var = (-2i64..3).prop_map(|a| fin(a, a + 3));
    let mono = prop::collection::vec((var, -2i64..=2), 0..3);
    prop::collection::vec((mono, -4i64..=4), 0..4).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (m, c)| &acc + &LaurentPoly::term(Monomial::from_exponents(m), c))
    })
}

proptest! {
    #[test]
    fn penrose_round_trip(s in word()) {
        let t = penrose_encode(&s);
        prop_assert!(!t.to_string().contains("11"));
        prop_assert_eq!(penrose_decode(&t).unwrap(), s);
    }

    #[test]
    fn x_and_y_determine_each_other(s in word()) {
        prop_assert_eq!(y_to_x(&x_to_y(&s), s.len()), s);
    }

    #[test]
    fn window_words_agree(seed in 0usize..1000, hi in 2i64..8) {
        let windows = all_windows(0, hi, Some(0));
        let w = &windows[seed % windows.len()];
        let x = x_sequence(w).unwrap();
        prop_assert_eq!(x_to_y(&x), y_sequence(w).unwrap());
        let json = serde_json::to_string(w).unwrap();
        prop_assert_eq!(&serde_json::from_str::<TriangulationWindow>(&json).unwrap(), w);
    }

    #[test]
    fn quiddity_round_trip(q in prop::collection::vec(1u64..5, 1..10), r in -5i64..5) {
        if let Ok(f) = frieze_from_quiddity(&q, FriezeKind::RightHalf { r }) {
            let back: Vec<BigInt> = f.quiddity();
            prop_assert_eq!(back, q.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
            prop_assert!(f.diamond_defects(|_, _| BigInt::from(1)).is_empty());
            prop_assert_eq!(shift_frieze(&shift_frieze(&f, r), -r), f);
        }
    }

    #[test]
    fn triangle_counts_sum_up(seed in 0usize..500, m in 3i64..9) {
        let all = polygon_triangulations(0, m - 1);
        let w = TriangulationWindow::new(0, m - 1, None, all[seed % all.len()].clone()).unwrap();
        let q = w.polygon_quiddity().unwrap();
        prop_assert_eq!(q.iter().sum::<u64>() as i64, 3 * (m - 2));
        let diag: BTreeSet<Arc> = w.arcs().iter().copied().filter(|a| !a.is_boundary()).collect();
        prop_assert_eq!(diag.len() as i64, m - 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn exact_division_round_trip(p in laurent(), q in laurent()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }
}
