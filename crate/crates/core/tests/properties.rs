use ifm_core::graph::path_coefficients;
use ifm_core::{
    compose, dominance_leq, gen_mean_pair, gen_mean_scalar, ifn_diff, path_weight_gen,
    path_weight_star, star_scalar, Components, Ifm, Ifn, Operator, PathSpec, Powers,
};
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0f64]
}

fn ifn() -> impl Strategy<Value = Ifn<f64>> {
    (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(u, v)| Ifn::new(u, v * (1.0 - u)).unwrap())
}

fn lambda() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(1.0), 0.0..=1.0f64]
}

fn exponent() -> impl Strategy<Value = f64> {
    prop_oneof![
        Just(-1.0),
        Just(0.5),
        Just(1.0),
        Just(2.0),
        0.1..4.0f64,
        -4.0..-0.1f64
    ]
}

fn square(max_n: usize) -> impl Strategy<Value = Ifm<f64>> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(ifn(), n * n).prop_map(move |e| Ifm::new(n, n, e).unwrap())
    })
}

fn square_pair(max_n: usize) -> impl Strategy<Value = (Ifm<f64>, Ifm<f64>)> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(ifn(), 2 * n * n).prop_map(move |e| {
            let (x, y) = e.split_at(n * n);
            (
                Ifm::new(n, n, x.to_vec()).unwrap(),
                Ifm::new(n, n, y.to_vec()).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn gen_mean_is_idempotent(x in unit(), l in lambda(), p in exponent()) {
        prop_assert_eq!(gen_mean_scalar(x, x, l, p).unwrap(), x);
    }

    #[test]
    fn gen_mean_stays_between_arguments(x in unit(), y in unit(), l in lambda(), p in exponent()) {
        let g = gen_mean_scalar(x, y, l, p).unwrap();
        prop_assert!(g >= x.min(y) && g <= x.max(y));
    }

    #[test]
    fn gen_mean_monotone_in_arguments(
        x in unit(), y in unit(), dx in 0.0..=1.0f64, l in lambda(), p in exponent()
    ) {
        let x2 = (x + dx).min(1.0);
        let lo = gen_mean_scalar(x, y, l, p).unwrap();
        let hi = gen_mean_scalar(x2, y, l, p).unwrap();
        prop_assert!(hi >= lo - TOL, "{hi} < {lo}");
    }

    #[test]
    fn gen_mean_monotone_in_exponent(
        x in unit(), y in unit(), l in lambda(), p in exponent(), dp in 0.01..3.0f64
    ) {
        let q = p + dp;
        prop_assume!(q != 0.0);
        let a = gen_mean_scalar(x, y, l, p).unwrap();
        let b = gen_mean_scalar(x, y, l, q).unwrap();
        prop_assert!(b >= a - TOL, "p={p}: {a}, q={q}: {b}");
    }

    #[test]
    fn star_is_commutative(a in ifn(), b in ifn(), l in lambda()) {
        let ab = star_scalar(&a, &b, l).unwrap();
        let ba = star_scalar(&b, &a, l).unwrap();
        prop_assert!(ab.max_abs_diff(&ba) <= TOL);
    }

    #[test]
    fn star_is_monotone(a in ifn(), b in ifn(), c in ifn(), l in lambda()) {
        prop_assume!(dominance_leq(&a, &b));
        let ac = star_scalar(&a, &c, l).unwrap();
        let bc = star_scalar(&b, &c, l).unwrap();
        prop_assert!(bc.mu() >= ac.mu() - TOL && bc.nu() <= ac.nu() + TOL);
    }

    #[test]
    fn star_is_alpha_lipschitz(a in ifn(), b in ifn(), c in ifn(), l in lambda()) {
        let alpha = (1.0 + l) / 2.0;
        let ac = star_scalar(&a, &c, l).unwrap();
        let bc = star_scalar(&b, &c, l).unwrap();
        prop_assert!((bc.mu() - ac.mu()).abs() <= alpha * (b.mu() - a.mu()).abs() + TOL);
        prop_assert!((bc.nu() - ac.nu()).abs() <= alpha * (b.nu() - a.nu()).abs() + TOL);
    }

    #[test]
    fn difference_readds(a in ifn(), b in ifn()) {
        prop_assume!(dominance_leq(&a, &b));
        let d = ifn_diff(&b, &a).unwrap();
        prop_assert!(a.pair().add_difference(&d).max_abs_diff(&b.pair()) <= TOL);
    }

    #[test]
    fn closure_for_small_exponents((a, b) in square_pair(4), l in lambda(), p in -4.0..=1.0f64) {
        prop_assume!(p != 0.0);
        let op = Operator::generalized_mean(l, p).unwrap();
        let c = compose(&a, &b, &op).unwrap();
        prop_assert_eq!(c.sum_violations(TOL), 0);
    }

    #[test]
    fn closure_for_convex_combo((a, b) in square_pair(4), l in lambda()) {
        let op = Operator::convex_combo(l).unwrap();
        let c = compose(&a, &b, &op).unwrap();
        prop_assert_eq!(c.sum_violations(TOL), 0);
    }

    #[test]
    fn powers_stay_in_unit_square(a in square(4), l in lambda(), p in exponent()) {
        let op = Operator::generalized_mean(l, p).unwrap();
        for m in Powers::new(&a, op).unwrap().take(6) {
            for e in m.entries() {
                prop_assert!((0.0..=1.0).contains(&e.mu()) && (0.0..=1.0).contains(&e.nu()));
            }
        }
    }

    #[test]
    fn coefficients_sum_to_one(l in lambda(), k in 1usize..40) {
        let s: f64 = path_coefficients(l, k).iter().sum();
        prop_assert!((s - 1.0).abs() <= TOL);
    }

    #[test]
    fn closed_form_matches_fold(
        a in square(5), l in lambda(), p in exponent(), walk in prop::collection::vec(0usize..5, 2..9)
    ) {
        let n = a.rows();
        let path = PathSpec::new(walk.iter().map(|v| v % n).collect()).unwrap();
        let closed = path_weight_gen(&a, &path, l, p).unwrap();
        let edges: Vec<_> = path.edges().map(|(i, j)| a.get(i, j)).collect();
        let mut acc = edges[0];
        for e in &edges[1..] {
            acc = gen_mean_pair(&acc, e, l, p).unwrap();
        }
        prop_assert!(closed.max_abs_diff(&acc) <= TOL, "{closed} vs {acc}");
    }

    #[test]
    fn star_path_weight_folds_left(a in square(5), l in lambda(), walk in prop::collection::vec(0usize..5, 2..9)) {
        let n = a.rows();
        let path = PathSpec::new(walk.iter().map(|v| v % n).collect()).unwrap();
        let w = path_weight_star(&a, &path, l).unwrap();
        let edges: Vec<_> = path.edges().map(|(i, j)| a.get(i, j)).collect();
        let mut acc = edges[0];
        for e in &edges[1..] {
            acc = star_scalar(&acc, e, l).unwrap();
        }
        prop_assert_eq!(w, acc);
    }
}

#[test]
fn large_exponent_can_break_the_sum_constraint() {
    // <0.9, 0.1> and <0.1, 0.9>: the p = 2 mean pushes both components up.
    let a = Ifm::from_rows(&[vec![(0.9, 0.1), (0.1, 0.9)], vec![(0.1, 0.9), (0.9, 0.1)]]).unwrap();
    let op = Operator::generalized_mean(0.5, 2.0).unwrap();
    let sq = compose(&a, &a, &op).unwrap();
    assert!(sq.sum_violations(TOL) > 0);
    let bad = sq
        .entries()
        .iter()
        .find(|e| !e.is_intuitionistic(TOL))
        .unwrap();
    assert!(bad.to_ifn().is_err());
}

#[test]
fn f32_powers_track_f64() {
    let rows = [vec![(1.0, 0.0), (0.5, 0.4)], vec![(0.0, 1.0), (0.6, 0.3)]];
    let a64 = Ifm::<f64>::from_rows(&rows).unwrap();
    let rows32: Vec<Vec<(f32, f32)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(m, n)| (m as f32, n as f32)).collect())
        .collect();
    let a32 = Ifm::<f32>::from_rows(&rows32).unwrap();
    let p64 = ifm_core::power(&a64, 5, &Operator::generalized_mean(0.6, 1.0).unwrap()).unwrap();
    let p32 = ifm_core::power(&a32, 5, &Operator::generalized_mean(0.6, 1.0).unwrap()).unwrap();
    for (x, y) in p64.entries().iter().zip(p32.entries()) {
        assert!((x.mu() - y.mu() as f64).abs() < 1e-5);
        assert!((x.nu() - y.nu() as f64).abs() < 1e-5);
    }
}
