use ifm_core::checks::p_monotonicity;
use ifm_core::oracle::random_ifm;
use ifm_core::{
    critical_structure, power_sequence, predict_column_limits, predict_universal, Components,
    ConvergenceOptions, Ifm, Operator,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn example_a() -> Ifm<f64> {
    Ifm::from_rows(&[
        vec![(1.0, 0.0), (0.5, 0.4), (0.0, 1.0)],
        vec![(0.0, 1.0), (0.6, 0.3), (1.0, 0.0)],
        vec![(1.0, 0.0), (1.0, 0.0), (0.0, 1.0)],
    ])
    .unwrap()
}

fn column_is_top(m: &Ifm<f64>, j: usize, tol: f64) -> bool {
    (0..m.rows()).all(|i| {
        let e = m.get(i, j);
        e.mu() >= 1.0 - tol && e.nu() <= tol
    })
}

#[test]
fn example_a_limit_is_universal() {
    let a = example_a();
    assert!(predict_universal(&a).unwrap());
    let r = power_sequence(
        &a,
        &Operator::generalized_mean(0.6, 1.0).unwrap(),
        &ConvergenceOptions::default(),
    )
    .unwrap();
    assert!(r.converged);
    assert!(r.guaranteed);
    assert!(r.limit.is_universal(1e-12));
    assert!(r.limit.row_uniformity() <= 1e-11);
    assert_eq!(r.bound_violations(1e-12), 0);
}

#[test]
fn weakened_self_loop_loses_its_column() {
    let strong =
        Ifm::from_rows(&[vec![(1.0, 0.0), (0.5, 0.4)], vec![(0.3, 0.6), (0.6, 0.3)]]).unwrap();
    let weak =
        Ifm::from_rows(&[vec![(0.9, 0.0), (0.5, 0.4)], vec![(0.3, 0.6), (0.6, 0.3)]]).unwrap();
    assert_eq!(predict_column_limits(&strong).unwrap(), vec![true, false]);
    assert_eq!(predict_column_limits(&weak).unwrap(), vec![false, false]);
    assert!(critical_structure(&weak)
        .unwrap()
        .critical_vertices
        .is_empty());

    let op = Operator::generalized_mean(0.5, 1.0).unwrap();
    let opts = ConvergenceOptions::default();
    let s = power_sequence(&strong, &op, &opts).unwrap();
    let w = power_sequence(&weak, &op, &opts).unwrap();
    assert!(s.converged && w.converged);
    assert!(column_is_top(&s.limit, 0, 1e-9));
    assert!(!column_is_top(&s.limit, 1, 1e-4));
    assert!((0..2).all(|i| w.limit.get(i, 0).mu() <= 0.9));
}

#[test]
fn predictions_agree_on_grid_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let mut rows = Vec::new();
        for _ in 0..n {
            let row: Vec<(f64, f64)> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        (1.0, 0.0)
                    } else {
                        let u = rng.gen_range(0..=9);
                        let v = rng.gen_range(0..=10 - u);
                        (u as f64 / 10.0, v as f64 / 10.0)
                    }
                })
                .collect();
            rows.push(row);
        }
        let a = Ifm::from_rows(&rows).unwrap();
        let op = Operator::convex_combo(rng.gen_range(0.1..0.9)).unwrap();
        let r = power_sequence(&a, &op, &ConvergenceOptions::default()).unwrap();
        assert!(r.converged);
        let predicted = predict_column_limits(&a).unwrap();
        for (j, &p) in predicted.iter().enumerate() {
            if p {
                assert!(column_is_top(&r.limit, j, 1e-6), "column {j} of {a}");
            } else {
                assert!(
                    (0..n).any(|i| r.limit.get(i, j).mu() <= 1.0 - 1e-4),
                    "column {j} of {a}"
                );
            }
        }
        assert_eq!(predict_universal(&a).unwrap(), r.limit.is_universal(1e-5));
    }
}

#[test]
fn larger_exponents_give_larger_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let n = rng.gen_range(1..=4);
        let a = random_ifm(&mut rng, n);
        let r = p_monotonicity(&a, 0.5, &[2.0, -1.0, 1.0, 0.5], 8, 1e-12).unwrap();
        assert_eq!(r.componentwise_violations, 0);
        assert_eq!(r.comparisons, n * n * 8 * 3);
        assert_eq!(r.sum_violations.len(), 4);
        assert_eq!(r.sum_violations[0], 0, "p = -1 preserves the constraint");
    }
}

#[test]
fn sum_violations_are_reported_for_large_exponents() {
    let a = Ifm::from_rows(&[vec![(0.9, 0.1), (0.1, 0.9)], vec![(0.1, 0.9), (0.9, 0.1)]]).unwrap();
    let r = power_sequence(
        &a,
        &Operator::generalized_mean(0.5, 2.0).unwrap(),
        &ConvergenceOptions::default(),
    )
    .unwrap();
    assert!(r.sum_violations > 0);
    let r1 = power_sequence(
        &a,
        &Operator::generalized_mean(0.5, 1.0).unwrap(),
        &ConvergenceOptions::default(),
    )
    .unwrap();
    assert_eq!(r1.sum_violations, 0);
}
