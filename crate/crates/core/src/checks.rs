//! Empirical checks of how powers order across exponents.
//!
//! For a fixed weight, raising `p` raises every weighted power mean, so both
//! components of `A_p^n` are nondecreasing in `p`. The dominance order
//! (`nu` nonincreasing) is tallied alongside for inspection only; it does
//! not hold in general.

use crate::compose::Powers;
use crate::error::{IfmError, Result};
use crate::ifn::Components;
use crate::matrix::Ifm;
use crate::operator::Operator;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport<T> {
    /// Entry comparisons made (one per entry, power and adjacent `p` pair).
    pub comparisons: usize,
    /// Entries where `mu` or `nu` decreased as `p` grew by more than `tol`.
    pub componentwise_violations: usize,
    pub max_violation: T,
    /// Entries where `A_p^n <= A_q^n` held in the dominance order.
    pub dominance_holds: usize,
    pub dominance_fails: usize,
    /// Powers where `max(1 - mu)` grew with `p` by more than `tol`.
    pub mu_distance_violations: usize,
    /// Entries of every computed power with `mu + nu > 1`, per exponent.
    pub sum_violations: Vec<usize>,
}

/// Compares `A_p^k` across the sorted exponents `ps` for `k = 1..=steps`.
pub fn p_monotonicity<T: Scalar>(
    a: &Ifm<T>,
    lambda: T,
    ps: &[T],
    steps: usize,
    tol: T,
) -> Result<MonotonicityReport<T>> {
    if ps.len() < 2 {
        return Err(IfmError::InvalidArgument(
            "need at least two exponents".into(),
        ));
    }
    let mut sorted = ps.to_vec();
    sorted.sort_by(|x, y| x.partial_cmp(y).expect("finite exponents"));

    let sequences = sorted
        .iter()
        .map(|&p| {
            let op = Operator::generalized_mean(lambda, p)?;
            Ok(Powers::new(a, op)?.take(steps).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;

    let construction_tol = T::construction_tol();
    let mut report = MonotonicityReport {
        comparisons: 0,
        componentwise_violations: 0,
        max_violation: T::zero(),
        dominance_holds: 0,
        dominance_fails: 0,
        mu_distance_violations: 0,
        sum_violations: sequences
            .iter()
            .map(|seq| seq.iter().map(|m| m.sum_violations(construction_tol)).sum())
            .collect(),
    };

    for pair in sequences.windows(2) {
        let (lower, upper) = (&pair[0], &pair[1]);
        for (mp, mq) in lower.iter().zip(upper) {
            if mq.mu_distance_to_universal() > mp.mu_distance_to_universal() + tol {
                report.mu_distance_violations += 1;
            }
            for (x, y) in mp.entries().iter().zip(mq.entries()) {
                report.comparisons += 1;
                let drop = (x.mu() - y.mu()).max(x.nu() - y.nu());
                if drop > tol {
                    report.componentwise_violations += 1;
                }
                report.max_violation = report.max_violation.max(drop);
                if x.mu() <= y.mu() && x.nu() >= y.nu() {
                    report.dominance_holds += 1;
                } else {
                    report.dominance_fails += 1;
                }
            }
        }
    }
    Ok(report)
}
