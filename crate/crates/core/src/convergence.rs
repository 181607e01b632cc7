//! Power-sequence iteration with convergence and cycle detection.

use std::collections::HashMap;

use crate::compose::compose;
use crate::error::{IfmError, Result};
use crate::ifn::Components;
use crate::matrix::Ifm;
use crate::operator::Operator;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceOptions<T> {
    /// Stop once `delta(A^m, A^(m-1)) <= eps`.
    pub eps: T,
    /// Maximum number of compositions.
    pub max_iter: usize,
}

impl<T: Scalar> Default for ConvergenceOptions<T> {
    fn default() -> Self {
        Self {
            eps: T::lit(1e-12),
            max_iter: 100_000,
        }
    }
}

/// Outcome of [`power_sequence`].
///
/// Step `k` (zero-based) of `deltas` and `bound_trace` compares power
/// `m = k + 2` with power `m - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport<T> {
    /// Last power computed (the limit when `converged`).
    pub limit: Ifm<T>,
    /// Number of compositions performed; the last power is `iterations + 1`.
    pub iterations: usize,
    pub converged: bool,
    /// Set when an exact repeat `A^m = A^(m-j)` with `j >= 2` was found.
    pub oscillation_period: Option<usize>,
    pub deltas: Vec<T>,
    /// `lambda^((m-2)/p)` or `alpha^(m-2)`; `None` where no bound applies.
    pub bound_trace: Vec<Option<T>>,
    /// Whether the contraction behind the convergence theorems applies.
    pub guaranteed: bool,
    /// Entries with `mu + nu > 1` summed over every computed power.
    pub sum_violations: usize,
}

impl<T: Scalar> ConvergenceReport<T> {
    pub fn final_power(&self) -> usize {
        self.iterations + 1
    }

    pub fn final_delta(&self) -> Option<T> {
        self.deltas.last().copied()
    }

    /// Steps whose delta exceeds the theoretical bound by more than `tol`.
    pub fn bound_violations(&self, tol: T) -> usize {
        self.deltas
            .iter()
            .zip(&self.bound_trace)
            .filter(|(d, b)| matches!(b, Some(b) if **d > *b + tol))
            .count()
    }
}

fn fingerprint<T: Scalar>(m: &Ifm<T>) -> Vec<u64> {
    m.entries()
        .iter()
        .flat_map(|e| [e.mu(), e.nu()])
        .map(|v| v.to_f64().unwrap_or(f64::NAN).to_bits())
        .collect()
}

/// Iterates `A^m = A^(m-1) o A` until successive powers differ by at most
/// `eps` or `max_iter` compositions have run.
///
/// At `lambda = 1` neither family contracts, so every power is also
/// remembered and an exact repeat of an earlier power ends the run with
/// `oscillation_period` set.
pub fn power_sequence<T: Scalar>(
    a: &Ifm<T>,
    op: &Operator<T>,
    opts: &ConvergenceOptions<T>,
) -> Result<ConvergenceReport<T>> {
    a.require_square()?;
    if opts.eps.is_nan() || opts.eps <= T::zero() {
        return Err(IfmError::InvalidArgument(format!(
            "eps must be positive, got {}",
            opts.eps
        )));
    }
    let tol = T::construction_tol();
    let track_cycles = op.is_degenerate();
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    if track_cycles {
        seen.insert(fingerprint(a), 1);
    }

    let mut report = ConvergenceReport {
        limit: a.clone(),
        iterations: 0,
        converged: false,
        oscillation_period: None,
        deltas: Vec::new(),
        bound_trace: Vec::new(),
        guaranteed: op.has_guarantee(),
        sum_violations: a.sum_violations(tol),
    };

    for it in 1..=opts.max_iter {
        let m = it + 1;
        let next = compose(&report.limit, a, op)?;
        let d = next.delta(&report.limit)?;
        report.deltas.push(d);
        report.bound_trace.push(op.cauchy_bound(m));
        report.sum_violations += next.sum_violations(tol);
        report.iterations = it;
        report.limit = next;
        if d <= opts.eps {
            report.converged = true;
            break;
        }
        if track_cycles {
            let key = fingerprint(&report.limit);
            if let Some(&earlier) = seen.get(&key) {
                report.oscillation_period = Some(m - earlier);
                break;
            }
            seen.insert(key, m);
        }
    }
    Ok(report)
}
