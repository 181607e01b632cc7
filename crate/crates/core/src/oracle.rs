//! Brute-force walk enumeration.
//!
//! Entry `(i, j)` of `A^m` is the max (membership) / min (non-membership)
//! of the weights of all `m`-edge walks from `i` to `j`. This module
//! computes that directly, folding each walk's weight edge by edge, and
//! compares it with the composition engine on random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::compose::power;
use crate::error::{IfmError, Result};
use crate::ifn::{gen_mean_pair, star_scalar, ComponentPair, Components, Ifn};
use crate::matrix::Ifm;
use crate::operator::Operator;
use crate::scalar::Scalar;

/// Total walks enumerated by one oracle call may not exceed this.
pub const MAX_WALKS: u128 = 10_000_000;

/// Agreement required between the engine and the oracle.
pub const MISMATCH_TOL: f64 = 1e-12;

pub const LAMBDA_CHOICES: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.9];
pub const P_CHOICES: [f64; 4] = [-1.0, 0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_m: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_n: 4, max_m: 5 }
    }
}

impl OracleBudget {
    /// Rejects instances larger than the budget or needing more than
    /// [`MAX_WALKS`] walks (`n^2` entries times `n^(m-1)` walks each).
    pub fn check(&self, n: usize, m: usize) -> Result<()> {
        if n > self.max_n {
            return Err(IfmError::BudgetExceeded(format!(
                "order {n} > max_n {}",
                self.max_n
            )));
        }
        if m > self.max_m {
            return Err(IfmError::BudgetExceeded(format!(
                "power {m} > max_m {}",
                self.max_m
            )));
        }
        let walks = (n as u128).checked_pow(m as u32 + 1);
        match walks {
            Some(w) if w <= MAX_WALKS => Ok(()),
            _ => Err(IfmError::BudgetExceeded(format!(
                "{n}^{} walks exceeds {MAX_WALKS}",
                m + 1
            ))),
        }
    }
}

fn edge_fold<T: Scalar>(
    op: &Operator<T>,
    acc: &ComponentPair<T>,
    edge: &ComponentPair<T>,
) -> Result<ComponentPair<T>> {
    match *op {
        Operator::GeneralizedMean { lambda, p } => gen_mean_pair(acc, edge, lambda, p),
        Operator::ConvexCombo { lambda } => star_scalar(acc, edge, lambda),
    }
}

fn best_walk<T: Scalar>(
    a: &Ifm<T>,
    m: usize,
    op: &Operator<T>,
    i: usize,
    j: usize,
) -> Result<ComponentPair<T>> {
    let n = a.rows();
    let mut mids = vec![0usize; m - 1];
    let mut best_mu = T::neg_infinity();
    let mut best_nu = T::infinity();
    loop {
        let mut prev = i;
        let mut weight: Option<ComponentPair<T>> = None;
        for &v in mids.iter().chain(std::iter::once(&j)) {
            let edge = a.get(prev, v);
            weight = Some(match weight {
                None => edge,
                Some(w) => edge_fold(op, &w, &edge)?,
            });
            prev = v;
        }
        let w = weight.expect("at least one edge");
        best_mu = best_mu.max(w.mu());
        best_nu = best_nu.min(w.nu());

        // odometer over intermediate vertices
        let mut k = 0;
        while k < mids.len() {
            mids[k] += 1;
            if mids[k] < n {
                break;
            }
            mids[k] = 0;
            k += 1;
        }
        if k == mids.len() {
            break;
        }
    }
    ComponentPair::new(best_mu, best_nu)
}

/// `A^m` by enumerating every `m`-edge walk for every entry.
pub fn brute_force_power<T: Scalar>(
    a: &Ifm<T>,
    m: usize,
    op: &Operator<T>,
    budget: &OracleBudget,
) -> Result<Ifm<T>> {
    let n = a.require_square()?;
    if m == 0 {
        return Err(IfmError::InvalidArgument(
            "power exponent must be at least 1".into(),
        ));
    }
    budget.check(n, m)?;
    let entries = (0..n * n)
        .into_par_iter()
        .map(|idx| best_walk(a, m, op, idx / n, idx % n))
        .collect::<Result<Vec<_>>>()?;
    Ifm::from_pairs(n, n, entries)
}

/// Random intuitionistic fuzzy matrix: `mu = u`, `nu = v (1 - u)` with
/// `u, v` uniform on `[0, 1]`.
pub fn random_ifm<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Ifm<f64> {
    let entries = (0..n * n)
        .map(|_| {
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            Ifn::new(u, v * (1.0 - u)).expect("sampled inside the intuitionistic region")
        })
        .collect();
    Ifm::new(n, n, entries).expect("positive order")
}

/// A disagreement between the engine and the oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub trial: usize,
    pub matrix: Ifm<f64>,
    pub op: Operator<f64>,
    pub m: usize,
    pub entry: (usize, usize),
    pub engine: ComponentPair<f64>,
    pub oracle: ComponentPair<f64>,
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("at least one trial is required")]
    NoTrials,
    #[error(
        "mismatch in trial {} for {} at m={}, entry ({}, {}): engine {} vs oracle {}",
        .0.trial, .0.op, .0.m, .0.entry.0 + 1, .0.entry.1 + 1, .0.engine, .0.oracle
    )]
    MismatchFound(Box<Mismatch>),
    #[error(transparent)]
    Ifm(#[from] IfmError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DifferentialReport {
    pub trials: usize,
    /// Matrix comparisons performed (two operator families per trial).
    pub comparisons: usize,
    pub max_abs_error: f64,
}

/// Runs [`differential_check_with`] against the real power routine.
pub fn differential_check(
    trials: usize,
    budget: &OracleBudget,
    seed: u64,
) -> std::result::Result<DifferentialReport, OracleError> {
    differential_check_with(trials, budget, seed, power)
}

/// Draws `trials` random matrices and configurations and compares
/// `power_fn` with [`brute_force_power`] for both operator families.
/// Deterministic for a fixed seed.
pub fn differential_check_with<F>(
    trials: usize,
    budget: &OracleBudget,
    seed: u64,
    power_fn: F,
) -> std::result::Result<DifferentialReport, OracleError>
where
    F: Fn(&Ifm<f64>, usize, &Operator<f64>) -> Result<Ifm<f64>>,
{
    if trials == 0 {
        return Err(OracleError::NoTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = DifferentialReport {
        trials,
        comparisons: 0,
        max_abs_error: 0.0,
    };
    for trial in 0..trials {
        let n = rng.gen_range(1..=budget.max_n);
        let m = rng.gen_range(1..=budget.max_m);
        let lambda = LAMBDA_CHOICES[rng.gen_range(0..LAMBDA_CHOICES.len())];
        let p = P_CHOICES[rng.gen_range(0..P_CHOICES.len())];
        let a = random_ifm(&mut rng, n);
        for op in [
            Operator::generalized_mean(lambda, p)?,
            Operator::convex_combo(lambda)?,
        ] {
            let engine = power_fn(&a, m, &op)?;
            let oracle = brute_force_power(&a, m, &op, budget)?;
            report.comparisons += 1;
            for i in 0..n {
                for j in 0..n {
                    let err = engine.get(i, j).max_abs_diff(&oracle.get(i, j));
                    report.max_abs_error = report.max_abs_error.max(err);
                    if err.is_nan() || err > MISMATCH_TOL {
                        return Err(OracleError::MismatchFound(Box::new(Mismatch {
                            trial,
                            matrix: a.clone(),
                            op,
                            m,
                            entry: (i, j),
                            engine: engine.get(i, j),
                            oracle: oracle.get(i, j),
                        })));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compose::compose;

    fn example_a() -> Ifm<f64> {
        Ifm::from_rows(&[
            vec![(1.0, 0.0), (0.5, 0.4), (0.0, 1.0)],
            vec![(0.0, 1.0), (0.6, 0.3), (1.0, 0.0)],
            vec![(1.0, 0.0), (1.0, 0.0), (0.0, 1.0)],
        ])
        .unwrap()
    }

    #[test]
    fn budget() {
        let b = OracleBudget::default();
        assert!(b.check(4, 5).is_ok());
        assert!(b.check(5, 2).is_err());
        assert!(b.check(2, 6).is_err());
        let big = OracleBudget {
            max_n: 20,
            max_m: 20,
        };
        assert!(big.check(10, 6).is_ok());
        assert!(matches!(big.check(10, 7), Err(IfmError::BudgetExceeded(_))));
    }

    #[test]
    fn first_power_is_identity_map() {
        let a = example_a();
        let op = Operator::convex_combo(0.3).unwrap();
        assert_eq!(
            brute_force_power(&a, 1, &op, &OracleBudget::default()).unwrap(),
            a
        );
    }

    #[test]
    fn square_entry_of_example() {
        let a = example_a();
        let op = Operator::generalized_mean(0.6, 1.0).unwrap();
        let sq = brute_force_power(&a, 2, &op, &OracleBudget::default()).unwrap();
        assert_eq!(sq.get(0, 0).mu(), 1.0);
        assert_eq!(sq.get(0, 0).nu(), 0.0);
        assert_eq!(sq, compose(&a, &a, &op).unwrap());
    }

    #[test]
    fn rejects_zero_trials() {
        assert!(matches!(
            differential_check(0, &OracleBudget::default(), 1),
            Err(OracleError::NoTrials)
        ));
    }

    #[test]
    fn deterministic_for_seed() {
        let b = OracleBudget::default();
        let r1 = differential_check(10, &b, 9).unwrap();
        let r2 = differential_check(10, &b, 9).unwrap();
        assert_eq!(r1, r2);
        assert_eq!(r1.comparisons, 20);
    }
}
