//! Runs the convergence engine over a grid of operator parameters.

use rayon::prelude::*;

use crate::convergence::{power_sequence, ConvergenceOptions};
use crate::error::{IfmError, Result};
use crate::matrix::Ifm;
use crate::operator::Operator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    GeneralizedMean,
    ConvexCombo,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub lambda_grid: Vec<f64>,
    /// Ignored for [`Family::ConvexCombo`].
    pub p_grid: Vec<f64>,
    pub family: Family,
    pub eps: f64,
    pub max_iter: usize,
}

impl SweepPlan {
    pub fn validate(&self) -> Result<()> {
        if self.lambda_grid.is_empty() {
            return Err(IfmError::InvalidArgument("lambda grid is empty".into()));
        }
        if let Some(&l) = self.lambda_grid.iter().find(|l| !(0.0..=1.0).contains(*l)) {
            return Err(IfmError::InvalidLambda(l));
        }
        if self.family == Family::GeneralizedMean {
            if self.p_grid.is_empty() {
                return Err(IfmError::InvalidArgument("p grid is empty".into()));
            }
            if self.p_grid.contains(&0.0) {
                return Err(IfmError::ZeroP);
            }
        }
        if self.eps.is_nan() || self.eps <= 0.0 {
            return Err(IfmError::InvalidArgument("eps must be positive".into()));
        }
        Ok(())
    }

    /// Cells in output order: by lambda, then by p.
    pub fn operators(&self) -> Result<Vec<Operator<f64>>> {
        self.validate()?;
        let mut ops = Vec::new();
        for &lambda in &self.lambda_grid {
            match self.family {
                Family::GeneralizedMean => {
                    for &p in &self.p_grid {
                        ops.push(Operator::generalized_mean(lambda, p)?);
                    }
                }
                Family::ConvexCombo => ops.push(Operator::convex_combo(lambda)?),
            }
        }
        Ok(ops)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub lambda: f64,
    pub p: Option<f64>,
    pub converged: bool,
    pub iterations: usize,
    pub final_delta: f64,
    pub mu_distance_to_universal: f64,
    /// False where the convergence theorems do not apply (`lambda = 1` or
    /// `p < 0`).
    pub guaranteed: bool,
    pub oscillation_period: Option<usize>,
}

/// Evaluates every cell, concurrently; rows come back in plan order.
pub fn run_sweep(a: &Ifm<f64>, plan: &SweepPlan) -> Result<Vec<SweepRow>> {
    let ops = plan.operators()?;
    let opts = ConvergenceOptions {
        eps: plan.eps,
        max_iter: plan.max_iter,
    };
    ops.par_iter()
        .map(|op| {
            let r = power_sequence(a, op, &opts)?;
            Ok(SweepRow {
                lambda: op.lambda(),
                p: match *op {
                    Operator::GeneralizedMean { p, .. } => Some(p),
                    Operator::ConvexCombo { .. } => None,
                },
                converged: r.converged,
                iterations: r.iterations,
                final_delta: r.final_delta().unwrap_or(0.0),
                mu_distance_to_universal: r.limit.mu_distance_to_universal(),
                guaranteed: r.guaranteed,
                oscillation_period: r.oscillation_period,
            })
        })
        .collect()
}
