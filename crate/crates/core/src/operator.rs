//! Composition rules.

use std::fmt;

use crate::error::{IfmError, Result};
use crate::ifn::{check_lambda, power_mean, star_mu, star_nu, ComponentPair, Components};
use crate::scalar::Scalar;

/// How two entries are combined before the max (membership) / min
/// (non-membership) reduction over the inner index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Operator<T> {
    /// Weighted power mean `(lambda x^p + (1 - lambda) y^p)^(1/p)`.
    GeneralizedMean { lambda: T, p: T },
    /// `lambda` times max-min plus `1 - lambda` times the arithmetic mean.
    ConvexCombo { lambda: T },
}

impl<T: Scalar> Operator<T> {
    pub fn generalized_mean(lambda: T, p: T) -> Result<Self> {
        check_lambda(lambda)?;
        if p == T::zero() {
            return Err(IfmError::ZeroP);
        }
        if !p.is_finite() {
            return Err(IfmError::InvalidArgument(format!("p = {p} is not finite")));
        }
        Ok(Operator::GeneralizedMean { lambda, p })
    }

    pub fn convex_combo(lambda: T) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Operator::ConvexCombo { lambda })
    }

    /// `lambda = 1, p = 1`: the max-min degenerate case.
    pub fn max_min() -> Self {
        Operator::GeneralizedMean {
            lambda: T::one(),
            p: T::one(),
        }
    }

    /// `lambda = 1/2, p = 1`.
    pub fn arith_mean() -> Self {
        Operator::GeneralizedMean {
            lambda: T::lit(0.5),
            p: T::one(),
        }
    }

    /// `lambda = 1/2` with a positive exponent.
    pub fn root_power(p: T) -> Result<Self> {
        if p <= T::zero() {
            return Err(IfmError::InvalidArgument(format!(
                "root-power mean needs p > 0, got {p}"
            )));
        }
        Self::generalized_mean(T::lit(0.5), p)
    }

    /// `p = 1` with free weight.
    pub fn convex_mean(lambda: T) -> Result<Self> {
        Self::generalized_mean(lambda, T::one())
    }

    /// `lambda = 1/2, p = -1`.
    pub fn harmonic() -> Self {
        Operator::GeneralizedMean {
            lambda: T::lit(0.5),
            p: -T::one(),
        }
    }

    pub fn lambda(&self) -> T {
        match *self {
            Operator::GeneralizedMean { lambda, .. } | Operator::ConvexCombo { lambda } => lambda,
        }
    }

    /// `(1 + lambda) / 2` for the convex combination, `None` otherwise.
    pub fn alpha(&self) -> Option<T> {
        match *self {
            Operator::ConvexCombo { lambda } => Some((T::one() + lambda) * T::lit(0.5)),
            Operator::GeneralizedMean { .. } => None,
        }
    }

    /// Whether the contraction argument behind the convergence theorems
    /// applies: `lambda < 1`, and `p > 0` for the generalized mean.
    pub fn has_guarantee(&self) -> bool {
        match *self {
            Operator::GeneralizedMean { lambda, p } => lambda < T::one() && p > T::zero(),
            Operator::ConvexCombo { lambda } => lambda < T::one(),
        }
    }

    /// Both families collapse to an idempotent lattice operation at
    /// `lambda = 1`; the power sequence can then cycle exactly.
    pub fn is_degenerate(&self) -> bool {
        self.lambda() == T::one()
    }

    /// The theoretical step bound for powers `m >= 2`: `lambda^((m-2)/p)` or
    /// `alpha^(m-2)`. `None` when the bound does not apply (`p < 0`).
    pub fn cauchy_bound(&self, m: usize) -> Option<T> {
        let k = T::from_usize(m.saturating_sub(2)).expect("step index fits scalar");
        match *self {
            Operator::GeneralizedMean { lambda, p } => {
                if p > T::zero() {
                    Some(lambda.powf(k / p))
                } else {
                    None
                }
            }
            Operator::ConvexCombo { .. } => self.alpha().map(|a| a.powf(k)),
        }
    }

    #[inline]
    pub(crate) fn combine_mu(&self, x: T, y: T) -> T {
        match *self {
            Operator::GeneralizedMean { lambda, p } => power_mean(x, y, lambda, p),
            Operator::ConvexCombo { lambda } => star_mu(x, y, lambda),
        }
    }

    #[inline]
    pub(crate) fn combine_nu(&self, x: T, y: T) -> T {
        match *self {
            Operator::GeneralizedMean { lambda, p } => power_mean(x, y, lambda, p),
            Operator::ConvexCombo { lambda } => star_nu(x, y, lambda),
        }
    }

    /// Pairwise combination of two entries under this operator.
    pub fn combine(&self, a: &impl Components<T>, b: &impl Components<T>) -> ComponentPair<T> {
        ComponentPair::from_parts(
            self.combine_mu(a.mu(), b.mu()),
            self.combine_nu(a.nu(), b.nu()),
        )
    }
}

impl<T: Scalar> fmt::Display for Operator<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::GeneralizedMean { lambda, p } => {
                write!(f, "gen-mean(lambda={lambda}, p={p})")
            }
            Operator::ConvexCombo { lambda } => write!(f, "star(lambda={lambda})"),
        }
    }
}
