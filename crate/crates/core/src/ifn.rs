//! Intuitionistic fuzzy numbers and the pairwise combinations used by both
//! composition families.
//!
//! [`Ifn`] is the validated value (`mu + nu <= 1`). [`ComponentPair`] drops the
//! sum constraint: differences and `p > 1` generalized means can leave the
//! intuitionistic region while staying inside the unit square.

use std::fmt;

use crate::error::{IfmError, Result};
use crate::scalar::Scalar;

/// Read access to a `<mu, nu>` pair.
pub trait Components<T: Scalar> {
    fn mu(&self) -> T;
    fn nu(&self) -> T;

    fn pair(&self) -> ComponentPair<T> {
        ComponentPair {
            mu: self.mu(),
            nu: self.nu(),
        }
    }
}

/// A membership/non-membership pair with each component in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentPair<T> {
    mu: T,
    nu: T,
}

/// An intuitionistic fuzzy number: `0 <= mu, nu <= 1` and `mu + nu <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ifn<T> {
    mu: T,
    nu: T,
}

fn check_unit<T: Scalar>(name: &'static str, value: T) -> Result<()> {
    if value >= T::zero() && value <= T::one() {
        Ok(())
    } else {
        Err(IfmError::OutOfRange {
            name,
            value: value.to_f64().unwrap_or(f64::NAN),
        })
    }
}

pub(crate) fn check_lambda<T: Scalar>(lambda: T) -> Result<()> {
    if lambda >= T::zero() && lambda <= T::one() {
        Ok(())
    } else {
        Err(IfmError::InvalidLambda(lambda.to_f64().unwrap_or(f64::NAN)))
    }
}

impl<T: Scalar> ComponentPair<T> {
    pub fn new(mu: T, nu: T) -> Result<Self> {
        check_unit("mu", mu)?;
        check_unit("nu", nu)?;
        Ok(Self { mu, nu })
    }

    /// Callers guarantee both components are already in `[0, 1]`.
    pub(crate) fn from_parts(mu: T, nu: T) -> Self {
        Self { mu, nu }
    }

    /// True when the pair also satisfies the intuitionistic sum constraint
    /// up to `tol`.
    pub fn is_intuitionistic(&self, tol: T) -> bool {
        self.mu + self.nu <= T::one() + tol
    }

    pub fn to_ifn(self) -> Result<Ifn<T>> {
        Ifn::new(self.mu, self.nu)
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        (self.mu - other.mu).abs().max((self.nu - other.nu).abs())
    }

    /// Inverse of [`ifn_diff`]: shifts `self` up by the difference `d`.
    pub fn add_difference(&self, d: &ComponentPair<T>) -> ComponentPair<T> {
        ComponentPair {
            mu: self.mu + d.mu,
            nu: self.nu - d.nu,
        }
    }

    /// `<lambda * mu, (1 - lambda) * nu>`; see [`scalar_mult`].
    pub fn scaled(&self, lambda: T) -> Result<ComponentPair<T>> {
        check_lambda(lambda)?;
        Ok(ComponentPair {
            mu: lambda * self.mu,
            nu: (T::one() - lambda) * self.nu,
        })
    }
}

impl<T: Scalar> Ifn<T> {
    /// Validated constructor. Fails with `OutOfRange` or `SumViolation`.
    pub fn new(mu: T, nu: T) -> Result<Self> {
        check_unit("mu", mu)?;
        check_unit("nu", nu)?;
        let sum = mu + nu;
        if sum > T::one() + T::construction_tol() {
            return Err(IfmError::SumViolation {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { mu, nu })
    }

    /// `<1, 0>`, the top of the dominance order.
    pub fn top() -> Self {
        Self {
            mu: T::one(),
            nu: T::zero(),
        }
    }

    /// `<0, 1>`, the bottom of the dominance order.
    pub fn bottom() -> Self {
        Self {
            mu: T::zero(),
            nu: T::one(),
        }
    }

    pub fn is_top(&self) -> bool {
        self.mu == T::one() && self.nu == T::zero()
    }
}

impl<T: Scalar> Components<T> for Ifn<T> {
    fn mu(&self) -> T {
        self.mu
    }
    fn nu(&self) -> T {
        self.nu
    }
}

impl<T: Scalar> Components<T> for ComponentPair<T> {
    fn mu(&self) -> T {
        self.mu
    }
    fn nu(&self) -> T {
        self.nu
    }
}

impl<T: Scalar> From<Ifn<T>> for ComponentPair<T> {
    fn from(v: Ifn<T>) -> Self {
        v.pair()
    }
}

impl<T: Scalar> fmt::Display for Ifn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair(f, self.mu, self.nu)
    }
}

impl<T: Scalar> fmt::Display for ComponentPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_pair(f, self.mu, self.nu)
    }
}

fn fmt_pair<T: Scalar>(f: &mut fmt::Formatter<'_>, mu: T, nu: T) -> fmt::Result {
    match f.precision() {
        Some(prec) => write!(f, "<{:.*},{:.*}>", prec, mu, prec, nu),
        None => write!(f, "<{},{}>", mu, nu),
    }
}

/// Dominance order: `a <= b` iff `a.mu <= b.mu` and `a.nu >= b.nu`.
///
/// This is a partial order, so incomparable pairs are `false` both ways.
pub fn dominance_leq<T: Scalar>(a: &impl Components<T>, b: &impl Components<T>) -> bool {
    a.mu() <= b.mu() && a.nu() >= b.nu()
}

/// Weighted power mean `(lambda x^p + (1 - lambda) y^p)^(1/p)` without
/// argument validation.
///
/// Conventions: equal arguments return the argument unchanged, a zero weight
/// drops its argument, and for `p < 0` any zero argument that carries weight
/// forces the result to zero. The result is kept inside `[min(x,y), max(x,y)]`
/// so rounding never leaves the unit interval.
pub(crate) fn power_mean<T: Scalar>(x: T, y: T, lambda: T, p: T) -> T {
    if x == y || lambda == T::one() {
        return x;
    }
    if lambda == T::zero() {
        return y;
    }
    if p < T::zero() && (x == T::zero() || y == T::zero()) {
        return T::zero();
    }
    let w = T::one() - lambda;
    let raw = if p == T::one() {
        lambda * x + w * y
    } else {
        (lambda * x.powf(p) + w * y.powf(p)).powf(p.recip())
    };
    raw.max(x.min(y)).min(x.max(y))
}

/// Membership side of the convex max-min/arithmetic combination.
pub(crate) fn star_mu<T: Scalar>(x: T, y: T, lambda: T) -> T {
    if x == y {
        return x;
    }
    let half = T::lit(0.5);
    lambda * x.min(y) + (T::one() - lambda) * (x + y) * half
}

/// Non-membership side of the convex max-min/arithmetic combination.
pub(crate) fn star_nu<T: Scalar>(x: T, y: T, lambda: T) -> T {
    if x == y {
        return x;
    }
    let half = T::lit(0.5);
    lambda * x.max(y) + (T::one() - lambda) * (x + y) * half
}

/// Weighted generalized mean of two reals in `[0, 1]`.
pub fn gen_mean_scalar<T: Scalar>(x: T, y: T, lambda: T, p: T) -> Result<T> {
    if p == T::zero() {
        return Err(IfmError::ZeroP);
    }
    check_lambda(lambda)?;
    check_unit("x", x)?;
    check_unit("y", y)?;
    Ok(power_mean(x, y, lambda, p))
}

/// [`gen_mean_scalar`] applied to each component.
pub fn gen_mean_pair<T: Scalar>(
    a: &impl Components<T>,
    b: &impl Components<T>,
    lambda: T,
    p: T,
) -> Result<ComponentPair<T>> {
    let mu = gen_mean_scalar(a.mu(), b.mu(), lambda, p)?;
    let nu = gen_mean_scalar(a.nu(), b.nu(), lambda, p)?;
    Ok(ComponentPair::from_parts(mu, nu))
}

/// `a * b`: `lambda` times max-min plus `1 - lambda` times the arithmetic mean,
/// taking the min on membership and the max on non-membership.
pub fn star_scalar<T: Scalar>(
    a: &impl Components<T>,
    b: &impl Components<T>,
    lambda: T,
) -> Result<ComponentPair<T>> {
    check_lambda(lambda)?;
    Ok(ComponentPair::from_parts(
        star_mu(a.mu(), b.mu(), lambda),
        star_nu(a.nu(), b.nu(), lambda),
    ))
}

/// Scalar multiplication `lambda a = <lambda mu, (1 - lambda) nu>`.
pub fn scalar_mult<T: Scalar>(lambda: T, a: &Ifn<T>) -> Result<Ifn<T>> {
    let s = a.pair().scaled(lambda)?;
    // lambda mu + (1 - lambda) nu <= max(mu, nu) <= 1, so this stays valid.
    Ok(Ifn { mu: s.mu, nu: s.nu })
}

/// Difference `b - a = <b.mu - a.mu, a.nu - b.nu>`, defined when `a <= b`.
pub fn ifn_diff<T: Scalar>(
    b: &impl Components<T>,
    a: &impl Components<T>,
) -> Result<ComponentPair<T>> {
    if !dominance_leq(a, b) {
        return Err(IfmError::NotDominated);
    }
    Ok(ComponentPair::from_parts(b.mu() - a.mu(), a.nu() - b.nu()))
}
