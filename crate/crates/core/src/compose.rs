//! Matrix composition and left-fold powers.
//!
//! Neither operator family is associative, so `A^k` is always
//! `(A^(k-1)) o A`. No right-fold variant is offered.

use crate::error::{IfmError, Result};
use crate::ifn::{ComponentPair, Components};
use crate::matrix::Ifm;
use crate::operator::Operator;
use crate::scalar::Scalar;

/// `[A o B]_ij = <max_t mu-combine(a_it, b_tj), min_t nu-combine(a_it, b_tj)>`.
pub fn compose<T: Scalar>(a: &Ifm<T>, b: &Ifm<T>, op: &Operator<T>) -> Result<Ifm<T>> {
    if a.cols() != b.rows() {
        return Err(IfmError::DimensionMismatch {
            left: a.dims(),
            right: b.dims(),
        });
    }
    let inner = a.cols();
    let mut out = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        let row = a.row(i);
        for j in 0..b.cols() {
            let mut mu = T::neg_infinity();
            let mut nu = T::infinity();
            for (t, left) in row.iter().enumerate().take(inner) {
                let right = b.get(t, j);
                mu = mu.max(op.combine_mu(left.mu(), right.mu()));
                nu = nu.min(op.combine_nu(left.nu(), right.nu()));
            }
            out.push(ComponentPair::from_parts(mu, nu));
        }
    }
    Ifm::from_pairs(a.rows(), b.cols(), out)
}

/// `A^k` by left fold; `A^1 = A`.
pub fn power<T: Scalar>(a: &Ifm<T>, k: usize, op: &Operator<T>) -> Result<Ifm<T>> {
    if k == 0 {
        return Err(IfmError::InvalidArgument(
            "power exponent must be at least 1".into(),
        ));
    }
    let mut powers = Powers::new(a, *op)?;
    Ok(powers.nth(k - 1).expect("power sequence is infinite"))
}

/// Infinite iterator over `A^1, A^2, ...`.
#[derive(Debug, Clone)]
pub struct Powers<'a, T> {
    base: &'a Ifm<T>,
    op: Operator<T>,
    current: Option<Ifm<T>>,
}

impl<'a, T: Scalar> Powers<'a, T> {
    pub fn new(base: &'a Ifm<T>, op: Operator<T>) -> Result<Self> {
        base.require_square()?;
        Ok(Self {
            base,
            op,
            current: None,
        })
    }
}

impl<T: Scalar> Iterator for Powers<'_, T> {
    type Item = Ifm<T>;

    fn next(&mut self) -> Option<Ifm<T>> {
        let next = match &self.current {
            None => self.base.clone(),
            Some(prev) => compose(prev, self.base, &self.op).expect("square operands"),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}
