use std::fmt;

use crate::error::{IfmError, Result};
use crate::ifn::{ComponentPair, Components, Ifn};
use crate::scalar::Scalar;

/// Rectangular grid of `<mu, nu>` entries, stored row-major.
///
/// Matrices built from user data are validated as intuitionistic fuzzy
/// matrices. Powers under `p > 1` may leave the `mu + nu <= 1` region, so
/// entries are held as [`ComponentPair`]s and the sum constraint is checked
/// on demand with [`Ifm::sum_violations`].
#[derive(Debug, Clone, PartialEq)]
pub struct Ifm<T> {
    rows: usize,
    cols: usize,
    entries: Vec<ComponentPair<T>>,
}

impl<T: Scalar> Ifm<T> {
    /// Builds a matrix from validated entries in row-major order.
    pub fn new(rows: usize, cols: usize, entries: Vec<Ifn<T>>) -> Result<Self> {
        Self::from_pairs(
            rows,
            cols,
            entries.into_iter().map(ComponentPair::from).collect(),
        )
    }

    /// Builds a matrix without the sum constraint (each component must still
    /// lie in `[0, 1]`).
    pub fn from_pairs(rows: usize, cols: usize, entries: Vec<ComponentPair<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(IfmError::InvalidArgument(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(IfmError::InvalidArgument(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds and validates a matrix from nested `(mu, nu)` rows.
    pub fn from_rows(rows: &[Vec<(T, T)>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_cols {
                return Err(IfmError::InvalidArgument(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            for (j, &(mu, nu)) in row.iter().enumerate() {
                let v = Ifn::new(mu, nu).map_err(|e| IfmError::Entry {
                    row: i,
                    col: j,
                    source: Box::new(e),
                })?;
                entries.push(v.pair());
            }
        }
        Self::from_pairs(n_rows, n_cols, entries)
    }

    pub fn filled(rows: usize, cols: usize, value: Ifn<T>) -> Result<Self> {
        Self::new(rows, cols, vec![value; rows * cols])
    }

    /// The universal matrix `U` of order `n`: every entry `<1, 0>`.
    pub fn universal(n: usize) -> Self {
        Self::filled(n, n, Ifn::top()).expect("positive order")
    }

    /// Every entry `<0, 1>`.
    pub fn zero(n: usize) -> Self {
        Self::filled(n, n, Ifn::bottom()).expect("positive order")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(IfmError::DimensionMismatch {
                left: self.dims(),
                right: (self.cols, self.rows),
            })
        }
    }

    /// Entry at zero-based `(i, j)`. Panics when out of bounds.
    pub fn get(&self, i: usize, j: usize) -> ComponentPair<T> {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[ComponentPair<T>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[ComponentPair<T>] {
        &self.entries
    }

    /// True when `(i, j)` is exactly `<1, 0>`.
    pub fn is_top_at(&self, i: usize, j: usize) -> bool {
        let e = self.get(i, j);
        e.mu() == T::one() && e.nu() == T::zero()
    }

    /// Number of entries with `mu + nu > 1 + tol`.
    pub fn sum_violations(&self, tol: T) -> usize {
        self.entries
            .iter()
            .filter(|e| !e.is_intuitionistic(tol))
            .count()
    }

    /// Largest absolute difference over all entries and both components.
    pub fn delta(&self, other: &Self) -> Result<T> {
        if self.dims() != other.dims() {
            return Err(IfmError::DimensionMismatch {
                left: self.dims(),
                right: other.dims(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.max_abs_diff(b))
            .fold(T::zero(), T::max))
    }

    /// Largest per-column spread (max minus min across rows) of either
    /// component. Zero means all rows are identical.
    pub fn row_uniformity(&self) -> T {
        let mut worst = T::zero();
        for j in 0..self.cols {
            let (mut lo_mu, mut hi_mu) = (T::infinity(), T::neg_infinity());
            let (mut lo_nu, mut hi_nu) = (T::infinity(), T::neg_infinity());
            for i in 0..self.rows {
                let e = self.get(i, j);
                lo_mu = lo_mu.min(e.mu());
                hi_mu = hi_mu.max(e.mu());
                lo_nu = lo_nu.min(e.nu());
                hi_nu = hi_nu.max(e.nu());
            }
            worst = worst.max(hi_mu - lo_mu).max(hi_nu - lo_nu);
        }
        worst
    }

    /// True iff every entry has `mu >= 1 - tol` and `nu <= tol`.
    pub fn is_universal(&self, tol: T) -> bool {
        self.entries
            .iter()
            .all(|e| e.mu() >= T::one() - tol && e.nu() <= tol)
    }

    /// `max(1 - mu)` over all entries.
    pub fn mu_distance_to_universal(&self) -> T {
        self.entries
            .iter()
            .map(|e| T::one() - e.mu())
            .fold(T::zero(), T::max)
    }
}

impl<T: Scalar> fmt::Display for Ifm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                match f.precision() {
                    Some(p) => write!(f, "{e:.p$}")?,
                    None => write!(f, "{e}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
