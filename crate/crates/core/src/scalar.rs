//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating point type the algebra can be evaluated in.
///
/// Everything in this crate is written against this trait; `f64` is the
/// reference precision and `f32` is supported for callers that want it.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal into this type.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    /// Slack allowed on `mu + nu <= 1` when validating inputs.
    fn construction_tol() -> Self {
        let base = Self::lit(1e-12);
        let floor = Self::epsilon() * Self::lit(4.0);
        if base > floor {
            base
        } else {
            floor
        }
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}
