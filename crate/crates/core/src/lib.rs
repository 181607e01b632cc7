//! Powers of intuitionistic fuzzy matrices.
//!
//! Two composition families are provided: the max/min of weighted power
//! means ([`Operator::GeneralizedMean`]) and the convex combination of
//! max-min with the arithmetic mean ([`Operator::ConvexCombo`]). Powers are
//! left folds `A^k = A^(k-1) o A`; [`power_sequence`] iterates them to a
//! limit and [`graph`] predicts which limit columns saturate to `<1, 0>`
//! from the exact-`<1, 0>` edge subgraph. [`oracle`] recomputes powers by
//! enumerating walks.
//!
//! All numeric code is generic over [`Scalar`]; the `*64` / `*32` aliases
//! fix the precision.
//!
//! ```
//! use ifm_core::{power, Ifm64, Operator64};
//!
//! let a = Ifm64::from_rows(&[
//!     vec![(1.0, 0.0), (0.5, 0.4)],
//!     vec![(0.0, 1.0), (0.6, 0.3)],
//! ])
//! .unwrap();
//! let op = Operator64::generalized_mean(0.6, 1.0).unwrap();
//! let sq = power(&a, 2, &op).unwrap();
//! assert_eq!(sq.dims(), (2, 2));
//! ```

pub mod checks;
pub mod compose;
pub mod convergence;
pub mod error;
pub mod graph;
pub mod ifn;
pub mod io;
pub mod matrix;
pub mod operator;
pub mod oracle;
pub mod scalar;
pub mod sweep;

pub use compose::{compose, power, Powers};
pub use convergence::{power_sequence, ConvergenceOptions, ConvergenceReport};
pub use error::{IfmError, Result};
pub use graph::{
    critical_structure, export_dot, path_weight_gen, path_weight_star, predict_column_limits,
    predict_universal, CriticalStructure, DotOptions, PathSpec,
};
pub use ifn::{
    dominance_leq, gen_mean_pair, gen_mean_scalar, ifn_diff, scalar_mult, star_scalar,
    ComponentPair, Components, Ifn,
};
pub use matrix::Ifm;
pub use operator::Operator;
pub use oracle::{brute_force_power, differential_check, OracleBudget};
pub use scalar::Scalar;

pub type Ifn64 = Ifn<f64>;
pub type Ifn32 = Ifn<f32>;
pub type Pair64 = ComponentPair<f64>;
pub type Pair32 = ComponentPair<f32>;
pub type Ifm64 = Ifm<f64>;
pub type Ifm32 = Ifm<f32>;
pub type Operator64 = Operator<f64>;
pub type Operator32 = Operator<f32>;
pub type Report64 = ConvergenceReport<f64>;
