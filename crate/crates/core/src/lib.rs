//! Discrete spline quasi-interpolants of degrees 2 to 5 on uniform
//! partitions, with the quadrature rules, differentiation matrices and
//! zero finder built on them.
//!
//! ```
//! use splineqi::{Degree, QuasiInterpolant, UniformPartition};
//!
//! let p = UniformPartition::new(-1.0, 1.0, 32).unwrap();
//! let qi = QuasiInterpolant::new(Degree::CUBIC, p).unwrap();
//! let s = qi.apply_fn(|x| x * x * x - x);
//! assert!((s.eval(0.3).unwrap() - (0.027 - 0.3)).abs() < 1e-14);
//! ```

pub mod bspline;
pub mod differentiation;
pub mod error;
pub mod extended;
pub mod functions;
pub mod notation;
pub mod order;
pub mod partition;
pub mod qi;
pub mod quadrature;
pub mod reference;
pub mod rootfind;

pub use bspline::{GridKind, SampleGrid, Spline, SplineSpace};
pub use differentiation::{centered_diff, diff_error_table, DiffMatrix, DiffTable};
pub use error::{Error, Result};
pub use extended::DoubleDouble;
pub use functions::{legendre_p8, TestFunction};
pub use partition::{Degree, UniformPartition};
pub use qi::{lebesgue_profile, LebesgueProfile, QuasiInterpolant, StencilTable};
pub use quadrature::{error_table, ErrorTable, QuadratureRule, RuleFamily};
pub use rootfind::{find_zeros, RootReport};
