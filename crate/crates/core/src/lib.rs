//! Momentum imparted to a moving magnetoelectric medium by classical and
//! zero-point electromagnetic fields.
//!
//! * [`algebra`]: 3-vectors, 3×3 matrices and the domain value types.
//! * [`relativity`]: lab-frame `ε′`, `μ′` of the moving medium and Lorentz
//!   field transforms.
//! * [`lagrangian`]: the magnetoelectric interaction density, its first-order
//!   expansion in `v/c` and the verifiers for that expansion.
//! * [`momentum`]: the medium-velocity equation with per-term attribution.
//! * [`vacuum`]: zero-point mode sums of the velocity-equation bilinears.
//! * [`cli`]: configuration, subcommands and table output for the `mevac`
//!   binary.
//!
//! Gaussian (CGS) units throughout.

pub mod algebra;
pub mod cli;
pub mod constants;
pub mod error;
pub mod fit;
pub mod lagrangian;
pub mod momentum;
pub mod relativity;
pub mod vacuum;

pub use algebra::{BoostSpec, FieldState, Mat3, Material, Vec3};
pub use error::{Error, Result};
