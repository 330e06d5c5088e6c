//! Exact construction and verification of rational distance sets on
//! hyperbolas `a*x*y + b*x + c*y + d = 0`.
//!
//! For such a conic with `a != 0` and `a*d - b*c != 0`, put
//! `D = (a*d - b*c) / (2*a^2)`. Non-torsion rational points on the curve
//! `E_D : Y^2 Z = X^3 - D^2 X Z^2` generate sets of three and four rational
//! points on the conic whose pairwise distances are all rational, and any
//! rational distance set of three conic points extends to four by a closed
//! formula. This crate implements those constructions, the two-dimensional
//! variety tying pairs of curve points together, and the supporting exact
//! arithmetic; nothing here ever touches floating point.

pub mod conic;
pub mod construct;
pub mod distance;
pub mod elliptic;
pub mod error;
pub mod json;
mod proj;
pub mod rational;
pub mod surface;

pub use conic::{Conic, ConicPoint};
pub use construct::{CompatibilityReport, CompatibleSystem, RationalDistanceSet};
pub use distance::{DistanceReport, PairDistance};
pub use elliptic::{Curve, CurvePoint, InvolutionSign};
pub use error::{Error, Result};
pub use rational::Rational;
pub use surface::SurfacePoint;
