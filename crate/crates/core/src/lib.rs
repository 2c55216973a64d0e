//! Exact ℓ-modular and ℓ-adic Rankin–Selberg local factors for generic
//! representations of `GL_n(F)` described by cuspidal lines and segments.

pub mod error;
pub mod eulerpoly;
pub mod factors;
pub mod reps;
pub mod scalars;
pub mod suites;
pub mod tate;

pub use error::{Error, Result};
pub use eulerpoly::{EulerFactor, GammaClass};
pub use reps::{Catalog, CuspidalLine, CuspidalSymbol, GenericRep, InertialTag, Segment, Structure, TagMap};
pub use scalars::{AdicUnit, ModScalar, PrimeContext, Scalar, World};
