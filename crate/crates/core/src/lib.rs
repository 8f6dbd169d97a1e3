//! Exact invariants of parabolic Higgs bundles over punctured Riemann surfaces.
//!
//! The crate covers parabolic degree bookkeeping, slope stability of decomposable models,
//! Toledo invariants and Milnor–Wood bounds, the local correspondence with orbifold Higgs
//! bundles, mod-2 cohomology of V-manifolds, component counts for maximal representations,
//! and moduli-space dimension formulas. All arithmetic is exact.

pub mod components;
pub mod error;
pub mod dimension;
pub mod exact;
pub mod orbifold;
pub mod parbun;
pub mod stability;
pub mod surface;
pub mod vcoh;

pub use error::{Error, Result};
pub use exact::Rational;
pub use surface::{MarkedPoint, MarkedSurface};
