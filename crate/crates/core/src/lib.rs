//! Exact closed forms for eccentricity matrices of wheel graphs, together with
//! the definitional oracles used to check them.
//!
//! Everything here computes in exact rational arithmetic over arbitrary
//! precision integers. Floating point appears only in the spectral radius
//! report and the power iteration oracle.
//!
//! Vertex indices are 0-based throughout the API: index `i` corresponds to the
//! wheel vertex `v_{i+1}`, so the hub is index 0 and the rim is `1..n`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod circulant;
pub mod closedform;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod ratq;

pub use circulant::{CirculantQ, TridiagSpec};
pub use closedform::{InertiaTriple, SpectralRadiusResult};
pub use error::{Error, Result};
pub use graphs::{Graph, WheelSpec};
pub use oracle::{CongruenceReport, PenroseReport, PivotKind};
pub use ratq::{MatrixQ, Rational, VectorQ};
