//! Exact computations for twistor spaces over `n·CP²`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: integer
//! cohomology, the Picard lattice of a real fundamental divisor, line bundles
//! on anticanonical cycles of rational curves, and the algebraic-dimension
//! classifier for `n = 4`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classifier;
pub mod cohomology;
pub mod cycle;
pub mod linalg;
pub mod picard;

pub use classifier::{
    classify, ClassificationReport, Diagnosis, NegativeCurves, TwistorModel,
};
pub use cohomology::{ChernData, CohomologyClass, CohomologyError};
pub use cycle::{CycleLineBundle, Tau, TorsionSpec};
pub use picard::{
    AnticanonicalCycle, BlowupSchedule, ComponentId, DivisorClass, InitialType, Location,
    SurfaceLattice,
};
