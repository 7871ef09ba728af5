//! Real rational surfaces obtained from `P¹×P¹` by blowing up conjugate pairs
//! of points on a reducible anticanonical curve.

mod lattice;
mod schedule;
mod transform;

pub use lattice::{
    exceptional_strict_transform, strict_transform, DivisorClass, InfinitelyNear, LatticeError,
    SurfaceLattice,
};
pub(crate) use schedule::Realizer;
pub use schedule::{
    AnticanonicalCycle, BlowupSchedule, ComponentId, CycleComponent, CycleDefect, InitialType,
    Location, ParseIdError, RealizeError,
};
pub use transform::{
    elementary_transform, starts_with_nodes, transform_class, transform_component,
    untransform_component, TransformError,
};
