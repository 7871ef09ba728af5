//! Elementary transformation turning a type III configuration whose first
//! pair sits at the two nodes of `A + Ā` into a type I configuration.
//!
//! Blowing up both nodes of `A + Ā` and contracting the strict transforms of
//! the two fibres through them lands on another `P¹×P¹` in which `A, Ā`
//! become the lines `G, Ḡ` and the two exceptional curves become the fibres
//! `F, F̄`. The contracted fibres are the new first pair, now lying on `F, F̄`.

use alloc::vec::Vec;
use core::fmt;

use super::lattice::DivisorClass;
use super::schedule::{BlowupSchedule, ComponentId, InitialType, Location};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransformError {
    NotTypeIII,
    /// The first step must blow up the nodes of `A + Ā`.
    FirstStepNotNode,
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotTypeIII => f.write_str("elementary transform needs a type III schedule"),
            Self::FirstStepNotNode => {
                f.write_str("elementary transform needs the nodes of A + Abar blown up first")
            }
        }
    }
}

impl core::error::Error for TransformError {}

/// Component names after the transform.
pub fn transform_component(id: ComponentId) -> ComponentId {
    use ComponentId::*;
    match id {
        A => G,
        Abar => Gbar,
        Exceptional(1) => F,
        Exceptional(2) => Fbar,
        other => other,
    }
}

/// Inverse of [`transform_component`] on the components a transformed cycle
/// can contain.
pub fn untransform_component(id: ComponentId) -> ComponentId {
    use ComponentId::*;
    match id {
        G => A,
        Gbar => Abar,
        F => Exceptional(1),
        Fbar => Exceptional(2),
        other => other,
    }
}

/// Whether a type III schedule starts by blowing up the nodes of `A + Ā`.
pub fn starts_with_nodes(schedule: &BlowupSchedule) -> bool {
    use ComponentId::*;
    schedule.initial == InitialType::III
        && matches!(
            schedule.steps.first(),
            Some(Location::Node {
                components: (A, Abar) | (Abar, A)
            })
        )
}

/// Rewrites the schedule on the transformed quadric. Both schedules describe
/// the same surface and the same anticanonical cycle, with components renamed
/// by [`transform_component`].
pub fn elementary_transform(schedule: &BlowupSchedule) -> Result<BlowupSchedule, TransformError> {
    if schedule.initial != InitialType::III {
        return Err(TransformError::NotTypeIII);
    }
    if !starts_with_nodes(schedule) {
        return Err(TransformError::FirstStepNotNode);
    }
    let mut steps = Vec::with_capacity(schedule.steps.len());
    steps.push(Location::Smooth {
        component: ComponentId::F,
    });
    for loc in &schedule.steps[1..] {
        steps.push(transform_location(loc));
    }
    Ok(BlowupSchedule::new(InitialType::I, steps))
}

fn transform_location(loc: &Location) -> Location {
    use ComponentId::*;
    let t = transform_component;
    match *loc {
        Location::Smooth { component } => Location::Smooth {
            component: t(component),
        },
        Location::Node { components: (a, b) } => Location::Node {
            components: (t(a), t(b)),
        },
        Location::InfinitelyNear {
            over_pair: 1,
            on_strict_transform: None,
        } => Location::Smooth { component: F },
        Location::InfinitelyNear {
            over_pair: 1,
            on_strict_transform: Some(c),
        } => match c {
            // A node between E1 and a later odd exceptional curve is the
            // same point seen from that curve.
            Exceptional(i) if i % 2 == 1 && i > 1 => Location::InfinitelyNear {
                over_pair: i.div_ceil(2),
                on_strict_transform: Some(F),
            },
            _ => Location::Node {
                components: (F, t(c)),
            },
        },
        Location::InfinitelyNear {
            over_pair,
            on_strict_transform,
        } => Location::InfinitelyNear {
            over_pair,
            on_strict_transform: on_strict_transform.map(t),
        },
    }
}

/// The induced isometry of Picard lattices. With `ℓ' = ℓ + φ − E₁ − E₂`,
/// `φ' = φ` and new exceptional classes `Fᵢ = φ − Eᵢ` (i = 1, 2):
/// `aℓ + bφ + m₁E₁ + m₂E₂ + R ↦ aℓ' + (a+b+m₁+m₂)φ' − (a+m₁)F₁ − (a+m₂)F₂ + R`.
pub fn transform_class(class: &DivisorClass) -> DivisorClass {
    let a = class.line;
    let b = class.fibre;
    let mut exceptional = class.exceptional.clone();
    let m1 = exceptional.first().copied().unwrap_or(0);
    let m2 = exceptional.get(1).copied().unwrap_or(0);
    if exceptional.len() >= 2 {
        exceptional[0] = -a - m1;
        exceptional[1] = -a - m2;
    }
    DivisorClass {
        line: a,
        fibre: a + b + m1 + m2,
        exceptional,
    }
}
