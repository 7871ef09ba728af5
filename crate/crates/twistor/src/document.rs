//! JSON schedule documents.
//!
//! ```json
//! {
//!   "n": 4,
//!   "initial_type": "I",
//!   "steps": [
//!     {"kind": "smooth", "component": "F"},
//!     {"kind": "node", "components": ["F", "G"]},
//!     {"kind": "infinitely_near", "over_pair": 1, "on_strict_transform": null}
//!   ],
//!   "torsion": {"kind": "finite", "order": 2},
//!   "smooth_anticanonical": false
//! }
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use twistor_core::picard::{BlowupSchedule, ComponentId, InitialType, Location};
use twistor_core::TorsionSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleDocument {
    pub n: usize,
    pub initial_type: String,
    pub steps: Vec<StepDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<TorsionDocument>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub smooth_anticanonical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StepDocument {
    Smooth {
        component: String,
    },
    Node {
        components: [String; 2],
    },
    InfinitelyNear {
        over_pair: usize,
        #[serde(default)]
        on_strict_transform: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TorsionDocument {
    Finite { order: u64 },
    Infinite,
}

#[derive(Debug)]
pub enum DocumentError {
    Json(serde_json::Error),
    Schema(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Json(e) => write!(f, "malformed schedule document: {e}"),
            Self::Schema(msg) => write!(f, "invalid schedule document: {msg}"),
        }
    }
}

impl std::error::Error for DocumentError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Self::Json(e) => Some(e),
            Self::Schema(_) => None,
        }
    }
}

/// A validated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedSchedule {
    pub schedule: BlowupSchedule,
    pub torsion: Option<TorsionSpec>,
    pub smooth_anticanonical: bool,
}

fn component(s: &str) -> Result<ComponentId, DocumentError> {
    s.parse()
        .map_err(|e| DocumentError::Schema(format!("{e} (component id)")))
}

impl ScheduleDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(DocumentError::Json)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn parse(&self) -> Result<ParsedSchedule, DocumentError> {
        let initial: InitialType = self
            .initial_type
            .parse()
            .map_err(|e| DocumentError::Schema(format!("{e} (initial_type)")))?;
        if self.n != self.steps.len() {
            return Err(DocumentError::Schema(format!(
                "n = {} but {} steps are given",
                self.n,
                self.steps.len()
            )));
        }
        let steps = self
            .steps
            .iter()
            .map(|s| {
                Ok(match s {
                    StepDocument::Smooth { component: c } => Location::Smooth {
                        component: component(c)?,
                    },
                    StepDocument::Node { components: [a, b] } => Location::Node {
                        components: (component(a)?, component(b)?),
                    },
                    StepDocument::InfinitelyNear {
                        over_pair,
                        on_strict_transform,
                    } => Location::InfinitelyNear {
                        over_pair: *over_pair,
                        on_strict_transform: on_strict_transform
                            .as_deref()
                            .map(component)
                            .transpose()?,
                    },
                })
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        let torsion = match self.torsion {
            None => None,
            Some(TorsionDocument::Infinite) => Some(TorsionSpec::NonTorsion),
            Some(TorsionDocument::Finite { order }) => Some(
                TorsionSpec::finite(order).map_err(|e| DocumentError::Schema(e.to_string()))?,
            ),
        };
        Ok(ParsedSchedule {
            schedule: BlowupSchedule::new(initial, steps),
            torsion,
            smooth_anticanonical: self.smooth_anticanonical,
        })
    }

    pub fn from_schedule(
        schedule: &BlowupSchedule,
        torsion: Option<TorsionSpec>,
        smooth_anticanonical: bool,
    ) -> Self {
        let steps = schedule
            .steps
            .iter()
            .map(|loc| match *loc {
                Location::Smooth { component } => StepDocument::Smooth {
                    component: component.to_string(),
                },
                Location::Node { components: (a, b) } => StepDocument::Node {
                    components: [a.to_string(), b.to_string()],
                },
                Location::InfinitelyNear {
                    over_pair,
                    on_strict_transform,
                } => StepDocument::InfinitelyNear {
                    over_pair,
                    on_strict_transform: on_strict_transform.map(|c| c.to_string()),
                },
            })
            .collect();
        Self {
            n: schedule.pairs(),
            initial_type: schedule.initial.to_string(),
            steps,
            torsion: torsion.map(|t| match t {
                TorsionSpec::Finite(order) => TorsionDocument::Finite { order },
                TorsionSpec::NonTorsion => TorsionDocument::Infinite,
            }),
            smooth_anticanonical,
        }
    }
}

/// Parses and validates a schedule document.
pub fn parse_schedule(text: &str) -> Result<ParsedSchedule, DocumentError> {
    ScheduleDocument::from_json(text)?.parse()
}
