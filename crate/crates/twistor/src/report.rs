//! Machine-readable records for classification output.

use serde::{Deserialize, Serialize};
use twistor_core::classifier::{
    BaseLocus, ClassificationReport, DegreeOneCount, EnumeratedConfiguration, Enumeration,
};
use twistor_core::Tau;

use crate::document::ScheduleDocument;

/// A count that may be infinite: a number, or the string `"infinite"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Finite(u64),
    Infinite(InfiniteMarker),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InfiniteMarker {
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NegativeCurveRecord {
    pub component: String,
    pub degree: i64,
    pub real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub case: String,
    pub nef: bool,
    pub negative_curves: Vec<NegativeCurveRecord>,
    pub cycle_length: usize,
    pub h0_fundamental: u64,
    pub dim_fundamental_system: u64,
    pub base_locus: String,
    /// `null` when not determined by the data.
    pub degree_one_count: Option<Count>,
    pub algebraic_dimension: u8,
    pub lebrun: bool,
    #[serde(rename = "dim_minus2KS")]
    pub dim_minus2ks: Option<u64>,
    #[serde(rename = "dim_antican_Z")]
    pub dim_antican_z: Option<u64>,
    pub tau: Option<Count>,
    pub never_nef_and_big: bool,
}

impl From<&ClassificationReport> for ReportRecord {
    fn from(r: &ClassificationReport) -> Self {
        Self {
            case: r.case.tag().to_string(),
            nef: r.nef,
            negative_curves: r
                .negative_curves
                .iter()
                .map(|c| NegativeCurveRecord {
                    component: c.id.to_string(),
                    degree: c.degree,
                    real: c.is_real,
                })
                .collect(),
            cycle_length: r.cycle_length,
            h0_fundamental: r.h0_fundamental,
            dim_fundamental_system: r.dim_fundamental_system,
            base_locus: match r.base_locus {
                BaseLocus::Free => "free".to_string(),
                other => other.to_string(),
            },
            degree_one_count: match r.degree_one_count {
                DegreeOneCount::Finite(k) => Some(Count::Finite(k)),
                DegreeOneCount::Infinite => Some(Count::Infinite(InfiniteMarker::Infinite)),
                DegreeOneCount::Unknown => None,
            },
            algebraic_dimension: r.algebraic_dimension,
            lebrun: r.lebrun,
            dim_minus2ks: r.dim_minus2ks,
            dim_antican_z: r.dim_antican_z,
            tau: r.tau.map(|t| match t {
                Tau::Finite(k) => Count::Finite(k),
                Tau::Infinite => Count::Infinite(InfiniteMarker::Infinite),
            }),
            never_nef_and_big: r.never_nef_and_big,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationRecord {
    pub digest: String,
    pub schedule: ScheduleDocument,
    /// `(C², real)` around the cycle in canonical dihedral order.
    pub shape: Vec<(i64, bool)>,
    pub tag: String,
    pub report: Option<ReportRecord>,
    pub diagnosis: Option<String>,
}

impl From<&EnumeratedConfiguration> for ConfigurationRecord {
    fn from(c: &EnumeratedConfiguration) -> Self {
        Self {
            digest: c.schedule.to_string(),
            schedule: ScheduleDocument::from_schedule(&c.schedule, c.torsion, false),
            shape: c.shape.clone(),
            tag: c.tag().to_string(),
            report: c.outcome.as_ref().ok().map(ReportRecord::from),
            diagnosis: c.outcome.as_ref().err().map(|d| d.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerationRecord {
    pub leaves: usize,
    pub exhausted: bool,
    pub configurations: Vec<ConfigurationRecord>,
}

impl From<&Enumeration> for EnumerationRecord {
    fn from(e: &Enumeration) -> Self {
        Self {
            leaves: e.leaves,
            exhausted: e.exhausted,
            configurations: e.configurations.iter().map(ConfigurationRecord::from).collect(),
        }
    }
}

/// One line of the human-readable enumeration table.
pub fn table_row(c: &EnumeratedConfiguration) -> String {
    let digest = match c.torsion {
        Some(t) => format!("{} tau={}", c.schedule, twistor_core::cycle::torsion_tau(t)),
        None => c.schedule.to_string(),
    };
    match &c.outcome {
        Ok(r) => format!(
            "{digest:<60} {:<14} h0={} dim={} a={} deg1={}",
            r.case.tag(),
            r.h0_fundamental,
            r.dim_fundamental_system,
            r.algebraic_dimension,
            r.degree_one_count,
        ),
        Err(d) => format!("{digest:<60} {:<14} {d}", d.tag()),
    }
}
