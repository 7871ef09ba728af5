//! Exhaustive search over blow-up schedules with four pairs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{classify, classify_cycle, ClassificationReport, Diagnosis, TwistorModel, PAIRS};
use crate::cycle::{Tau, TorsionSpec};
use crate::picard::{
    elementary_transform, untransform_component, AnticanonicalCycle,
    BlowupSchedule, ComponentId, InitialType, Location, Realizer, SurfaceLattice,
};

/// Torsion orders tried for every nef leaf: trivial, finite nontrivial and
/// non-torsion.
pub const NEF_TORSIONS: [TorsionSpec; 3] = [
    TorsionSpec::Finite(1),
    TorsionSpec::Finite(2),
    TorsionSpec::NonTorsion,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedConfiguration {
    pub schedule: BlowupSchedule,
    pub torsion: Option<TorsionSpec>,
    /// `(Cᵢ², is_real)` around the cycle, up to rotation and reflection.
    /// Empty when the schedule could not be realized.
    pub shape: Vec<(i64, bool)>,
    pub outcome: Result<ClassificationReport, Diagnosis>,
}

impl EnumeratedConfiguration {
    /// Case tag for classified configurations, diagnosis tag otherwise.
    pub fn tag(&self) -> &'static str {
        match &self.outcome {
            Ok(r) => r.case.tag(),
            Err(d) => d.tag(),
        }
    }

    pub fn is_realizable(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub configurations: Vec<EnumeratedConfiguration>,
    /// Schedules with all four pairs placed that were examined.
    pub leaves: usize,
    /// Whether every distinct configuration fits within the limit.
    pub exhausted: bool,
}

type Key = (InitialType, Vec<(i64, bool)>, &'static str, Option<Tau>);

fn torsion_order(t: Option<TorsionSpec>) -> Option<Tau> {
    t.map(crate::cycle::torsion_tau)
}

struct Search {
    found: BTreeMap<Key, EnumeratedConfiguration>,
    leaves: usize,
}

impl Search {
    fn record(&mut self, entry: EnumeratedConfiguration) {
        let key = (
            entry.schedule.initial,
            entry.shape.clone(),
            entry.tag(),
            torsion_order(entry.torsion),
        );
        match self.found.get(&key) {
            Some(old) if old.schedule <= entry.schedule => {}
            _ => {
                self.found.insert(key, entry);
            }
        }
    }

    fn leaf(&mut self, schedule: &BlowupSchedule, cycle: AnticanonicalCycle) {
        self.leaves += 1;
        let shape = cycle.canonical_shape();
        for (torsion, outcome) in classify_leaf(&cycle) {
            self.record(EnumeratedConfiguration {
                schedule: schedule.clone(),
                torsion,
                shape: shape.clone(),
                outcome,
            });
        }
    }

    fn dfs(&mut self, state: &Realizer, schedule: &mut BlowupSchedule) {
        if schedule.steps.len() == PAIRS {
            match state.clone().finish() {
                Ok(cycle) => self.leaf(schedule, cycle),
                Err(e) => self.record(EnumeratedConfiguration {
                    schedule: schedule.clone(),
                    torsion: None,
                    shape: Vec::new(),
                    outcome: Err(e.into()),
                }),
            }
            return;
        }
        for loc in state.candidates() {
            let mut next = state.clone();
            schedule.steps.push(loc);
            match next.apply(&loc) {
                Ok(()) => self.dfs(&next, schedule),
                Err(e) => self.record(EnumeratedConfiguration {
                    schedule: schedule.clone(),
                    torsion: None,
                    shape: Vec::new(),
                    outcome: Err(e.into()),
                }),
            }
            schedule.steps.pop();
        }
    }
}

/// Classifies a realized leaf, trying each torsion order when it is nef.
fn classify_leaf(
    cycle: &AnticanonicalCycle,
) -> Vec<(Option<TorsionSpec>, Result<ClassificationReport, Diagnosis>)> {
    match classify_cycle(cycle, None, false) {
        Err(Diagnosis::MissingTorsion) => NEF_TORSIONS
            .iter()
            .map(|&t| (Some(t), classify_cycle(cycle, Some(t), false)))
            .collect(),
        other => alloc::vec![(None, other)],
    }
}

/// Depth-first search over types I and II. Conjugate-equivalent choices of
/// a step are explored once; results are deduplicated by initial type,
/// weighted cycle shape, outcome tag and torsion order, keeping the smallest
/// schedule of each class, and returned in canonical order.
pub fn enumerate_configurations(max_reports: usize) -> Enumeration {
    let mut search = Search {
        found: BTreeMap::new(),
        leaves: 0,
    };
    let lattice = SurfaceLattice::new(PAIRS);
    for initial in [InitialType::I, InitialType::II] {
        let mut schedule = BlowupSchedule::new(initial, Vec::new());
        search.dfs(&Realizer::new(initial, lattice), &mut schedule);
    }
    let total = search.found.len();
    let configurations: Vec<_> = search.found.into_values().take(max_reports).collect();
    Enumeration {
        configurations,
        leaves: search.leaves,
        exhausted: total <= max_reports,
    }
}

/// Comparison of the three ways to classify a type III schedule whose first
/// pair sits at the nodes of `A + Ā`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformCheck {
    pub schedule: BlowupSchedule,
    pub transformed: BlowupSchedule,
    pub torsion: Option<TorsionSpec>,
    /// `classify` on the type III model.
    pub routed: Result<ClassificationReport, Diagnosis>,
    /// Classification of the type III cycle itself.
    pub direct: Result<ClassificationReport, Diagnosis>,
    /// `classify` on the transformed type I model, in type I names.
    pub transformed_report: Result<ClassificationReport, Diagnosis>,
}

impl TransformCheck {
    /// The transformed report, renamed to type III components, agrees with
    /// both the routed and the direct classification.
    pub fn consistent(&self) -> bool {
        let same = |a: &Result<ClassificationReport, Diagnosis>,
                    b: &Result<ClassificationReport, Diagnosis>| match (a, b) {
            (Ok(x), Ok(y)) => x == y,
            (Err(x), Err(y)) => x.tag() == y.tag(),
            _ => false,
        };
        let back = self
            .transformed_report
            .clone()
            .map(|r| r.map_ids(untransform_component));
        same(&back, &self.direct) && same(&back, &self.routed)
    }
}

/// Every type III schedule starting at the nodes, each with the torsion
/// orders its realized cycle calls for.
pub fn enumerate_type_iii() -> Vec<TransformCheck> {
    let lattice = SurfaceLattice::new(PAIRS);
    let first = Location::Node {
        components: (ComponentId::A, ComponentId::Abar),
    };
    let mut start = Realizer::new(InitialType::III, lattice);
    start
        .apply(&first)
        .expect("the nodes of A + Abar can always be blown up");
    let mut schedules = Vec::new();
    collect(&start, &mut alloc::vec![first], &mut schedules);
    let mut out = Vec::new();
    for schedule in schedules {
        let Ok(transformed) = elementary_transform(&schedule) else {
            continue;
        };
        let Ok(cycle) = schedule.realize() else {
            continue;
        };
        for (torsion, direct) in classify_leaf(&cycle) {
            let routed = TwistorModel::new(schedule.clone(), torsion, false)
                .and_then(|m| classify(&m));
            let transformed_report = TwistorModel::new(transformed.clone(), torsion, false)
                .and_then(|m| classify(&m));
            out.push(TransformCheck {
                schedule: schedule.clone(),
                transformed: transformed.clone(),
                torsion,
                routed,
                direct,
                transformed_report,
            });
        }
    }
    out
}

fn collect(state: &Realizer, steps: &mut Vec<Location>, out: &mut Vec<BlowupSchedule>) {
    if steps.len() == PAIRS {
        out.push(BlowupSchedule::new(InitialType::III, steps.clone()));
        return;
    }
    for loc in state.candidates() {
        let mut next = state.clone();
        if next.apply(&loc).is_ok() {
            steps.push(loc);
            collect(&next, steps, out);
            steps.pop();
        }
    }
}
