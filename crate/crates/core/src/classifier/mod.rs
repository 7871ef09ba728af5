//! Algebraic dimension of twistor spaces over `4ℂP²` from the anticanonical
//! cycle of a real fundamental divisor.
//!
//! Everything is driven by the degrees `lᵢ = Cᵢ·(−K_S)` of the cycle
//! components. They sum to `(−K_S)² = 0`, so either all vanish (the
//! fundamental bundle is nef and the torsion order `τ` of
//! `N = K_S⁻¹ ⊗ 𝒪_C` decides between `a(Z) = 1` and `2`) or some component
//! has negative degree and `Z` is Moishezon.

mod enumerate;

use alloc::vec::Vec;
use core::fmt;

use crate::cycle::{self, CycleError, CycleLineBundle, Tau, TorsionSpec};
use crate::picard::{
    elementary_transform, starts_with_nodes, untransform_component, AnticanonicalCycle,
    BlowupSchedule, ComponentId, InitialType, Location, RealizeError, TransformError,
};

pub use enumerate::{
    enumerate_configurations, enumerate_type_iii, Enumeration, EnumeratedConfiguration,
    TransformCheck,
};

/// Number of conjugate pairs the classification applies to.
pub const PAIRS: usize = 4;

/// Why a model cannot be classified. Apart from `MissingTorsion`, which is
/// an input problem, these are violations of necessary conditions for the
/// configuration to come from a twistor space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnosis {
    WrongPairCount { pairs: usize },
    Realize(RealizeError),
    Transform(TransformError),
    /// A component with `C·(−K_S) ≤ −3`.
    DegreeBelowBound { id: ComponentId, degree: i64 },
    /// A real negative curve that is not the only negative curve, or whose
    /// degree is not −2.
    RealNegativeCurve { id: ComponentId, degree: i64, count: usize },
    /// Non-real curves of degree −2 that do not form exactly one conjugate
    /// pair.
    MinusTwoNotAPair { count: usize },
    /// The two curves of degree −2 meet.
    MinusTwoPairMeets { a: ComponentId, b: ComponentId, product: i64 },
    /// Curves of degree −1 and −2 together.
    MixedNegativeDegrees,
    MinusOneCount { count: usize },
    MinusOneReal { id: ComponentId },
    NotConjugateClosed { id: ComponentId },
    /// Two components of positive degree meet.
    PositiveCurvesMeet { a: ComponentId, b: ComponentId },
    /// A connected component of `C ∖ C₊` with other than one negative curve.
    ArcNegativeCount { arc: Vec<ComponentId>, count: usize },
    /// `h⁰` of `N²` cannot be evaluated or disagrees with `|I₊|`.
    MinusTwoKMismatch { expected: u64, found: Option<u64> },
    CycleCohomology(CycleError),
    SmoothVariantNotNef,
    /// Type III without the nodes blown up must be nef.
    TypeIIINotNef,
    /// The nef branch needs the order of `N`.
    MissingTorsion,
    /// A classification post-condition failed.
    TheoremViolation(&'static str),
}

impl Diagnosis {
    /// Stable short name used for grouping and machine-readable output.
    pub fn tag(&self) -> &'static str {
        match self {
            Self::WrongPairCount { .. } => "wrong_pair_count",
            Self::Realize(_) => "unrealizable_schedule",
            Self::Transform(_) => "transform_precondition",
            Self::DegreeBelowBound { .. } => "degree_below_bound",
            Self::RealNegativeCurve { .. } => "real_negative_curve",
            Self::MinusTwoNotAPair { .. } => "minus_two_not_a_pair",
            Self::MinusTwoPairMeets { .. } => "minus_two_pair_meets",
            Self::MixedNegativeDegrees => "mixed_negative_degrees",
            Self::MinusOneCount { .. } => "minus_one_count",
            Self::MinusOneReal { .. } => "minus_one_real",
            Self::NotConjugateClosed { .. } => "not_conjugate_closed",
            Self::PositiveCurvesMeet { .. } => "positive_curves_meet",
            Self::ArcNegativeCount { .. } => "arc_negative_count",
            Self::MinusTwoKMismatch { .. } => "minus_two_k_mismatch",
            Self::CycleCohomology(_) => "cycle_cohomology",
            Self::SmoothVariantNotNef => "smooth_variant_not_nef",
            Self::TypeIIINotNef => "type_iii_not_nef",
            Self::MissingTorsion => "missing_torsion",
            Self::TheoremViolation(_) => "theorem_violation",
        }
    }

    /// Input problems as opposed to geometric obstructions.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Self::MissingTorsion | Self::WrongPairCount { .. })
    }
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongPairCount { pairs } => {
                write!(f, "classification needs 4 conjugate pairs, got {pairs}")
            }
            Self::Realize(e) => write!(f, "{e}"),
            Self::Transform(e) => write!(f, "{e}"),
            Self::DegreeBelowBound { id, degree } => {
                write!(f, "{id}.(-K_S) = {degree} is below the bound -2")
            }
            Self::RealNegativeCurve { id, degree, count } => write!(
                f,
                "real negative curve {id} of degree {degree} among {count} negative curve(s)"
            ),
            Self::MinusTwoNotAPair { count } => {
                write!(f, "{count} non-real curve(s) of degree -2; expected one conjugate pair")
            }
            Self::MinusTwoPairMeets { a, b, product } => {
                write!(f, "{a}.{b} = {product}; the degree -2 pair must be disjoint")
            }
            Self::MixedNegativeDegrees => {
                f.write_str("negative curves of degree -1 and -2 together")
            }
            Self::MinusOneCount { count } => {
                write!(f, "{count} curves of degree -1; expected 2, 4 or 6")
            }
            Self::MinusOneReal { id } => write!(f, "curve {id} of degree -1 is real"),
            Self::NotConjugateClosed { id } => {
                write!(f, "conjugate of negative curve {id} is not negative")
            }
            Self::PositiveCurvesMeet { a, b } => {
                write!(f, "positive-degree components {a} and {b} meet")
            }
            Self::ArcNegativeCount { arc, count } => {
                f.write_str("connected component {")?;
                for (i, id) in arc.iter().enumerate() {
                    let sep = if i == 0 { "" } else { "," };
                    write!(f, "{sep}{id}")?;
                }
                write!(f, "}} of C \\ C+ contains {count} negative curve(s), expected 1")
            }
            Self::MinusTwoKMismatch { expected, found } => match found {
                Some(v) => write!(f, "dim|-2K_S| = {v} but |I+| = {expected}"),
                None => write!(f, "dim|-2K_S| not computable; |I+| = {expected}"),
            },
            Self::CycleCohomology(e) => write!(f, "{e}"),
            Self::SmoothVariantNotNef => {
                f.write_str("a smooth anticanonical curve requires the nef case")
            }
            Self::TypeIIINotNef => {
                f.write_str("type III without the nodes blown up must be nef")
            }
            Self::MissingTorsion => {
                f.write_str("the nef case needs torsion data for N = K_S^-1 restricted to C")
            }
            Self::TheoremViolation(what) => write!(f, "post-condition failed: {what}"),
        }
    }
}

impl core::error::Error for Diagnosis {}

impl From<RealizeError> for Diagnosis {
    fn from(e: RealizeError) -> Self {
        Self::Realize(e)
    }
}

impl From<TransformError> for Diagnosis {
    fn from(e: TransformError) -> Self {
        Self::Transform(e)
    }
}

/// A schedule with its realized cycle and the moduli the cycle does not
/// determine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistorModel {
    pub schedule: BlowupSchedule,
    pub cycle: AnticanonicalCycle,
    pub torsion: Option<TorsionSpec>,
    /// The anticanonical member is a smooth elliptic curve rather than the
    /// cycle (only meaningful in the nef case).
    pub smooth_variant: bool,
}

impl TwistorModel {
    pub fn new(
        schedule: BlowupSchedule,
        torsion: Option<TorsionSpec>,
        smooth_variant: bool,
    ) -> Result<Self, Diagnosis> {
        if schedule.pairs() != PAIRS {
            return Err(Diagnosis::WrongPairCount {
                pairs: schedule.pairs(),
            });
        }
        let cycle = schedule.realize()?;
        Ok(Self {
            schedule,
            cycle,
            torsion,
            smooth_variant,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    Nef,
    /// (a) a unique real curve of degree −2.
    RealMinusTwo,
    /// (b) a conjugate pair of disjoint curves of degree −2.
    PairMinusTwo,
    /// (c) conjugate pairs of curves of degree −1.
    PairsMinusOne,
}

impl Case {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Nef => "NEF",
            Self::RealMinusTwo => "REAL_MINUS_2",
            Self::PairMinusTwo => "PAIR_MINUS_2",
            Self::PairsMinusOne => "PAIRS_MINUS_1",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NegativeCurve {
    pub id: ComponentId,
    pub degree: i64,
    pub is_real: bool,
}

/// The set `𝒩` of negative curves, sorted by component id, in one of the
/// admissible shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NegativeCurves {
    None,
    RealMinusTwo(NegativeCurve),
    PairMinusTwo(NegativeCurve, NegativeCurve),
    PairsMinusOne(Vec<NegativeCurve>),
}

impl NegativeCurves {
    pub fn case(&self) -> Case {
        match self {
            Self::None => Case::Nef,
            Self::RealMinusTwo(_) => Case::RealMinusTwo,
            Self::PairMinusTwo(..) => Case::PairMinusTwo,
            Self::PairsMinusOne(_) => Case::PairsMinusOne,
        }
    }

    pub fn curves(&self) -> Vec<NegativeCurve> {
        match self {
            Self::None => Vec::new(),
            Self::RealMinusTwo(c) => alloc::vec![*c],
            Self::PairMinusTwo(a, b) => alloc::vec![*a, *b],
            Self::PairsMinusOne(v) => v.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseLocus {
    Free,
    RealCurve(ComponentId),
    ConjugatePair(ComponentId, ComponentId),
    /// The whole anticanonical curve `C`.
    AnticanonicalCurve,
}

impl fmt::Display for BaseLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Free => f.write_str("free"),
            Self::RealCurve(c) => write!(f, "{c}"),
            Self::ConjugatePair(a, b) => write!(f, "{a}+{b}"),
            Self::AnticanonicalCurve => f.write_str("C"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeOneCount {
    Finite(u64),
    Infinite,
    /// Not determined by the data (nef with `dim|F| = 2`).
    Unknown,
}

impl fmt::Display for DegreeOneCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(k) => write!(f, "{k}"),
            Self::Infinite => f.write_str("inf"),
            Self::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub nef: bool,
    pub negative_curves: Vec<NegativeCurve>,
    pub case: Case,
    pub h0_fundamental: u64,
    pub dim_fundamental_system: u64,
    pub base_locus: BaseLocus,
    pub degree_one_count: DegreeOneCount,
    pub algebraic_dimension: u8,
    pub lebrun: bool,
    pub dim_minus2ks: Option<u64>,
    pub dim_antican_z: Option<u64>,
    pub tau: Option<Tau>,
    pub cycle_length: usize,
    /// `F` nef implies `a(Z) ≤ 2`, so `F` is never nef and big.
    pub never_nef_and_big: bool,
}

impl ClassificationReport {
    /// Renames every component id in the report.
    pub fn map_ids(mut self, f: impl Fn(ComponentId) -> ComponentId) -> Self {
        for c in &mut self.negative_curves {
            c.id = f(c.id);
        }
        self.negative_curves.sort();
        self.base_locus = match self.base_locus {
            BaseLocus::RealCurve(c) => BaseLocus::RealCurve(f(c)),
            BaseLocus::ConjugatePair(a, b) => {
                let (a, b) = (f(a), f(b));
                BaseLocus::ConjugatePair(a.min(b), a.max(b))
            }
            other => other,
        };
        self
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case: {}", self.case)?;
        writeln!(f, "nef: {}", self.nef)?;
        f.write_str("negative curves:")?;
        if self.negative_curves.is_empty() {
            f.write_str(" none")?;
        }
        for c in &self.negative_curves {
            let real = if c.is_real { ", real" } else { "" };
            write!(f, " {}({}{real})", c.id, c.degree)?;
        }
        writeln!(f)?;
        writeln!(f, "cycle length: {}", self.cycle_length)?;
        writeln!(f, "h0(F): {}", self.h0_fundamental)?;
        writeln!(f, "dim|F|: {}", self.dim_fundamental_system)?;
        writeln!(f, "base locus: {}", self.base_locus)?;
        writeln!(f, "degree-one divisors: {}", self.degree_one_count)?;
        if let Some(t) = self.tau {
            writeln!(f, "tau: {t}")?;
        }
        if let Some(d) = self.dim_minus2ks {
            writeln!(f, "dim|-2K_S|: {d}")?;
        }
        if let Some(d) = self.dim_antican_z {
            writeln!(f, "dim|-K_Z|: {d}")?;
        }
        writeln!(f, "LeBrun: {}", self.lebrun)?;
        write!(f, "a(Z): {}", self.algebraic_dimension)
    }
}

/// `h⁰(F^m) = m + 1 + h¹(F^m)` for `n = 4`.
pub fn h0_pluri_fundamental(m: u64, h1: u64) -> u64 {
    m + 1 + h1
}

/// `Cᵢ·(−K_S)` in cyclic order.
pub fn anticanonical_degrees(cycle: &AnticanonicalCycle) -> Vec<i64> {
    cycle.anticanonical_degrees()
}

pub fn is_nef(cycle: &AnticanonicalCycle) -> bool {
    cycle.anticanonical_degrees().iter().all(|&l| l >= 0)
}

/// Collects the negative curves and checks that they form one of the three
/// admissible patterns.
pub fn negative_curves(cycle: &AnticanonicalCycle) -> Result<NegativeCurves, Diagnosis> {
    let mut neg: Vec<NegativeCurve> = cycle
        .components()
        .iter()
        .filter_map(|c| {
            let degree = c.class.anticanonical_degree();
            (degree < 0).then_some(NegativeCurve {
                id: c.id,
                degree,
                is_real: c.is_real,
            })
        })
        .collect();
    neg.sort();
    if neg.is_empty() {
        return Ok(NegativeCurves::None);
    }
    if let Some(c) = neg.iter().find(|c| c.degree <= -3) {
        return Err(Diagnosis::DegreeBelowBound {
            id: c.id,
            degree: c.degree,
        });
    }
    for c in &neg {
        let conj = cycle.component(c.id).map(|x| x.conjugate);
        if !neg.iter().any(|d| Some(d.id) == conj) {
            return Err(Diagnosis::NotConjugateClosed { id: c.id });
        }
    }
    if let Some(r) = neg.iter().find(|c| c.is_real) {
        if neg.len() != 1 || r.degree != -2 {
            return Err(Diagnosis::RealNegativeCurve {
                id: r.id,
                degree: r.degree,
                count: neg.len(),
            });
        }
        return Ok(NegativeCurves::RealMinusTwo(*r));
    }
    let minus_two = neg.iter().filter(|c| c.degree == -2).count();
    if minus_two > 0 {
        if minus_two != neg.len() {
            return Err(Diagnosis::MixedNegativeDegrees);
        }
        if minus_two != 2 {
            return Err(Diagnosis::MinusTwoNotAPair { count: minus_two });
        }
        let (a, b) = (neg[0], neg[1]);
        let product = class_of(cycle, a.id).dot(class_of(cycle, b.id));
        if product != 0 {
            return Err(Diagnosis::MinusTwoPairMeets {
                a: a.id,
                b: b.id,
                product,
            });
        }
        return Ok(NegativeCurves::PairMinusTwo(a, b));
    }
    if !matches!(neg.len(), 2 | 4 | 6) {
        return Err(Diagnosis::MinusOneCount { count: neg.len() });
    }
    Ok(NegativeCurves::PairsMinusOne(neg))
}

fn class_of(cycle: &AnticanonicalCycle, id: ComponentId) -> &crate::picard::DivisorClass {
    &cycle
        .component(id)
        .expect("negative curve is a cycle component")
        .class
}

/// Classifies a model. Type III schedules that start at the two nodes are
/// classified on the elementary transform, with component names mapped back.
pub fn classify(model: &TwistorModel) -> Result<ClassificationReport, Diagnosis> {
    let schedule = &model.schedule;
    if schedule.initial == InitialType::III {
        if starts_with_nodes(schedule) {
            let t = TwistorModel::new(
                elementary_transform(schedule)?,
                model.torsion,
                model.smooth_variant,
            )?;
            return classify(&t).map(|r| r.map_ids(untransform_component));
        }
        let has_node = schedule
            .steps
            .iter()
            .any(|s| matches!(s, Location::Node { .. }));
        if !has_node && !is_nef(&model.cycle) {
            return Err(Diagnosis::TypeIIINotNef);
        }
    }
    classify_cycle(&model.cycle, model.torsion, model.smooth_variant)
}

/// Classification from the cycle alone.
pub fn classify_cycle(
    cycle: &AnticanonicalCycle,
    torsion: Option<TorsionSpec>,
    smooth_variant: bool,
) -> Result<ClassificationReport, Diagnosis> {
    let degrees = cycle.anticanonical_degrees();
    let m = cycle.len();
    let shape = negative_curves(cycle)?;
    if smooth_variant && shape.case() != Case::Nef {
        return Err(Diagnosis::SmoothVariantNotNef);
    }
    let report = match &shape {
        NegativeCurves::None => {
            let tau = cycle::torsion_tau(torsion.ok_or(Diagnosis::MissingTorsion)?);
            // h¹(F) = h⁰(N) is 1 exactly when N is trivial.
            let h1 = u64::from(tau == Tau::Finite(1));
            let h0 = h0_pluri_fundamental(1, h1);
            let dim = h0 - 1;
            ClassificationReport {
                nef: true,
                negative_curves: Vec::new(),
                case: Case::Nef,
                h0_fundamental: h0,
                dim_fundamental_system: dim,
                base_locus: if dim == 2 {
                    BaseLocus::Free
                } else {
                    BaseLocus::AnticanonicalCurve
                },
                degree_one_count: match (dim, smooth_variant) {
                    (1, true) => DegreeOneCount::Finite(0),
                    (1, false) => DegreeOneCount::Finite(m as u64),
                    _ => DegreeOneCount::Unknown,
                },
                algebraic_dimension: if tau.is_finite() { 2 } else { 1 },
                lebrun: false,
                dim_minus2ks: None,
                dim_antican_z: None,
                tau: Some(tau),
                cycle_length: m,
                never_nef_and_big: true,
            }
        }
        NegativeCurves::RealMinusTwo(c) => ClassificationReport {
            nef: false,
            negative_curves: shape.curves(),
            case: Case::RealMinusTwo,
            h0_fundamental: h0_pluri_fundamental(1, 1),
            dim_fundamental_system: 2,
            base_locus: BaseLocus::RealCurve(c.id),
            degree_one_count: DegreeOneCount::Finite(0),
            algebraic_dimension: 3,
            lebrun: false,
            dim_minus2ks: None,
            dim_antican_z: None,
            tau: None,
            cycle_length: m,
            never_nef_and_big: true,
        },
        NegativeCurves::PairMinusTwo(a, b) => ClassificationReport {
            nef: false,
            negative_curves: shape.curves(),
            case: Case::PairMinusTwo,
            h0_fundamental: h0_pluri_fundamental(1, 2),
            dim_fundamental_system: 3,
            base_locus: BaseLocus::ConjugatePair(a.id, b.id),
            degree_one_count: DegreeOneCount::Infinite,
            algebraic_dimension: 3,
            lebrun: true,
            dim_minus2ks: None,
            dim_antican_z: None,
            tau: None,
            cycle_length: m,
            never_nef_and_big: true,
        },
        NegativeCurves::PairsMinusOne(_) => {
            let dim2k = pairs_minus_one_structure(cycle, &degrees)?;
            ClassificationReport {
                nef: false,
                negative_curves: shape.curves(),
                case: Case::PairsMinusOne,
                h0_fundamental: h0_pluri_fundamental(1, 0),
                dim_fundamental_system: 1,
                base_locus: BaseLocus::AnticanonicalCurve,
                degree_one_count: DegreeOneCount::Finite(m as u64),
                algebraic_dimension: 3,
                lebrun: false,
                dim_minus2ks: Some(dim2k),
                dim_antican_z: Some(2 + dim2k),
                tau: None,
                cycle_length: m,
                never_nef_and_big: true,
            }
        }
    };
    check_report(&report, &shape)?;
    Ok(report)
}

/// Structural claims for case (c); returns `dim|−2K_S|`.
fn pairs_minus_one_structure(
    cycle: &AnticanonicalCycle,
    degrees: &[i64],
) -> Result<u64, Diagnosis> {
    let m = degrees.len();
    let ids: Vec<ComponentId> = cycle.components().iter().map(|c| c.id).collect();
    let positive: Vec<usize> = (0..m).filter(|&i| degrees[i] > 0).collect();
    for (k, &i) in positive.iter().enumerate() {
        for &j in &positive[k + 1..] {
            if cycle.adjacent(i, j) {
                return Err(Diagnosis::PositiveCurvesMeet {
                    a: ids[i],
                    b: ids[j],
                });
            }
        }
    }
    for arc in cycle::arcs_avoiding(degrees, |l| l > 0) {
        let count = arc.iter().filter(|&&i| degrees[i] < 0).count();
        if count != 1 {
            return Err(Diagnosis::ArcNegativeCount {
                arc: arc.iter().map(|&i| ids[i]).collect(),
                count,
            });
        }
    }
    let expected = positive.len() as u64;
    let doubled: Vec<i64> = degrees.iter().map(|l| 2 * l).collect();
    let bundle = CycleLineBundle::new(doubled).map_err(Diagnosis::CycleCohomology)?;
    let found = cycle::h0_formula(&bundle).ok();
    if found != Some(expected) {
        return Err(Diagnosis::MinusTwoKMismatch { expected, found });
    }
    Ok(expected)
}

/// Post-conditions every report must satisfy.
pub fn check_report(
    r: &ClassificationReport,
    shape: &NegativeCurves,
) -> Result<(), Diagnosis> {
    let fail = |what| Err(Diagnosis::TheoremViolation(what));
    let a = r.algebraic_dimension;
    let dim = r.dim_fundamental_system;
    let tau_finite = r.tau.is_some_and(Tau::is_finite);
    let free = r.base_locus == BaseLocus::Free;
    let non_real_minus_two = r
        .negative_curves
        .iter()
        .any(|c| !c.is_real && c.degree == -2);
    if r.nef != r.negative_curves.is_empty() || shape.case() != r.case {
        return fail("negative curves are finitely many and in one of the three cases");
    }
    let expected_a = match (r.nef, tau_finite) {
        (false, _) => 3,
        (true, true) => 2,
        (true, false) => 1,
    };
    if a != expected_a {
        return fail("a(Z) = 3, 2, 1 according to non-nef, nef with finite tau, nef otherwise");
    }
    if (a == 3) != !r.nef || (a == 3) != !r.negative_curves.is_empty() {
        return fail("a(Z) = 3 iff F is not nef iff a negative curve exists");
    }
    if r.lebrun != (dim == 3) || r.lebrun != non_real_minus_two {
        return fail("LeBrun iff dim|F| = 3 iff a non-real curve of degree -2 exists");
    }
    if u64::from(a) < dim {
        return fail("a(Z) >= dim|F|");
    }
    if dim >= 2 && !((a == 2) == r.nef && r.nef == free) {
        return fail("for dim|F| >= 2: a(Z) = 2 iff nef iff base point free");
    }
    if free && a != 2 {
        return fail("base point free implies a(Z) = 2");
    }
    if r.nef && a > 2 {
        return fail("F is never nef and big");
    }
    if r.h0_fundamental != dim + 1 || r.h0_fundamental < 2 {
        return fail("h0(F) = dim|F| + 1 with h1(F) >= 0");
    }
    if r.case == Case::PairsMinusOne {
        let count = r.negative_curves.len();
        let length_ok = matches!(r.degree_one_count, DegreeOneCount::Finite(k)
            if k == r.cycle_length as u64 && matches!(k, 4 | 6 | 8 | 10 | 12));
        if !matches!(count, 2 | 4 | 6) || !length_ok || r.dim_minus2ks.is_none_or(|d| d < 2) {
            return fail("case (c): 2, 4 or 6 curves, one degree-one divisor per component, dim|-2K_S| >= 2");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::Location;
    use alloc::vec;
    use ComponentId::*;

    fn smooth(c: ComponentId) -> Location {
        Location::Smooth { component: c }
    }

    fn model(initial: InitialType, steps: Vec<Location>, t: Option<TorsionSpec>) -> TwistorModel {
        TwistorModel::new(BlowupSchedule::new(initial, steps), t, false).unwrap()
    }

    #[test]
    fn case_a() {
        let m = model(InitialType::II, vec![smooth(C0); 4], None);
        let r = classify(&m).unwrap();
        assert_eq!(r.case, Case::RealMinusTwo);
        assert_eq!((r.h0_fundamental, r.dim_fundamental_system), (3, 2));
        assert_eq!(r.base_locus, BaseLocus::RealCurve(C0));
        assert_eq!(r.degree_one_count, DegreeOneCount::Finite(0));
        assert_eq!(r.algebraic_dimension, 3);
    }

    #[test]
    fn case_b() {
        let m = model(InitialType::I, vec![smooth(G); 4], None);
        let r = classify(&m).unwrap();
        assert_eq!(r.case, Case::PairMinusTwo);
        assert!(r.lebrun);
        assert_eq!(r.base_locus, BaseLocus::ConjugatePair(G, Gbar));
        assert_eq!(r.degree_one_count, DegreeOneCount::Infinite);
    }

    #[test]
    fn nef_branch_needs_torsion() {
        let steps = vec![smooth(F), smooth(F), smooth(G), smooth(G)];
        let m = model(InitialType::I, steps.clone(), None);
        assert_eq!(classify(&m), Err(Diagnosis::MissingTorsion));
        let m = model(InitialType::I, steps.clone(), Some(TorsionSpec::Finite(1)));
        let r = classify(&m).unwrap();
        assert_eq!((r.h0_fundamental, r.algebraic_dimension), (3, 2));
        assert_eq!(r.base_locus, BaseLocus::Free);
        assert_eq!(r.degree_one_count, DegreeOneCount::Unknown);
        let m = model(InitialType::I, steps, Some(TorsionSpec::NonTorsion));
        let r = classify(&m).unwrap();
        assert_eq!((r.h0_fundamental, r.algebraic_dimension), (2, 1));
        assert_eq!(r.degree_one_count, DegreeOneCount::Finite(4));
    }

    #[test]
    fn smooth_variant() {
        let steps = vec![smooth(F), smooth(F), smooth(G), smooth(G)];
        let s = BlowupSchedule::new(InitialType::I, steps);
        let m = TwistorModel::new(s, Some(TorsionSpec::Finite(2)), true).unwrap();
        let r = classify(&m).unwrap();
        assert_eq!(r.degree_one_count, DegreeOneCount::Finite(0));
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(G); 4]);
        let m = TwistorModel::new(s, None, true).unwrap();
        assert_eq!(classify(&m), Err(Diagnosis::SmoothVariantNotNef));
    }

    #[test]
    fn four_cycle_with_minus_one_curves() {
        // Degrees (1,-1,1,-1) around F, G, Fbar, Gbar.
        let m = model(InitialType::I, vec![smooth(G), smooth(G), smooth(G), smooth(F)], None);
        let r = classify(&m).unwrap();
        assert_eq!(r.case, Case::PairsMinusOne);
        assert_eq!(r.dim_minus2ks, Some(2));
        assert_eq!(r.dim_antican_z, Some(4));
        assert_eq!(r.degree_one_count, DegreeOneCount::Finite(4));
    }

    #[test]
    fn wrong_pair_count() {
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(G); 3]);
        assert_eq!(
            TwistorModel::new(s, None, false),
            Err(Diagnosis::WrongPairCount { pairs: 3 })
        );
    }

    #[test]
    fn pluri_fundamental() {
        assert_eq!(h0_pluri_fundamental(1, 0), 2);
        assert_eq!(h0_pluri_fundamental(1, 1), 3);
        assert_eq!(h0_pluri_fundamental(1, 2), 4);
    }
}
