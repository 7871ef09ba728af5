//! Blow-up schedules and the anticanonical cycles they realize.
//!
//! A schedule starts from a real reducible member of `|O(2,2)|` on `P¹×P¹` and
//! blows up `n` conjugate pairs of points lying on the (strict transform of
//! the) curve. Only incidence is recorded: which component or node carries
//! each point. The conjugate point is always derived, never supplied.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::lattice::{conjugate_point, DivisorClass, SurfaceLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InitialType {
    /// `F + G + F̄ + Ḡ`: non-real fibres `F, F̄` and lines `G, Ḡ`, in cyclic
    /// order `F – G – F̄ – Ḡ`.
    I,
    /// `F + C₀`: a real fibre and a real smooth curve of type (2,1), meeting in
    /// a conjugate pair of nodes.
    II,
    /// `A + Ā`: two conjugate curves of type (1,1) meeting in a conjugate pair
    /// of nodes.
    III,
}

impl InitialType {
    pub fn components(self) -> &'static [ComponentId] {
        use ComponentId::*;
        match self {
            Self::I => &[F, G, Fbar, Gbar],
            Self::II => &[F, C0],
            Self::III => &[A, Abar],
        }
    }

    fn initial_class(self, id: ComponentId, lattice: &SurfaceLattice) -> DivisorClass {
        use ComponentId::*;
        let (l, f) = (lattice.line(), lattice.fibre());
        match (self, id) {
            (Self::I, F | Fbar) => f,
            (Self::I, G | Gbar) => l,
            (Self::II, F) => f,
            (Self::II, C0) => &(2 * &l) + &f,
            (Self::III, A | Abar) => &l + &f,
            _ => unreachable!("component {id} does not belong to type {self}"),
        }
    }

    /// Image of a component under the real structure.
    pub fn conjugate(self, id: ComponentId) -> ComponentId {
        use ComponentId::*;
        match id {
            F if self == Self::II => F,
            F => Fbar,
            Fbar => F,
            G => Gbar,
            Gbar => G,
            C0 => C0,
            A => Abar,
            Abar => A,
            Exceptional(i) => Exceptional(conjugate_point(i)),
        }
    }

    /// The real fibre of type II; no blown-up point may lie on it.
    pub fn is_real_fibre(self, id: ComponentId) -> bool {
        self == Self::II && id == ComponentId::F
    }

    pub fn has_component(self, id: ComponentId) -> bool {
        matches!(id, ComponentId::Exceptional(_)) || self.components().contains(&id)
    }
}

impl fmt::Display for InitialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "I",
            Self::II => "II",
            Self::III => "III",
        })
    }
}

impl FromStr for InitialType {
    type Err = ParseIdError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(Self::I),
            "II" => Ok(Self::II),
            "III" => Ok(Self::III),
            _ => Err(ParseIdError(s.into())),
        }
    }
}

/// Name of a cycle component. Initial components keep their names through
/// every blow-up; the exceptional curve of point `i` is `Exceptional(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentId {
    F,
    Fbar,
    G,
    Gbar,
    C0,
    A,
    Abar,
    Exceptional(usize),
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::F => f.write_str("F"),
            Self::Fbar => f.write_str("Fbar"),
            Self::G => f.write_str("G"),
            Self::Gbar => f.write_str("Gbar"),
            Self::C0 => f.write_str("C0"),
            Self::A => f.write_str("A"),
            Self::Abar => f.write_str("Abar"),
            Self::Exceptional(i) => write!(f, "E{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseIdError(pub String);

impl fmt::Display for ParseIdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown name `{}`", self.0)
    }
}

impl core::error::Error for ParseIdError {}

impl FromStr for ComponentId {
    type Err = ParseIdError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "F" => Self::F,
            "Fbar" => Self::Fbar,
            "G" => Self::G,
            "Gbar" => Self::Gbar,
            "C0" => Self::C0,
            "A" => Self::A,
            "Abar" => Self::Abar,
            _ => match s.strip_prefix('E').and_then(|d| d.parse::<usize>().ok()) {
                Some(i) if i >= 1 && !s[1..].starts_with('0') => Self::Exceptional(i),
                _ => return Err(ParseIdError(s.into())),
            },
        })
    }
}

/// Where the first point of a conjugate pair is blown up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    /// A general point of a component that is not a node.
    Smooth { component: ComponentId },
    /// The node shared by two adjacent components.
    Node {
        components: (ComponentId, ComponentId),
    },
    /// A point on the exceptional curve of the first point of an earlier pair
    /// (`over_pair` is 1-based). If that exceptional curve is a cycle
    /// component, `None` picks a general point of it and `Some(c)` its node
    /// with the neighbour `c`. Otherwise the only admissible point is where it
    /// meets the component `c` that carried the earlier point.
    InfinitelyNear {
        over_pair: usize,
        on_strict_transform: Option<ComponentId>,
    },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Smooth { component } => write!(f, "smooth({component})"),
            Self::Node {
                components: (a, b),
            } => write!(f, "node({a},{b})"),
            Self::InfinitelyNear {
                over_pair,
                on_strict_transform: None,
            } => write!(f, "near({over_pair})"),
            Self::InfinitelyNear {
                over_pair,
                on_strict_transform: Some(c),
            } => write!(f, "near({over_pair},{c})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlowupSchedule {
    pub initial: InitialType,
    pub steps: Vec<Location>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizeError {
    /// A point on the real fibre of a type II configuration.
    RealFibre { step: usize },
    UnknownComponent { step: usize, id: ComponentId },
    /// Component name not used by this initial type.
    ForeignComponent { step: usize, id: ComponentId },
    NotAdjacent {
        step: usize,
        a: ComponentId,
        b: ComponentId,
    },
    /// A node whose conjugate is itself; impossible without real points.
    SelfConjugateNode { step: usize },
    /// `over_pair` must name an earlier step.
    ForwardReference { step: usize, over_pair: usize },
    /// The requested point does not lie on the anticanonical curve.
    NotOnCycle { step: usize },
    /// Exceptional components are addressed with `InfinitelyNear`.
    ExceptionalNeedsInfinitelyNear { step: usize, id: ComponentId },
    TooManySteps { step: usize },
    /// The realized cycle violates a structural invariant.
    Defect(CycleDefect),
}

impl fmt::Display for RealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RealFibre { step } => {
                write!(f, "step {step}: blown-up point lies on the real fibre F")
            }
            Self::UnknownComponent { step, id } => {
                write!(f, "step {step}: component {id} is not on the current cycle")
            }
            Self::ForeignComponent { step, id } => {
                write!(f, "step {step}: component {id} does not belong to this initial type")
            }
            Self::NotAdjacent { step, a, b } => {
                write!(f, "step {step}: components {a} and {b} are not adjacent")
            }
            Self::SelfConjugateNode { step } => {
                write!(f, "step {step}: node is its own conjugate")
            }
            Self::ForwardReference { step, over_pair } => {
                write!(f, "step {step}: over_pair {over_pair} is not an earlier step")
            }
            Self::NotOnCycle { step } => {
                write!(f, "step {step}: point does not lie on the anticanonical curve")
            }
            Self::ExceptionalNeedsInfinitelyNear { step, id } => {
                write!(f, "step {step}: exceptional component {id} must be addressed as infinitely near")
            }
            Self::TooManySteps { step } => write!(f, "step {step}: lattice has no room"),
            Self::Defect(d) => write!(f, "realized cycle is malformed: {d}"),
        }
    }
}

impl core::error::Error for RealizeError {}

impl BlowupSchedule {
    pub fn new(initial: InitialType, steps: Vec<Location>) -> Self {
        Self { initial, steps }
    }

    pub fn pairs(&self) -> usize {
        self.steps.len()
    }

    pub fn lattice(&self) -> SurfaceLattice {
        SurfaceLattice::new(self.pairs())
    }

    /// Replays the blow-ups on the initial cycle.
    pub fn realize(&self) -> Result<AnticanonicalCycle, RealizeError> {
        let mut r = Realizer::new(self.initial, self.lattice());
        for loc in &self.steps {
            r.apply(loc)?;
        }
        r.finish()
    }
}

impl fmt::Display for BlowupSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.initial)?;
        for (i, s) in self.steps.iter().enumerate() {
            let sep = if i == 0 { "" } else { ";" };
            write!(f, "{sep}{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Action {
    Smooth(ComponentId),
    Node(ComponentId, ComponentId),
}

/// Incremental realization state; also drives the enumerator.
#[derive(Clone, Debug)]
pub(crate) struct Realizer {
    initial: InitialType,
    lattice: SurfaceLattice,
    comps: Vec<(ComponentId, DivisorClass)>,
    /// For each point (0-based), the cycle component its exceptional curve
    /// meets when that curve is not itself a cycle component.
    attached: Vec<Option<ComponentId>>,
    done: usize,
}

impl Realizer {
    pub(crate) fn new(initial: InitialType, lattice: SurfaceLattice) -> Self {
        let comps = initial
            .components()
            .iter()
            .map(|&id| (id, initial.initial_class(id, &lattice)))
            .collect();
        Self {
            initial,
            lattice,
            comps,
            attached: alloc::vec![None; lattice.points()],
            done: 0,
        }
    }

    fn position(&self, id: ComponentId) -> Option<usize> {
        self.comps.iter().position(|(c, _)| *c == id)
    }

    fn contains(&self, id: ComponentId) -> bool {
        self.position(id).is_some()
    }

    fn neighbours(&self, id: ComponentId) -> Vec<ComponentId> {
        let m = self.comps.len();
        let Some(i) = self.position(id) else {
            return Vec::new();
        };
        let mut out = alloc::vec![self.comps[(i + m - 1) % m].0, self.comps[(i + 1) % m].0];
        out.dedup();
        if out.len() == 2 && out[0] == out[1] {
            out.pop();
        }
        out
    }

    fn meet(&self, a: ComponentId, b: ComponentId) -> bool {
        a != b && self.neighbours(a).contains(&b)
    }

    fn check_known(&self, step: usize, id: ComponentId) -> Result<(), RealizeError> {
        if !self.initial.has_component(id) {
            return Err(RealizeError::ForeignComponent { step, id });
        }
        if !self.contains(id) {
            return Err(RealizeError::UnknownComponent { step, id });
        }
        Ok(())
    }

    /// Turns a location into an action on the current cycle, plus the earlier
    /// point whose exceptional curve is separated from the cycle by it.
    fn resolve(&self, step: usize, loc: &Location) -> Result<(Action, Option<usize>), RealizeError> {
        let exceptional_guard = |id: ComponentId| match id {
            ComponentId::Exceptional(_) => {
                Err(RealizeError::ExceptionalNeedsInfinitelyNear { step, id })
            }
            _ => Ok(()),
        };
        match *loc {
            Location::Smooth { component } => {
                self.check_known(step, component)?;
                exceptional_guard(component)?;
                Ok((Action::Smooth(component), None))
            }
            Location::Node { components: (a, b) } => {
                self.check_known(step, a)?;
                self.check_known(step, b)?;
                exceptional_guard(a)?;
                exceptional_guard(b)?;
                if !self.meet(a, b) {
                    return Err(RealizeError::NotAdjacent { step, a, b });
                }
                Ok((Action::Node(a, b), None))
            }
            Location::InfinitelyNear {
                over_pair,
                on_strict_transform,
            } => {
                if over_pair == 0 || over_pair >= step {
                    return Err(RealizeError::ForwardReference { step, over_pair });
                }
                let base = 2 * over_pair - 1;
                let e = ComponentId::Exceptional(base);
                if self.contains(e) {
                    return Ok(match on_strict_transform {
                        None => (Action::Smooth(e), None),
                        Some(c) => {
                            self.check_known(step, c)?;
                            (Action::Node(e, c), None)
                        }
                    });
                }
                match (self.attached[base - 1], on_strict_transform) {
                    (Some(host), Some(c)) if host == c => Ok((Action::Smooth(c), Some(base))),
                    _ => Err(RealizeError::NotOnCycle { step }),
                }
            }
        }
    }

    fn touches_real_fibre(&self, action: Action) -> bool {
        match action {
            Action::Smooth(c) => self.initial.is_real_fibre(c),
            Action::Node(a, b) => self.initial.is_real_fibre(a) || self.initial.is_real_fibre(b),
        }
    }

    fn conjugate_action(&self, action: Action) -> Action {
        let conj = |c| self.initial.conjugate(c);
        match action {
            Action::Smooth(c) => Action::Smooth(conj(c)),
            Action::Node(a, b) => Action::Node(conj(a), conj(b)),
        }
    }

    fn perform(&mut self, step: usize, action: Action, point: usize) -> Result<(), RealizeError> {
        let e = self.lattice.exceptional(point);
        match action {
            Action::Smooth(c) => {
                let i = self
                    .position(c)
                    .ok_or(RealizeError::UnknownComponent { step, id: c })?;
                self.comps[i].1 -= &e;
                self.attached[point - 1] = Some(c);
            }
            Action::Node(a, b) => {
                let m = self.comps.len();
                let i = (0..m)
                    .find(|&i| {
                        let (x, y) = (self.comps[i].0, self.comps[(i + 1) % m].0);
                        (x == a && y == b) || (x == b && y == a)
                    })
                    .ok_or(RealizeError::NotAdjacent { step, a, b })?;
                let j = (i + 1) % m;
                self.comps[i].1 -= &e;
                self.comps[j].1 -= &e;
                self.comps.insert(i + 1, (ComponentId::Exceptional(point), e));
            }
        }
        Ok(())
    }

    pub(crate) fn apply(&mut self, loc: &Location) -> Result<(), RealizeError> {
        let step = self.done + 1;
        if step > self.lattice.pairs() {
            return Err(RealizeError::TooManySteps { step });
        }
        let (action, detach) = self.resolve(step, loc)?;
        let conj = self.conjugate_action(action);
        if self.touches_real_fibre(action) {
            return Err(RealizeError::RealFibre { step });
        }
        if let (Action::Node(a, b), Action::Node(c, d)) = (action, conj) {
            let same = (a == c && b == d) || (a == d && b == c);
            if same && self.comps.len() > 2 {
                return Err(RealizeError::SelfConjugateNode { step });
            }
        }
        let (p, q) = (2 * step - 1, 2 * step);
        self.perform(step, action, p)?;
        self.perform(step, conj, q)?;
        if let Some(base) = detach {
            self.attached[base - 1] = None;
            self.attached[conjugate_point(base) - 1] = None;
        }
        self.done = step;
        Ok(())
    }

    /// Every admissible location for the next step, with the conjugate
    /// duplicates of `Smooth` and `Node` removed.
    pub(crate) fn candidates(&self) -> Vec<Location> {
        let step = self.done + 1;
        let mut out = Vec::new();
        let conj = |c| self.initial.conjugate(c);
        let plain = |c: &ComponentId| !matches!(c, ComponentId::Exceptional(_));
        for (c, _) in &self.comps {
            if plain(c) && !self.initial.is_real_fibre(*c) && *c <= conj(*c) {
                out.push(Location::Smooth { component: *c });
            }
        }
        let m = self.comps.len();
        let mut nodes: Vec<(ComponentId, ComponentId)> = Vec::new();
        for i in 0..m {
            let (a, b) = (self.comps[i].0, self.comps[(i + 1) % m].0);
            if !(plain(&a) && plain(&b)) {
                continue;
            }
            if self.initial.is_real_fibre(a) || self.initial.is_real_fibre(b) {
                continue;
            }
            let key = if a <= b { (a, b) } else { (b, a) };
            let (ca, cb) = (conj(a), conj(b));
            let ckey = if ca <= cb { (ca, cb) } else { (cb, ca) };
            if !nodes.contains(&key) && !nodes.contains(&ckey) {
                nodes.push(key);
            }
        }
        out.extend(nodes.into_iter().map(|components| Location::Node { components }));
        for j in 1..step {
            let base = 2 * j - 1;
            let e = ComponentId::Exceptional(base);
            if self.contains(e) {
                out.push(Location::InfinitelyNear {
                    over_pair: j,
                    on_strict_transform: None,
                });
                for c in self.neighbours(e) {
                    if !self.initial.is_real_fibre(c) {
                        out.push(Location::InfinitelyNear {
                            over_pair: j,
                            on_strict_transform: Some(c),
                        });
                    }
                }
            } else if let Some(host) = self.attached[base - 1] {
                out.push(Location::InfinitelyNear {
                    over_pair: j,
                    on_strict_transform: Some(host),
                });
            }
        }
        out
    }

    pub(crate) fn finish(self) -> Result<AnticanonicalCycle, RealizeError> {
        let initial = self.initial;
        let components = self
            .comps
            .into_iter()
            .map(|(id, class)| {
                let conjugate = initial.conjugate(id);
                CycleComponent {
                    id,
                    class,
                    is_real: conjugate == id,
                    conjugate,
                }
            })
            .collect();
        AnticanonicalCycle::new(self.lattice, components).map_err(RealizeError::Defect)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleComponent {
    pub id: ComponentId,
    pub class: DivisorClass,
    pub is_real: bool,
    pub conjugate: ComponentId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleDefect {
    TooShort,
    RankMismatch,
    SumNotAnticanonical,
    Adjacency {
        a: ComponentId,
        b: ComponentId,
        product: i64,
    },
    Genus { id: ComponentId, genus: i64 },
    DuplicateId(ComponentId),
    Conjugation(ComponentId),
}

impl fmt::Display for CycleDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooShort => f.write_str("a cycle needs at least two components"),
            Self::RankMismatch => f.write_str("component classes live in different lattices"),
            Self::SumNotAnticanonical => f.write_str("components do not sum to -K_S"),
            Self::Adjacency { a, b, product } => {
                write!(f, "{a}.{b} = {product} contradicts the cycle adjacency")
            }
            Self::Genus { id, genus } => write!(f, "{id} has arithmetic genus {genus}"),
            Self::DuplicateId(id) => write!(f, "component {id} appears twice"),
            Self::Conjugation(id) => write!(f, "real structure is inconsistent at {id}"),
        }
    }
}

impl core::error::Error for CycleDefect {}

/// A reduced member `C = ΣCᵢ` of `|−K_S|` that is a cycle of smooth rational
/// curves, listed in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnticanonicalCycle {
    lattice: SurfaceLattice,
    components: Vec<CycleComponent>,
}

impl AnticanonicalCycle {
    /// Validates the cycle structure: classes sum to `−K_S`, consecutive
    /// components meet once (twice when `m = 2`) and others not at all,
    /// every component is rational, and the real structure permutes the
    /// components compatibly with classes and adjacency.
    pub fn new(
        lattice: SurfaceLattice,
        components: Vec<CycleComponent>,
    ) -> Result<Self, CycleDefect> {
        let m = components.len();
        if m < 2 {
            return Err(CycleDefect::TooShort);
        }
        if components
            .iter()
            .any(|c| c.class.exceptional.len() != lattice.points())
        {
            return Err(CycleDefect::RankMismatch);
        }
        for (i, c) in components.iter().enumerate() {
            if components[..i].iter().any(|d| d.id == c.id) {
                return Err(CycleDefect::DuplicateId(c.id));
            }
        }
        let mut sum = lattice.zero();
        for c in &components {
            sum += &c.class;
        }
        if sum != lattice.anticanonical_class() {
            return Err(CycleDefect::SumNotAnticanonical);
        }
        for i in 0..m {
            for j in i + 1..m {
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                let expected = match (m, adjacent) {
                    (2, _) => 2,
                    (_, true) => 1,
                    (_, false) => 0,
                };
                let product = components[i].class.dot(&components[j].class);
                if product != expected {
                    return Err(CycleDefect::Adjacency {
                        a: components[i].id,
                        b: components[j].id,
                        product,
                    });
                }
            }
        }
        for c in &components {
            let genus = c.class.adjunction_genus().unwrap_or(-1);
            if genus != 0 {
                return Err(CycleDefect::Genus { id: c.id, genus });
            }
        }
        let pos = |id: ComponentId| components.iter().position(|c| c.id == id);
        for (i, c) in components.iter().enumerate() {
            let Some(j) = pos(c.conjugate) else {
                return Err(CycleDefect::Conjugation(c.id));
            };
            let back = &components[j];
            let consistent = back.conjugate == c.id
                && c.is_real == (c.conjugate == c.id)
                && back.class == c.class.real_involution();
            if !consistent {
                return Err(CycleDefect::Conjugation(c.id));
            }
            // The involution maps neighbours to neighbours.
            let next = &components[(i + 1) % m];
            let Some(k) = pos(next.conjugate) else {
                return Err(CycleDefect::Conjugation(next.id));
            };
            let d = (j + m - k) % m;
            if !(d == 1 || d == m - 1) {
                return Err(CycleDefect::Conjugation(c.id));
            }
        }
        Ok(Self {
            lattice,
            components,
        })
    }

    pub fn lattice(&self) -> SurfaceLattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[CycleComponent] {
        &self.components
    }

    pub fn component(&self, id: ComponentId) -> Option<&CycleComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn position(&self, id: ComponentId) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    /// `Cᵢ·(−K_S)` for each component, in cyclic order.
    pub fn anticanonical_degrees(&self) -> Vec<i64> {
        self.components
            .iter()
            .map(|c| c.class.anticanonical_degree())
            .collect()
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.components
            .iter()
            .map(|c| c.class.self_intersection())
            .collect()
    }

    /// Whether components `i` and `j` (positions) meet.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let m = self.len();
        i != j && ((i + 1) % m == j || (j + 1) % m == i)
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut components = self.components.clone();
        let m = components.len();
        components.rotate_left(k % m);
        Self {
            lattice: self.lattice,
            components,
        }
    }

    pub fn reversed(&self) -> Self {
        let mut components = self.components.clone();
        components.reverse();
        Self {
            lattice: self.lattice,
            components,
        }
    }

    /// Lexicographically smallest sequence of `(Cᵢ², is_real)` over all
    /// rotations and reflections: the weighted cycle up to isomorphism.
    pub fn canonical_shape(&self) -> Vec<(i64, bool)> {
        let base: Vec<(i64, bool)> = self
            .components
            .iter()
            .map(|c| (c.class.self_intersection(), c.is_real))
            .collect();
        let m = base.len();
        let mut best: Option<Vec<(i64, bool)>> = None;
        for rev in [false, true] {
            for k in 0..m {
                let seq: Vec<(i64, bool)> = (0..m)
                    .map(|i| {
                        let idx = if rev { (k + m - i) % m } else { (k + i) % m };
                        base[idx]
                    })
                    .collect();
                if best.as_ref().is_none_or(|b| seq < *b) {
                    best = Some(seq);
                }
            }
        }
        best.unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use ComponentId::*;

    fn smooth(c: ComponentId) -> Location {
        Location::Smooth { component: c }
    }

    fn node(a: ComponentId, b: ComponentId) -> Location {
        Location::Node { components: (a, b) }
    }

    fn near(j: usize, c: Option<ComponentId>) -> Location {
        Location::InfinitelyNear {
            over_pair: j,
            on_strict_transform: c,
        }
    }

    #[test]
    fn ids_round_trip() {
        for id in [F, Fbar, G, Gbar, C0, A, Abar, Exceptional(7), Exceptional(12)] {
            assert_eq!(id.to_string().parse::<ComponentId>(), Ok(id));
        }
        assert!("E0".parse::<ComponentId>().is_err());
        assert!("E01".parse::<ComponentId>().is_err());
        assert!("X".parse::<ComponentId>().is_err());
    }

    #[test]
    fn type_i_single_node_pair() {
        let s = BlowupSchedule::new(InitialType::I, vec![node(F, G)]);
        let c = s.realize().unwrap();
        let ids: Vec<_> = c.components().iter().map(|c| c.id.to_string()).collect();
        assert_eq!(ids, ["F", "E1", "G", "Fbar", "E2", "Gbar"]);
        let classes: Vec<_> = c.components().iter().map(|c| c.class.to_string()).collect();
        assert_eq!(classes, ["f-E1", "E1", "l-E1", "f-E2", "E2", "l-E2"]);
        assert!(c.self_intersections().iter().all(|&s| s == -1));
    }

    #[test]
    fn type_i_all_minus_two() {
        let s = BlowupSchedule::new(
            InitialType::I,
            vec![smooth(F), smooth(F), smooth(G), smooth(G)],
        );
        let c = s.realize().unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.self_intersections(), vec![-2; 4]);
        assert_eq!(c.anticanonical_degrees(), vec![0; 4]);
    }

    #[test]
    fn type_ii_all_on_c0() {
        let s = BlowupSchedule::new(InitialType::II, vec![smooth(C0); 4]);
        let c = s.realize().unwrap();
        assert_eq!(c.components()[1].class.to_string(), "2l+f-E1-E2-E3-E4-E5-E6-E7-E8");
        assert_eq!(c.anticanonical_degrees(), vec![2, -2]);
        assert!(c.components().iter().all(|c| c.is_real));
    }

    #[test]
    fn real_fibre_rejected() {
        let s = BlowupSchedule::new(InitialType::II, vec![smooth(F)]);
        assert_eq!(s.realize(), Err(RealizeError::RealFibre { step: 1 }));
        let s = BlowupSchedule::new(InitialType::II, vec![node(F, C0)]);
        assert_eq!(s.realize(), Err(RealizeError::RealFibre { step: 1 }));
    }

    #[test]
    fn location_errors() {
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(C0)]);
        assert!(matches!(s.realize(), Err(RealizeError::ForeignComponent { .. })));
        let s = BlowupSchedule::new(InitialType::I, vec![node(F, Fbar)]);
        assert!(matches!(s.realize(), Err(RealizeError::NotAdjacent { .. })));
        let s = BlowupSchedule::new(InitialType::I, vec![near(1, None)]);
        assert!(matches!(s.realize(), Err(RealizeError::ForwardReference { .. })));
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(F), near(1, None)]);
        assert_eq!(s.realize(), Err(RealizeError::NotOnCycle { step: 2 }));
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(F), near(1, Some(G))]);
        assert_eq!(s.realize(), Err(RealizeError::NotOnCycle { step: 2 }));
        let s = BlowupSchedule::new(InitialType::I, vec![node(F, G), smooth(Exceptional(1))]);
        assert!(matches!(
            s.realize(),
            Err(RealizeError::ExceptionalNeedsInfinitelyNear { .. })
        ));
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(Exceptional(5))]);
        assert!(matches!(s.realize(), Err(RealizeError::UnknownComponent { .. })));
    }

    #[test]
    fn infinitely_near_on_smooth_blowup() {
        // Second pair at E1 ∩ F: same cycle classes as two general points.
        let s = BlowupSchedule::new(InitialType::I, vec![smooth(F), near(1, Some(F))]);
        let c = s.realize().unwrap();
        assert_eq!(c.components()[0].class.to_string(), "f-E1-E3");
        // E1 is now separated from the cycle.
        let s = BlowupSchedule::new(
            InitialType::I,
            vec![smooth(F), near(1, Some(F)), near(1, Some(F))],
        );
        assert_eq!(s.realize(), Err(RealizeError::NotOnCycle { step: 3 }));
        let s = BlowupSchedule::new(
            InitialType::I,
            vec![smooth(F), near(1, Some(F)), near(2, Some(F))],
        );
        assert!(s.realize().is_ok());
    }

    #[test]
    fn infinitely_near_on_exceptional_component() {
        let s = BlowupSchedule::new(
            InitialType::I,
            vec![node(F, G), node(G, Fbar), near(1, None), near(1, None)],
        );
        let c = s.realize().unwrap();
        assert_eq!(c.self_intersections(), vec![-2, -3, -2, -1, -2, -3, -2, -1]);
        let s = BlowupSchedule::new(InitialType::I, vec![node(F, G), near(1, Some(G))]);
        let c = s.realize().unwrap();
        let ids: Vec<_> = c.components().iter().map(|c| c.id.to_string()).collect();
        assert_eq!(ids, ["F", "E1", "E3", "G", "Fbar", "E2", "E4", "Gbar"]);
    }

    #[test]
    fn type_iii_nodes() {
        let s = BlowupSchedule::new(InitialType::III, vec![node(A, Abar)]);
        let c = s.realize().unwrap();
        let ids: Vec<_> = c.components().iter().map(|c| c.id.to_string()).collect();
        assert_eq!(ids, ["A", "E1", "Abar", "E2"]);
        assert_eq!(c.components()[0].class.to_string(), "l+f-E1-E2");
    }

    #[test]
    fn canonical_shape_is_dihedral_invariant() {
        let s = BlowupSchedule::new(
            InitialType::I,
            vec![node(F, G), smooth(G), smooth(F), near(1, None)],
        );
        let c = s.realize().unwrap();
        let shape = c.canonical_shape();
        for k in 0..c.len() {
            assert_eq!(c.rotated(k).canonical_shape(), shape);
            assert_eq!(c.rotated(k).reversed().canonical_shape(), shape);
        }
    }

    #[test]
    fn hand_built_cycle_validation() {
        let l = SurfaceLattice::new(0);
        let comp = |id, class: DivisorClass, conj| CycleComponent {
            id,
            class,
            is_real: false,
            conjugate: conj,
        };
        let good = vec![
            comp(F, l.fibre(), Fbar),
            comp(G, l.line(), Gbar),
            comp(Fbar, l.fibre(), F),
            comp(Gbar, l.line(), G),
        ];
        assert!(AnticanonicalCycle::new(l, good.clone()).is_ok());
        let mut swapped = good.clone();
        swapped.swap(1, 2);
        assert!(matches!(
            AnticanonicalCycle::new(l, swapped),
            Err(CycleDefect::Adjacency { .. })
        ));
        let mut wrong = good;
        wrong[0].conjugate = G;
        assert!(AnticanonicalCycle::new(l, wrong).is_err());
    }
}
