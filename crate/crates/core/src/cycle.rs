//! Line bundles on cycles of smooth rational curves.
//!
//! A cycle `C = C₁ + … + C_m` has nodes `Pᵢ = Cᵢ ∩ Cᵢ₊₁` (indices mod `m`).
//! A line bundle is determined by its degrees `lᵢ` on the components together
//! with a class in `Pic⁰(C) ≅ ℂ*`. The closed formula below needs only the
//! degrees; the oracle models the `ℂ*` part as gluing scalars and computes
//! `H⁰` as the kernel of the restriction-to-nodes map.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    /// A cycle needs at least two components.
    TooShort { m: usize },
    GluingLength { expected: usize, got: usize },
    ZeroGluing { node: usize },
    /// The formula needs `m ≥ 3`.
    FormulaNeedsThreeComponents { m: usize },
    /// The formula needs at least two components of negative degree.
    TooFewNegative { count: usize },
    /// A connected component of `C ∖ C₋` (listed by 1-based component
    /// indices) has no component of positive degree.
    ArcWithoutPositive { arc: Vec<usize> },
}

impl fmt::Display for CycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooShort { m } => write!(f, "a cycle needs at least 2 components, got {m}"),
            Self::GluingLength { expected, got } => {
                write!(f, "expected {expected} gluing scalars, got {got}")
            }
            Self::ZeroGluing { node } => write!(f, "gluing scalar at node {node} is zero"),
            Self::FormulaNeedsThreeComponents { m } => {
                write!(f, "hypothesis m >= 3 fails (m = {m})")
            }
            Self::TooFewNegative { count } => write!(
                f,
                "hypothesis |I-| >= 2 fails ({count} component(s) of negative degree)"
            ),
            Self::ArcWithoutPositive { arc } => {
                f.write_str("hypothesis fails: the connected component {")?;
                for (k, i) in arc.iter().enumerate() {
                    let sep = if k == 0 { "" } else { "," };
                    write!(f, "{sep}C{i}")?;
                }
                f.write_str("} of C \\ C- has no component of positive degree")
            }
        }
    }
}

impl core::error::Error for CycleError {}

/// Degrees `lᵢ = L·Cᵢ` in cyclic order, plus optional gluing scalars `gᵢ`
/// (one per node `Pᵢ`) consulted only by the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleLineBundle {
    degrees: Vec<i64>,
    gluing: Option<Vec<BigRational>>,
}

impl CycleLineBundle {
    pub fn new(degrees: Vec<i64>) -> Result<Self, CycleError> {
        if degrees.len() < 2 {
            return Err(CycleError::TooShort { m: degrees.len() });
        }
        Ok(Self {
            degrees,
            gluing: None,
        })
    }

    pub fn with_gluing(mut self, gluing: Vec<BigRational>) -> Result<Self, CycleError> {
        check_gluing(self.degrees.len(), &gluing)?;
        self.gluing = Some(gluing);
        Ok(self)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn gluing(&self) -> Option<&[BigRational]> {
        self.gluing.as_deref()
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

fn check_gluing(m: usize, gluing: &[BigRational]) -> Result<(), CycleError> {
    if gluing.len() != m {
        return Err(CycleError::GluingLength {
            expected: m,
            got: gluing.len(),
        });
    }
    match gluing.iter().position(Zero::is_zero) {
        Some(i) => Err(CycleError::ZeroGluing { node: i + 1 }),
        None => Ok(()),
    }
}

/// Maximal runs of consecutive components with `lᵢ ≥ 0`, i.e. the connected
/// components of `C ∖ C₋`, as 0-based index lists. Requires at least one
/// negative component.
pub(crate) fn nonnegative_arcs(degrees: &[i64]) -> Vec<Vec<usize>> {
    arcs_avoiding(degrees, |l| l < 0)
}

/// Maximal cyclic runs of indices whose degree fails `cut`. Requires at
/// least one index satisfying `cut`.
pub(crate) fn arcs_avoiding(degrees: &[i64], cut: impl Fn(i64) -> bool) -> Vec<Vec<usize>> {
    let m = degrees.len();
    let Some(start) = (0..m).find(|&i| cut(degrees[i])) else {
        return vec![(0..m).collect()];
    };
    let mut arcs = Vec::new();
    let mut current = Vec::new();
    for k in 1..=m {
        let i = (start + k) % m;
        if cut(degrees[i]) {
            if !current.is_empty() {
                arcs.push(core::mem::take(&mut current));
            }
        } else {
            current.push(i);
        }
    }
    arcs
}

/// `h⁰(C, L) = Σ_{i∈I₊} lᵢ − γ`, where `γ` counts the connected components
/// of `C ∖ C₋`. Valid when `m ≥ 3`, at least two components have negative
/// degree and every connected component of `C ∖ C₋` contains a component of
/// positive degree.
pub fn h0_formula(bundle: &CycleLineBundle) -> Result<u64, CycleError> {
    let d = bundle.degrees();
    let m = d.len();
    if m < 3 {
        return Err(CycleError::FormulaNeedsThreeComponents { m });
    }
    let negative = d.iter().filter(|&&l| l < 0).count();
    if negative < 2 {
        return Err(CycleError::TooFewNegative { count: negative });
    }
    let arcs = nonnegative_arcs(d);
    if let Some(arc) = arcs.iter().find(|a| a.iter().all(|&i| d[i] <= 0)) {
        return Err(CycleError::ArcWithoutPositive {
            arc: arc.iter().map(|i| i + 1).collect(),
        });
    }
    let positive: i64 = d.iter().filter(|&&l| l > 0).sum();
    // Each arc carries at least one unit of positive degree.
    Ok((positive - arcs.len() as i64) as u64)
}

/// `χ(C, L) = Σ(lᵢ + 1) − m = Σlᵢ`.
pub fn euler_char_cycle(bundle: &CycleLineBundle) -> i64 {
    bundle.degrees().iter().sum()
}

/// Where the two nodes of a component sit, as homogeneous coordinates on
/// `P¹`: `incoming` is `Pᵢ₋₁`, `outgoing` is `Pᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodePlacement {
    pub incoming: (BigRational, BigRational),
    pub outgoing: (BigRational, BigRational),
}

impl NodePlacement {
    /// `Pᵢ₋₁ = (1:0)`, `Pᵢ = (0:1)`.
    pub fn standard() -> Self {
        let (one, zero) = (BigRational::one(), BigRational::zero());
        Self {
            incoming: (one.clone(), zero.clone()),
            outgoing: (zero, one),
        }
    }

    fn is_degenerate(&self) -> bool {
        let (a, b) = &self.incoming;
        let (c, d) = &self.outgoing;
        (a * d - b * c).is_zero()
    }
}

/// Values of the monomials `s^k t^(l−k)`, `k = 0..=l`, at `(s:t)`.
fn monomials_at(l: i64, point: &(BigRational, BigRational)) -> Vec<BigRational> {
    if l < 0 {
        return Vec::new();
    }
    let (s, t) = point;
    (0..=l as u32)
        .map(|k| pow(s, k) * pow(t, l as u32 - k))
        .collect()
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// `dim ker ρ` for `ρ(s₁,…,s_m) = (sᵢ(Pᵢ) − gᵢ·sᵢ₊₁(Pᵢ))ᵢ`, computed exactly.
pub fn h0_with_gluing(
    degrees: &[i64],
    gluing: &[BigRational],
    placement: &[NodePlacement],
) -> Result<u64, CycleError> {
    let m = degrees.len();
    if m < 2 {
        return Err(CycleError::TooShort { m });
    }
    check_gluing(m, gluing)?;
    assert_eq!(placement.len(), m, "one placement per component");
    assert!(
        placement.iter().all(|p| !p.is_degenerate()),
        "node preimages on a component must be distinct"
    );
    let dims: Vec<usize> = degrees.iter().map(|&l| (l + 1).max(0) as usize).collect();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let cols: usize = dims.iter().sum();
    if cols == 0 {
        return Ok(0);
    }
    let rows: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let j = (i + 1) % m;
            let mut row = vec![BigRational::zero(); cols];
            for (k, v) in monomials_at(degrees[i], &placement[i].outgoing)
                .into_iter()
                .enumerate()
            {
                row[offsets[i] + k] += v;
            }
            for (k, v) in monomials_at(degrees[j], &placement[j].incoming)
                .into_iter()
                .enumerate()
            {
                row[offsets[j] + k] -= &gluing[i] * v;
            }
            row
        })
        .collect();
    let rank = IntMatrix::from_rational_rows(&rows).rank();
    Ok((cols - rank) as u64)
}

/// Result of the randomized oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    /// Minimum over the draws: the value for generic gluing.
    pub h0: u64,
    pub draws: Vec<u64>,
}

impl OracleOutcome {
    pub fn draws_agree(&self) -> bool {
        self.draws.windows(2).all(|w| w[0] == w[1])
    }
}

pub const ORACLE_DRAWS: usize = 3;

/// A nonzero rational `p/q` with `0 < |p| ≤ 9`, `1 ≤ q ≤ 9`.
pub(crate) fn random_scalar(rng: &mut ChaCha8Rng) -> BigRational {
    let p = (rng.next_u32() % 18) as i64;
    let p = if p < 9 { p - 9 } else { p - 8 };
    let q = (rng.next_u32() % 9) as i64 + 1;
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Brute-force `h⁰` with nodes at the standard placement. With explicit
/// gluing the computation is deterministic; otherwise three seeded gluing
/// draws are made and the minimum is reported.
pub fn h0_oracle(bundle: &CycleLineBundle, seed: u64) -> Result<OracleOutcome, CycleError> {
    let m = bundle.len();
    let placement = vec![NodePlacement::standard(); m];
    if let Some(g) = bundle.gluing() {
        let h = h0_with_gluing(bundle.degrees(), g, &placement)?;
        return Ok(OracleOutcome {
            h0: h,
            draws: vec![h],
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(ORACLE_DRAWS);
    for _ in 0..ORACLE_DRAWS {
        let g: Vec<BigRational> = (0..m).map(|_| random_scalar(&mut rng)).collect();
        draws.push(h0_with_gluing(bundle.degrees(), &g, &placement)?);
    }
    let h0 = draws.iter().copied().min().unwrap_or(0);
    Ok(OracleOutcome { h0, draws })
}

/// Order of `N = K_S⁻¹ ⊗ 𝒪_C` in `Pic(C)`. Not determined by the blow-up
/// combinatorics, so it is supplied with the model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionSpec {
    Finite(u64),
    NonTorsion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tau {
    Finite(u64),
    Infinite,
}

impl Tau {
    pub fn is_finite(self) -> bool {
        matches!(self, Self::Finite(_))
    }
}

impl fmt::Display for Tau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(k) => write!(f, "{k}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroTorsionOrder;

impl fmt::Display for ZeroTorsionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("torsion order must be at least 1")
    }
}

impl core::error::Error for ZeroTorsionOrder {}

impl TorsionSpec {
    pub fn finite(order: u64) -> Result<Self, ZeroTorsionOrder> {
        if order == 0 {
            Err(ZeroTorsionOrder)
        } else {
            Ok(Self::Finite(order))
        }
    }
}

pub fn torsion_tau(spec: TorsionSpec) -> Tau {
    match spec {
        TorsionSpec::Finite(k) => Tau::Finite(k),
        TorsionSpec::NonTorsion => Tau::Infinite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle(d: &[i64]) -> CycleLineBundle {
        CycleLineBundle::new(d.to_vec()).unwrap()
    }

    fn q(p: i64, r: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(r))
    }

    #[test]
    fn formula_examples() {
        assert_eq!(h0_formula(&bundle(&[1, -1, 1, -1])), Ok(0));
        assert_eq!(h0_formula(&bundle(&[2, -2, 2, -2])), Ok(2));
        assert_eq!(h0_formula(&bundle(&[0, -2, 0, 2, 0, -2, 0, 2])), Ok(2));
        assert_eq!(
            h0_formula(&bundle(&[2, -1, 0, -1])),
            Err(CycleError::ArcWithoutPositive { arc: vec![3] })
        );
    }

    #[test]
    fn formula_hypotheses_in_order() {
        assert_eq!(
            h0_formula(&bundle(&[1, -1])),
            Err(CycleError::FormulaNeedsThreeComponents { m: 2 })
        );
        assert_eq!(
            h0_formula(&bundle(&[2, 0, -2])),
            Err(CycleError::TooFewNegative { count: 1 })
        );
        assert!(CycleLineBundle::new(vec![3]).is_err());
    }

    #[test]
    fn arcs_wrap_around() {
        assert_eq!(
            nonnegative_arcs(&[1, -1, 0, 2, -1, 3]),
            vec![vec![2, 3], vec![5, 0]]
        );
        assert_eq!(nonnegative_arcs(&[-1, -1, 2]), vec![vec![2]]);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(h0_oracle(&bundle(&[1, -1, 1, -1]), 1).unwrap().h0, 0);
        let ones = bundle(&[0, 0, 0]).with_gluing(vec![q(1, 1); 3]).unwrap();
        assert_eq!(h0_oracle(&ones, 0).unwrap().h0, 1);
        let twisted = bundle(&[0, 0, 0])
            .with_gluing(vec![q(2, 1), q(1, 1), q(1, 1)])
            .unwrap();
        assert_eq!(h0_oracle(&twisted, 0).unwrap().h0, 0);
        let balanced = bundle(&[0, 0, 0])
            .with_gluing(vec![q(2, 1), q(1, 3), q(3, 2)])
            .unwrap();
        assert_eq!(h0_oracle(&balanced, 0).unwrap().h0, 1);
    }

    #[test]
    fn two_component_cycles() {
        // Two lines meeting twice: O(1) on each glues to a 2-dim space.
        assert_eq!(h0_oracle(&bundle(&[1, 1]), 5).unwrap().h0, 2);
        assert_eq!(h0_oracle(&bundle(&[2, -2]), 5).unwrap().h0, 1);
    }

    #[test]
    fn zero_gluing_rejected() {
        assert_eq!(
            bundle(&[0, 0]).with_gluing(vec![q(1, 1), q(0, 1)]),
            Err(CycleError::ZeroGluing { node: 2 })
        );
    }

    #[test]
    fn random_scalars_are_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let x = random_scalar(&mut rng);
            assert!(!x.is_zero());
            assert!(*x.denom() <= BigInt::from(9));
            let p = x.numer() * BigInt::from(9);
            assert!(p <= BigInt::from(81) && p >= BigInt::from(-81));
        }
    }

    #[test]
    fn tau() {
        assert_eq!(torsion_tau(TorsionSpec::Finite(1)), Tau::Finite(1));
        assert_eq!(torsion_tau(TorsionSpec::Finite(3)), Tau::Finite(3));
        assert_eq!(torsion_tau(TorsionSpec::NonTorsion), Tau::Infinite);
        assert!(TorsionSpec::finite(0).is_err());
    }
}
