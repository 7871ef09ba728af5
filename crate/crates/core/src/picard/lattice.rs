use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    RankMismatch { left: usize, right: usize },
    /// `d² − d·(−K)` is odd, so `d` cannot be the class of a curve.
    Parity,
    MultiplicityCount { expected: usize, found: usize },
    /// An infinitely-near record points at a missing or later point, or the
    /// curve passes through the upper point more often than the lower one.
    InfinitelyNear { point: usize, over: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RankMismatch { left, right } => {
                write!(f, "divisor classes of rank {left} and {right} do not pair")
            }
            Self::Parity => f.write_str("class violates the adjunction parity condition"),
            Self::MultiplicityCount { expected, found } => {
                write!(f, "expected {expected} multiplicities, got {found}")
            }
            Self::InfinitelyNear { point, over } => {
                write!(f, "inconsistent infinitely-near record: point {point} over point {over}")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// `Pic` of `P¹×P¹` blown up in `pairs` conjugate pairs of points.
///
/// Basis: `ℓ` (type (1,0), "lines"), `φ` (type (0,1), "fibres") and the
/// total transforms `E₁ … E₂ₙ`. The conjugate of the pair blown up at step `k`
/// occupies indices `2k − 1, 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceLattice {
    pairs: usize,
}

impl SurfaceLattice {
    pub fn new(pairs: usize) -> Self {
        Self { pairs }
    }

    pub fn pairs(&self) -> usize {
        self.pairs
    }

    pub fn points(&self) -> usize {
        2 * self.pairs
    }

    pub fn rank(&self) -> usize {
        2 * self.pairs + 2
    }

    /// Conjugate of exceptional index `i` (1-based).
    pub fn conjugate(&self, i: usize) -> usize {
        assert!((1..=self.points()).contains(&i), "exceptional index out of range");
        conjugate_point(i)
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass {
            line: 0,
            fibre: 0,
            exceptional: vec![0; self.points()],
        }
    }

    pub fn line(&self) -> DivisorClass {
        DivisorClass {
            line: 1,
            ..self.zero()
        }
    }

    pub fn fibre(&self) -> DivisorClass {
        DivisorClass {
            fibre: 1,
            ..self.zero()
        }
    }

    /// `Eᵢ`, 1-based.
    pub fn exceptional(&self, i: usize) -> DivisorClass {
        assert!((1..=self.points()).contains(&i), "exceptional index out of range");
        let mut d = self.zero();
        d.exceptional[i - 1] = 1;
        d
    }

    pub fn class(&self, line: i64, fibre: i64, exceptional: &[i64]) -> DivisorClass {
        assert_eq!(exceptional.len(), self.points(), "wrong number of exceptional coefficients");
        DivisorClass {
            line,
            fibre,
            exceptional: exceptional.to_vec(),
        }
    }

    /// `−K_S = 2ℓ + 2φ − ΣEᵢ`, with `(−K_S)² = 8 − 2n`.
    pub fn anticanonical_class(&self) -> DivisorClass {
        let k = DivisorClass {
            line: 2,
            fibre: 2,
            exceptional: vec![-1; self.points()],
        };
        debug_assert_eq!(k.self_intersection(), 8 - 2 * self.pairs as i64);
        k
    }

    /// Gram matrix in the basis `ℓ, φ, E₁, …`.
    pub fn gram_matrix(&self) -> IntMatrix {
        let r = self.rank();
        let mut g = IntMatrix::zeros(r, r);
        g.set(0, 1, BigInt::from(1));
        g.set(1, 0, BigInt::from(1));
        for i in 2..r {
            g.set(i, i, BigInt::from(-1));
        }
        g
    }
}

pub(crate) fn conjugate_point(i: usize) -> usize {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

/// `aℓ + bφ + Σ mᵢEᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub line: i64,
    pub fibre: i64,
    pub exceptional: Vec<i64>,
}

impl DivisorClass {
    pub fn pairs(&self) -> usize {
        self.exceptional.len() / 2
    }

    pub fn lattice(&self) -> SurfaceLattice {
        SurfaceLattice::new(self.pairs())
    }

    pub fn intersect(&self, other: &Self) -> Result<i64, LatticeError> {
        if self.exceptional.len() != other.exceptional.len() {
            return Err(LatticeError::RankMismatch {
                left: self.exceptional.len() + 2,
                right: other.exceptional.len() + 2,
            });
        }
        let exc: i64 = self
            .exceptional
            .iter()
            .zip(&other.exceptional)
            .map(|(a, b)| a * b)
            .sum();
        Ok(self.line * other.fibre + self.fibre * other.line - exc)
    }

    /// Pairing with a class known to live in the same lattice.
    pub(crate) fn dot(&self, other: &Self) -> i64 {
        self.intersect(other).expect("same lattice")
    }

    pub fn self_intersection(&self) -> i64 {
        self.dot(self)
    }

    /// `d·(−K_S)`.
    pub fn anticanonical_degree(&self) -> i64 {
        self.dot(&self.lattice().anticanonical_class())
    }

    /// Arithmetic genus `(d² − d·(−K))/2 + 1`.
    pub fn adjunction_genus(&self) -> Result<i64, LatticeError> {
        let twice = self.self_intersection() - self.anticanonical_degree();
        if twice % 2 != 0 {
            return Err(LatticeError::Parity);
        }
        Ok(twice / 2 + 1)
    }

    /// Image under the real structure: `ℓ, φ` fixed, `Eᵢ` swapped with its
    /// conjugate.
    pub fn real_involution(&self) -> Self {
        let mut exceptional = vec![0; self.exceptional.len()];
        for (i, &m) in self.exceptional.iter().enumerate() {
            exceptional[conjugate_point(i + 1) - 1] = m;
        }
        Self {
            line: self.line,
            fibre: self.fibre,
            exceptional,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.line == 0 && self.fibre == 0 && self.exceptional.iter().all(|&m| m == 0)
    }

    /// Coordinates `(a, b, m₁, …)` as a flat vector.
    pub fn coordinates(&self) -> Vec<i64> {
        let mut v = vec![self.line, self.fibre];
        v.extend_from_slice(&self.exceptional);
        v
    }
}

impl AddAssign<&DivisorClass> for DivisorClass {
    fn add_assign(&mut self, rhs: &DivisorClass) {
        assert_eq!(self.exceptional.len(), rhs.exceptional.len(), "rank mismatch");
        self.line += rhs.line;
        self.fibre += rhs.fibre;
        for (a, b) in self.exceptional.iter_mut().zip(&rhs.exceptional) {
            *a += b;
        }
    }
}

impl SubAssign<&DivisorClass> for DivisorClass {
    fn sub_assign(&mut self, rhs: &DivisorClass) {
        *self += &-rhs;
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: Self) -> DivisorClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: Self) -> DivisorClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        -1 * self
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass {
            line: self * rhs.line,
            fibre: self * rhs.fibre,
            exceptional: rhs.exceptional.iter().map(|m| self * m).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(self.line, "l".into()), (self.fibre, "f".into())]
            .into_iter()
            .chain(
                self.exceptional
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (m, alloc::format!("E{}", i + 1))),
            );
        let mut first = true;
        for (c, name) in terms {
            let name: alloc::string::String = name;
            if c == 0 {
                continue;
            }
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str("-")?,
                (false, false) => f.write_str("+")?,
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            f.write_str(&name)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Records that exceptional point `point` lies on the exceptional curve of
/// the earlier point `over` (both 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfinitelyNear {
    pub point: usize,
    pub over: usize,
}

fn check_infinitely_near(
    lattice: &SurfaceLattice,
    records: &[InfinitelyNear],
) -> Result<(), LatticeError> {
    let points = lattice.points();
    for r in records {
        let ok = (1..=points).contains(&r.point)
            && (1..=points).contains(&r.over)
            && r.over < r.point;
        if !ok {
            return Err(LatticeError::InfinitelyNear {
                point: r.point,
                over: r.over,
            });
        }
    }
    Ok(())
}

/// Class of the strict transform of a curve of type `(a, b)` passing through
/// the blown-up points with the given multiplicities: `aℓ + bφ − ΣmᵢEᵢ`.
///
/// Proximity is enforced: a curve can only pass through a point infinitely
/// near to `pⱼ` as often as it passes through `pⱼ`.
pub fn strict_transform(
    lattice: &SurfaceLattice,
    base: (i64, i64),
    multiplicities: &[u32],
    infinitely_near: &[InfinitelyNear],
) -> Result<DivisorClass, LatticeError> {
    if multiplicities.len() != lattice.points() {
        return Err(LatticeError::MultiplicityCount {
            expected: lattice.points(),
            found: multiplicities.len(),
        });
    }
    check_infinitely_near(lattice, infinitely_near)?;
    for r in infinitely_near {
        if multiplicities[r.point - 1] > multiplicities[r.over - 1] {
            return Err(LatticeError::InfinitelyNear {
                point: r.point,
                over: r.over,
            });
        }
    }
    let exceptional = multiplicities.iter().map(|&m| -i64::from(m)).collect();
    Ok(DivisorClass {
        line: base.0,
        fibre: base.1,
        exceptional,
    })
}

/// Strict transform of the exceptional curve of point `j`: `Eⱼ − ΣEᵢ` over
/// the points `i` lying directly on it.
pub fn exceptional_strict_transform(
    lattice: &SurfaceLattice,
    j: usize,
    infinitely_near: &[InfinitelyNear],
) -> Result<DivisorClass, LatticeError> {
    check_infinitely_near(lattice, infinitely_near)?;
    let mut class = lattice.exceptional(j);
    for r in infinitely_near.iter().filter(|r| r.over == j) {
        class -= &lattice.exceptional(r.point);
    }
    Ok(class)
}
