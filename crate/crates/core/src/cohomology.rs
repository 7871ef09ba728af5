//! The integral cohomology ring of a simply connected twistor space `Z` over
//! `n·CP²`.
//!
//! `H*(Z, Z) = Z[x₁..xₙ, w] / (xᵢ² − xⱼ², xᵢxⱼ (i ≠ j), w² + wΣxᵢ + x₁²)`.
//!
//! Classes are stored in a fixed basis per degree:
//!
//! | degree | basis                   |
//! |--------|-------------------------|
//! | 0      | `1`                     |
//! | 2      | `x₁, …, xₙ, w`          |
//! | 4      | `wx₁, …, wxₙ, x₁²`      |
//! | 6      | `wx₁²`                  |
//!
//! Degree 4 uses `x₁²` rather than `w²`, so the dual class of a real twistor
//! fibre (`−x₁²`) is a basis vector. The top class `wx₁²` evaluates to `−1`
//! on the fundamental class; with this normalisation `deg(w) = 1` on real
//! twistor lines and `c₁³ = 16(4 − n)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyError {
    /// Classes over different numbers of `CP²` summands.
    MismatchedN { left: usize, right: usize },
    /// Product would land above the top degree.
    DegreeOverflow { degree: u8 },
    /// An operation that only makes sense in one degree got another.
    WrongDegree { expected: u8, found: u8 },
    InvalidDegree(u8),
    /// Coefficient vector does not fit the basis of its degree.
    BadLength { degree: u8, expected: usize, found: usize },
    InvalidN,
}

impl fmt::Display for CohomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MismatchedN { left, right } => {
                write!(f, "classes live over different n ({left} vs {right})")
            }
            Self::DegreeOverflow { degree } => {
                write!(f, "product has degree {degree}, above the top degree 6")
            }
            Self::WrongDegree { expected, found } => {
                write!(f, "expected a class of degree {expected}, got degree {found}")
            }
            Self::InvalidDegree(d) => write!(f, "degree {d} is not one of 0, 2, 4, 6"),
            Self::BadLength {
                degree,
                expected,
                found,
            } => write!(
                f,
                "degree {degree} needs {expected} coefficients, got {found}"
            ),
            Self::InvalidN => f.write_str("n must be at least 1"),
        }
    }
}

impl core::error::Error for CohomologyError {}

/// An element of `H^degree(Z, Z)` in the fixed basis described above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    n: usize,
    degree: u8,
    coeffs: Vec<BigInt>,
}

fn basis_len(n: usize, degree: u8) -> Result<usize, CohomologyError> {
    match degree {
        0 | 6 => Ok(1),
        2 | 4 => Ok(n + 1),
        d => Err(CohomologyError::InvalidDegree(d)),
    }
}

impl CohomologyClass {
    pub fn new(n: usize, degree: u8, coeffs: Vec<BigInt>) -> Result<Self, CohomologyError> {
        if n == 0 {
            return Err(CohomologyError::InvalidN);
        }
        let expected = basis_len(n, degree)?;
        if coeffs.len() != expected {
            return Err(CohomologyError::BadLength {
                degree,
                expected,
                found: coeffs.len(),
            });
        }
        Ok(Self { n, degree, coeffs })
    }

    pub fn from_i64(n: usize, degree: u8, coeffs: &[i64]) -> Result<Self, CohomologyError> {
        Self::new(n, degree, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize, degree: u8) -> Result<Self, CohomologyError> {
        let len = basis_len(n, degree)?;
        Self::new(n, degree, vec![BigInt::zero(); len])
    }

    fn unit(n: usize, degree: u8, slot: usize) -> Self {
        let mut c = Self::zero(n, degree).expect("valid degree");
        c.coeffs[slot] = BigInt::one();
        c
    }

    pub fn one(n: usize) -> Self {
        Self::unit(n, 0, 0)
    }

    /// `xᵢ`, 1-based.
    pub fn x(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "x index out of range");
        Self::unit(n, 2, i - 1)
    }

    pub fn w(n: usize) -> Self {
        Self::unit(n, 2, n)
    }

    /// `wxᵢ`, 1-based.
    pub fn wx(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "x index out of range");
        Self::unit(n, 4, i - 1)
    }

    pub fn x1_squared(n: usize) -> Self {
        Self::unit(n, 4, n)
    }

    pub fn wx1_squared(n: usize) -> Self {
        Self::unit(n, 6, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), CohomologyError> {
        if self.n != other.n {
            return Err(CohomologyError::MismatchedN {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Sum of two classes of the same degree.
    pub fn checked_add(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(CohomologyError::WrongDegree {
                expected: self.degree,
                found: other.degree,
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            n: self.n,
            degree: self.degree,
            coeffs,
        })
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Cup product, reduced to the fixed basis.
    pub fn cup(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.check_compatible(other)?;
        let degree = self.degree + other.degree;
        if degree > 6 {
            return Err(CohomologyError::DegreeOverflow { degree });
        }
        // All degrees are even, so the product is commutative; order by degree.
        let (lo, hi) = if self.degree <= other.degree {
            (self, other)
        } else {
            (other, self)
        };
        let n = self.n;
        if lo.degree == 0 {
            return Ok(hi.scaled(&lo.coeffs[0]));
        }
        match (lo.degree, hi.degree) {
            (2, 2) => {
                // (Σaᵢxᵢ + bw)(Σa'ᵢxᵢ + b'w)
                //   = Σaᵢa'ᵢ·x₁² + Σ(aᵢb' + ba'ᵢ)·wxᵢ + bb'·w²,
                // with w² = −Σwxᵢ − x₁².
                let (a, b) = lo.coeffs.split_at(n);
                let (a2, b2) = hi.coeffs.split_at(n);
                let (b, b2) = (&b[0], &b2[0]);
                let bb = b * b2;
                let mut coeffs: Vec<BigInt> = a
                    .iter()
                    .zip(a2)
                    .map(|(ai, a2i)| ai * b2 + b * a2i - &bb)
                    .collect();
                let sq = a
                    .iter()
                    .zip(a2)
                    .fold(BigInt::zero(), |acc, (ai, a2i)| acc + ai * a2i);
                coeffs.push(sq - &bb);
                Ok(Self { n, degree, coeffs })
            }
            (2, 4) => {
                // xᵢ·wxⱼ = δᵢⱼ wx₁², xᵢ·x₁² = 0, w·wxⱼ = −wx₁², w·x₁² = wx₁².
                let (a, b) = lo.coeffs.split_at(n);
                let (c, d) = hi.coeffs.split_at(n);
                let (b, d) = (&b[0], &d[0]);
                let diag = a
                    .iter()
                    .zip(c)
                    .fold(BigInt::zero(), |acc, (ai, ci)| acc + ai * ci);
                let csum = c.iter().fold(BigInt::zero(), |acc, ci| acc + ci);
                let e = diag - b * csum + b * d;
                Ok(Self {
                    n,
                    degree,
                    coeffs: vec![e],
                })
            }
            _ => unreachable!("degree bound checked above"),
        }
    }

    /// Pairing of a top-degree class with the fundamental class of `Z`.
    pub fn evaluate(&self) -> Result<BigInt, CohomologyError> {
        if self.degree != 6 {
            return Err(CohomologyError::WrongDegree {
                expected: 6,
                found: self.degree,
            });
        }
        Ok(-self.coeffs[0].clone())
    }

    /// Degree of the line bundle with this first Chern class on a real
    /// twistor line: the `w`-coefficient.
    pub fn degree_map(&self) -> Result<BigInt, CohomologyError> {
        if self.degree != 2 {
            return Err(CohomologyError::WrongDegree {
                expected: 2,
                found: self.degree,
            });
        }
        Ok(self.coeffs[self.n].clone())
    }
}

impl Add for &CohomologyClass {
    type Output = CohomologyClass;
    fn add(self, rhs: Self) -> CohomologyClass {
        self.checked_add(rhs).expect("incompatible classes")
    }
}

impl Sub for &CohomologyClass {
    type Output = CohomologyClass;
    fn sub(self, rhs: Self) -> CohomologyClass {
        self.checked_add(&-rhs).expect("incompatible classes")
    }
}

impl Neg for &CohomologyClass {
    type Output = CohomologyClass;
    fn neg(self) -> CohomologyClass {
        self.scaled(&-BigInt::one())
    }
}

impl Mul<&CohomologyClass> for i64 {
    type Output = CohomologyClass;
    fn mul(self, rhs: &CohomologyClass) -> CohomologyClass {
        rhs.scaled(&BigInt::from(self))
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let label = |slot: usize| -> alloc::string::String {
            match self.degree {
                0 => "1".into(),
                2 if slot < n => alloc::format!("x{}", slot + 1),
                2 => "w".into(),
                4 if slot < n => alloc::format!("wx{}", slot + 1),
                4 => "x1^2".into(),
                _ => "wx1^2".into(),
            }
        };
        let mut first = true;
        for (slot, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let name = label(slot);
            if self.degree == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&name)?;
            } else {
                write!(f, "{mag}{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Chern numbers of `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    pub c1_cubed: BigInt,
    pub c1_c2: BigInt,
    pub c3: BigInt,
}

/// `c₁(Z) = 4w + 2Σxᵢ`.
pub fn first_chern_class(n: usize) -> CohomologyClass {
    let mut coeffs = vec![BigInt::from(2); n];
    coeffs.push(BigInt::from(4));
    CohomologyClass::new(n, 2, coeffs).expect("n >= 1")
}

/// `c₂(Z) = −6x₁²`.
pub fn second_chern_class(n: usize) -> CohomologyClass {
    -6 * &CohomologyClass::x1_squared(n)
}

/// Chern numbers evaluated in the ring, cross-checked against the closed forms
/// `c₁³ = 16(4 − n)`, `c₁c₂ = 24`, `c₃ = 2(n + 2)`.
pub fn chern_numbers(n: usize) -> ChernData {
    assert!(n >= 1, "n must be at least 1");
    let c1 = first_chern_class(n);
    let c2 = second_chern_class(n);
    let cube = c1.cup(&c1).and_then(|sq| sq.cup(&c1)).expect("degree 6");
    let data = ChernData {
        c1_cubed: cube.evaluate().expect("degree 6"),
        c1_c2: c1.cup(&c2).and_then(|p| p.evaluate()).expect("degree 6"),
        c3: BigInt::from(2 * (n as i64 + 2)),
    };
    assert_eq!(data.c1_cubed, BigInt::from(16 * (4 - n as i64)));
    assert_eq!(data.c1_c2, BigInt::from(24));
    data
}

/// The class `2w + Σxᵢ` of the fundamental line bundle, `c₁/2`.
pub fn fundamental_class(n: usize) -> CohomologyClass {
    assert!(n >= 1, "n must be at least 1");
    let mut coeffs = vec![BigInt::one(); n];
    coeffs.push(BigInt::from(2));
    let fund = CohomologyClass::new(n, 2, coeffs).expect("n >= 1");
    assert_eq!(2 * &fund, first_chern_class(n));
    fund
}

/// Cup product with the fundamental class as a map `H² → H⁴`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    /// Row `j` holds the image of the `j`-th basis vector of `H²`
    /// (`x₁, …, xₙ, w`) in the basis `wx₁, …, wxₙ, x₁²` of `H⁴`.
    pub matrix: IntMatrix,
    pub det: BigInt,
}

/// With rows as images this reproduces the familiar layout
/// `[2·I | 1; −1 … −1 | −2]`, whose determinant is `2ⁿ⁻¹(n − 4)` with sign.
pub fn pairing_matrix(n: usize) -> PairingMatrix {
    let fund = fundamental_class(n);
    let rows: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| CohomologyClass::x(n, i))
        .chain(core::iter::once(CohomologyClass::w(n)))
        .map(|basis| basis.cup(&fund).expect("degree 4").coeffs)
        .collect();
    let matrix = IntMatrix::from_rows(rows);
    let det = matrix.determinant();
    let expected = (BigInt::one() << (n - 1)) * BigInt::from(n as i64 - 4);
    assert_eq!(det, expected, "pairing determinant");
    PairingMatrix { matrix, det }
}

/// `χ(Z, Fᵐ) = m + 1 + 2(4 − n)·C(m + 2, 3)`, where `F` is the fundamental
/// line bundle.
pub fn euler_char_fundamental(n: usize, m: u64) -> BigInt {
    assert!(n >= 1, "n must be at least 1");
    let m = BigInt::from(m);
    let binom = (&m + 2u32) * (&m + 1u32) * &m / 6u32;
    &m + 1u32 + BigInt::from(2 * (4 - n as i64)) * binom
}

/// Cohomology indices `i` with `Hⁱ(Z, L) = 0` forced by the degree of `L` on
/// real twistor lines, for `Z` of positive type.
pub fn vanishing_profile(line_bundle_degree: i64) -> BTreeSet<u8> {
    let d = line_bundle_degree;
    let mut out = BTreeSet::new();
    if d <= -1 {
        out.insert(0);
    }
    if d <= -2 {
        out.insert(1);
    }
    if d >= -2 {
        out.insert(2);
    }
    if d >= -3 {
        out.insert(3);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn basic_relations() {
        let n = 4;
        let x1 = CohomologyClass::x(n, 1);
        let x2 = CohomologyClass::x(n, 2);
        assert!(x1.cup(&x2).unwrap().is_zero());
        assert_eq!(x2.cup(&x2).unwrap(), CohomologyClass::x1_squared(n));
        let w = CohomologyClass::w(n);
        let w2 = w.cup(&w).unwrap();
        assert_eq!(w2, CohomologyClass::from_i64(n, 4, &[-1, -1, -1, -1, -1]).unwrap());
        assert_eq!(CohomologyClass::one(n).cup(&w).unwrap(), w);
        let w3 = w2.cup(&w).unwrap();
        assert_eq!(w3, 3 * &CohomologyClass::wx1_squared(n));
    }

    #[test]
    fn errors() {
        let a = CohomologyClass::w(3);
        let b = CohomologyClass::w(4);
        assert_eq!(
            a.cup(&b),
            Err(CohomologyError::MismatchedN { left: 3, right: 4 })
        );
        let sq = b.cup(&b).unwrap();
        assert_eq!(
            sq.cup(&sq),
            Err(CohomologyError::DegreeOverflow { degree: 8 })
        );
        assert!(b.evaluate().is_err());
        assert!(sq.degree_map().is_err());
        assert!(CohomologyClass::from_i64(2, 3, &[1]).is_err());
        assert!(CohomologyClass::from_i64(2, 2, &[1]).is_err());
    }

    #[test]
    fn evaluation_and_chern() {
        assert_eq!(
            CohomologyClass::wx1_squared(4).evaluate().unwrap(),
            BigInt::from(-1)
        );
        assert!(CohomologyClass::zero(4, 6).unwrap().evaluate().unwrap().is_zero());
        let cases = [(4, 0, 12), (3, 16, 10), (1, 48, 6)];
        for (n, cube, c3) in cases {
            let c = chern_numbers(n);
            assert_eq!(c.c1_cubed, BigInt::from(cube));
            assert_eq!(c.c1_c2, BigInt::from(24));
            assert_eq!(c.c3, BigInt::from(c3));
        }
    }

    #[test]
    fn degree_map_values() {
        assert_eq!(fundamental_class(4).degree_map().unwrap(), BigInt::from(2));
        assert!(CohomologyClass::x(4, 1).degree_map().unwrap().is_zero());
        assert_eq!(first_chern_class(7).degree_map().unwrap(), BigInt::from(4));
    }

    #[test]
    fn pairing_determinants() {
        assert!(pairing_matrix(4).det.is_zero());
        assert_eq!(pairing_matrix(3).det, BigInt::from(-4));
        assert_eq!(pairing_matrix(5).det, BigInt::from(16));
        assert_eq!(pairing_matrix(1).det, BigInt::from(-3));
        let p = pairing_matrix(2);
        assert_eq!(p.matrix.to_string(), " 2  0  1\n 0  2  1\n-1 -1 -2");
    }

    #[test]
    fn riemann_roch_values() {
        assert_eq!(euler_char_fundamental(4, 5), BigInt::from(6));
        assert_eq!(euler_char_fundamental(4, 0), BigInt::from(1));
        assert_eq!(euler_char_fundamental(5, 1), BigInt::from(0));
        // m = 1: χ(F) = 2 + 2(4 − n), matches h⁰(F) = 10 − 2n for n small.
        assert_eq!(euler_char_fundamental(1, 1), BigInt::from(8));
    }

    #[test]
    fn vanishing() {
        let v = |d| vanishing_profile(d).into_iter().collect::<Vec<_>>();
        assert_eq!(v(-2), vec![0, 1, 2, 3]);
        assert_eq!(v(0), vec![2, 3]);
        assert_eq!(v(-4), vec![0, 1]);
        assert_eq!(v(-3), vec![0, 1, 3]);
        assert_eq!(v(-1), vec![0, 2, 3]);
    }

    #[test]
    fn display() {
        let n = 4;
        let w = CohomologyClass::w(n);
        assert_eq!(w.cup(&w).unwrap().to_string(), "-wx1 - wx2 - wx3 - wx4 - x1^2");
        assert_eq!(fundamental_class(2).to_string(), "x1 + x2 + 2w");
        assert_eq!(CohomologyClass::zero(2, 6).unwrap().to_string(), "0");
        assert_eq!((-3 * &CohomologyClass::one(2)).to_string(), "-3");
    }
}
