//! Exact linear algebra over the integers.
//!
//! Determinants and ranks use fraction-free (Bareiss) elimination, so every
//! intermediate value stays an integer. Kernels are computed over the
//! rationals and returned as primitive integer vectors.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Result of forward Bareiss elimination.
struct Echelon {
    data: Vec<BigInt>,
    pivots: Vec<usize>,
    swaps: usize,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let nrows = rows.len();
        Self {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Builds an integer matrix with the same row space as the given rational
    /// rows: each row is scaled by the lcm of its denominators.
    pub fn from_rational_rows(rows: &[Vec<BigRational>]) -> Self {
        let scaled = rows
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect::<Vec<_>>()
            })
            .collect();
        Self::from_rows(scaled)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Computes `self · v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    fn echelon(&self) -> Echelon {
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(p * cols + j, r * cols + j);
                }
                swaps += 1;
            }
            let pivot = m[r * cols + c].clone();
            for i in r + 1..rows {
                let lead = m[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = &pivot * &m[i * cols + j] - &lead * &m[r * cols + j];
                    m[i * cols + j] = v / &prev;
                }
                m[i * cols + c] = BigInt::zero();
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        Echelon {
            data: m,
            pivots,
            swaps,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Determinant by fraction-free elimination. Panics if not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let e = self.echelon();
        if e.pivots.len() < n {
            return BigInt::zero();
        }
        let last = e.data[n * n - 1].clone();
        if e.swaps % 2 == 1 {
            -last
        } else {
            last
        }
    }

    /// Basis of the rational kernel `{v : self·v = 0}`, each vector scaled to
    /// a primitive integer vector with a positive leading entry.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<BigRational> = self
            .data
            .iter()
            .map(|v| BigRational::from_integer(v.clone()))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
            let inv = m[r * cols + c].recip();
            for j in 0..cols {
                m[r * cols + j] = &m[r * cols + j] * &inv;
            }
            for i in 0..rows {
                if i == r || m[i * cols + c].is_zero() {
                    continue;
                }
                let f = m[i * cols + c].clone();
                for j in 0..cols {
                    let v = &m[i * cols + j] - &f * &m[r * cols + j];
                    m[i * cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free = (0..cols).filter(|c| !pivots.contains(c));
        free.map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[pr * cols + f].clone();
            }
            primitive(&v)
        })
        .collect()
    }
}

/// Clears denominators and divides out the content; the first nonzero entry
/// is made positive.
pub fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|v| alloc::format!("{v}").len())
            .max()
            .unwrap_or(1);
        for r in 0..self.rows {
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn small_determinants() {
        assert_eq!(m(&[&[2, 1], &[-1, -2]]).determinant(), BigInt::from(-3));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).determinant(),
            BigInt::from(-3)
        );
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), BigInt::zero());
        assert_eq!(IntMatrix::identity(5).determinant(), BigInt::one());
    }

    #[test]
    fn rank_with_skipped_columns() {
        let a = m(&[&[0, 1, 2, 3], &[0, 2, 4, 6], &[0, 0, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(IntMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn kernel_is_primitive() {
        let a = m(&[&[2, 4, 6]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        let b = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(b.kernel_basis(), vec![vec![BigInt::from(1), BigInt::from(-1)]]);
    }

    #[test]
    fn rational_rows_keep_rank() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let rows = vec![
            vec![half.clone(), BigRational::one()],
            vec![BigRational::one(), BigRational::from_integer(BigInt::from(2))],
        ];
        let a = IntMatrix::from_rational_rows(&rows);
        assert_eq!(a.row(0), &[BigInt::from(1), BigInt::from(2)]);
        assert_eq!(a.rank(), 1);
    }
}
