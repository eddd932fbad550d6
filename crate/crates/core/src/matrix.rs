//! Dense exact rational matrices and fraction-free elimination.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exterior::{Blade, Multivector, SpaceId};
use crate::scalar::{self, Scalar};

/// A rational `rows × cols` matrix stored row-major.
///
/// Operators on an exterior algebra are square with rows and columns indexed
/// by blade bitmask.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// An operator on `ΛV` as a `2^dim × 2^dim` matrix.
pub type EndoMatrix = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix of the linear map on `ΛV` whose value on each basis blade is
    /// given by `f`.
    pub fn from_blade_map<F>(space: SpaceId, mut f: F) -> Self
    where
        F: FnMut(Blade) -> Multivector,
    {
        let n = space.blade_count();
        let mut m = Matrix::zeros(n, n);
        for b in Blade::all(space.dim()) {
            let image = f(b);
            for (k, c) in image.terms() {
                m.set(k.index(), b.index(), c.clone());
            }
        }
        m
    }

    /// Matrix of a linear map on the vector space itself (`dim × dim`),
    /// given by the images of the basis vectors.
    pub fn from_vector_map<F>(dim: usize, mut f: F) -> Self
    where
        F: FnMut(usize) -> Multivector,
    {
        let mut m = Matrix::zeros(dim, dim);
        for j in 0..dim {
            for (k, c) in f(j).terms() {
                debug_assert_eq!(k.grade(), 1);
                m.set(k.bits().trailing_zeros() as usize, j, c.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Matrix) -> Matrix {
        &(self * other) + &(other * self)
    }

    /// Applies a square operator on `ΛV` to a multivector over `V`.
    pub fn apply(&self, x: &Multivector) -> Multivector {
        assert!(self.is_square() && self.rows == x.space().blade_count(), "operator size mismatch");
        let mut out = Multivector::zero(x.space());
        for (b, c) in x.terms() {
            let j = b.index();
            for i in 0..self.rows {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.add_term(Blade::from_bits(i as u32), v * c);
                }
            }
        }
        out
    }

    /// Applies a `dim × dim` matrix to a grade-1 multivector.
    pub fn apply_vector(&self, x: &Multivector) -> Multivector {
        assert!(self.is_square() && self.rows == x.space().dim(), "operator size mismatch");
        let mut out = Multivector::zero(x.space());
        for (b, c) in x.terms() {
            assert_eq!(b.grade(), 1, "apply_vector expects a grade-1 element");
            let j = b.bits().trailing_zeros() as usize;
            for i in 0..self.rows {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.add_term(Blade::basis(i), v * c);
                }
            }
        }
        out
    }

    /// Column `j` of a `dim × dim` matrix as a vector over `space`.
    pub fn column_vector(&self, space: SpaceId, j: usize) -> Multivector {
        let mut out = Multivector::zero(space);
        for i in 0..self.rows {
            out.add_term(Blade::basis(i), self.get(i, j).clone());
        }
        out
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let k = self.data.iter().zip(&other.data).position(|(a, b)| a != b)?;
        Some((k / self.cols, k % self.cols))
    }

    /// Exact rank over ℚ.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.integer_rows())
    }

    /// One solution of `self · x = b`, or `None` if inconsistent. Free
    /// variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        let rows = integer_rows(&mut aug);
        let (ech, pivots) = bareiss(rows);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate().rev() {
            let row = &ech[r];
            let mut acc = Scalar::from_integer(row[self.cols].clone());
            for (j, xj) in x.iter().enumerate().skip(p + 1) {
                if !row[j].is_zero() {
                    acc -= Scalar::from_integer(row[j].clone()) * xj;
                }
            }
            x[p] = acc / Scalar::from_integer(row[p].clone());
        }
        Some(x)
    }

    /// Dimension of the null space.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        integer_rows(&mut rows)
    }
}

/// Scales each row by the lcm of its denominators.
fn integer_rows(rows: &mut [Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) row echelon form. Returns the reduced rows and
/// the pivot column of each nonzero row.
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn rank_mod_prime(rows: &[Vec<BigInt>]) -> usize {
    let p = BigInt::from(PRIME);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| row.iter().map(|v| v.mod_floor(&p).to_u64().unwrap_or(0)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], PRIME - 2);
        let (top, rest) = m.split_at_mut(r + 1);
        let pr = &top[r];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv);
            for j in c..ncols {
                if pr[j] != 0 {
                    row[j] = (row[j] + PRIME - mul_mod(f, pr[j])) % PRIME;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank over ℚ of an integer matrix. A full rank modulo a prime certifies
/// full rank over ℚ (a nonzero maximal minor mod p is nonzero in ℤ);
/// otherwise the exact fraction-free elimination decides.
fn rank_of_rows(rows: Vec<Vec<BigInt>>) -> usize {
    let full = rows.len().min(rows.first().map_or(0, Vec::len));
    if full == 0 {
        return 0;
    }
    if rank_mod_prime(&rows) == full {
        return full;
    }
    bareiss(rows).1.len()
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product size mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scaled(&-Scalar::one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar::format).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
        assert_eq!(Matrix::identity(5).rank(), 5);
    }

    #[test]
    fn rank_with_fractions() {
        let a = Matrix::from_rows(vec![vec![frac(1, 2), frac(1, 3)], vec![frac(3, 2), int(1)]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn rank_falls_back_when_prime_divides_minor() {
        // The only 2x2 minor is the working prime itself.
        let p = BigInt::from(PRIME);
        let rows = vec![
            vec![Scalar::from_integer(BigInt::one()), Scalar::from_integer(BigInt::zero())],
            vec![Scalar::from_integer(BigInt::one()), Scalar::from_integer(p)],
        ];
        assert_eq!(Matrix::from_rows(rows).rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = a.solve(&[int(3), int(1), int(4)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert!(a.solve(&[int(3), int(1), int(5)]).is_none());
        let b = m(&[&[2, 4]]);
        let y = b.solve(&[int(1)]).unwrap();
        assert_eq!(y, vec![frac(1, 2), int(0)]);
    }

    #[test]
    fn product_and_commutator() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.commutator(&b), m(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.anticommutator(&b), Matrix::identity(2));
    }
}
