use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{re, Real};

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T: Real> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self { dim, data: vec![Complex::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = re(d);
        }
        m
    }

    /// Builds a matrix from row-major entries; `data.len()` must be a
    /// perfect square.
    pub fn from_row_major(data: Vec<Complex<T>>) -> Result<Self> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != data.len() {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: data.len() });
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[&[Complex<T>]]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(data)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> Result<Complex<T>> {
        if row >= self.dim || col >= self.dim {
            return Err(Error::IndexOutOfBounds { row, col, dim: self.dim });
        }
        Ok(self.data[row * self.dim + col])
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex<T>) -> Result<()> {
        if row >= self.dim || col >= self.dim {
            return Err(Error::IndexOutOfBounds { row, col, dim: self.dim });
        }
        self.data[row * self.dim + col] = value;
        Ok(())
    }

    pub fn diagonal(&self) -> Vec<Complex<T>> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).map(|i| self[(i, i)]).fold(Complex::zero(), |acc, x| acc + x)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Entry-wise complex conjugate.
    pub fn conj(&self) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * k).collect() }
    }

    pub fn scale_real(&self, k: T) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| z * k).collect() }
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// `max |a[i,j] - conj(a[j,i])|`.
    pub fn hermiticity_deviation(&self) -> T {
        let n = self.dim;
        let mut worst = T::zero();
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_deviation() <= tol
    }

    /// Returns `(A + A†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let n = self.dim;
        let half = T::lit(0.5);
        let mut out = Self::zeros(n);
        for i in 0..n {
            out[(i, i)] = re(self[(i, i)].re);
            for j in (i + 1)..n {
                let z = (self[(i, j)] + self[(j, i)].conj()) * half;
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
        out
    }

    /// Frobenius norm of `self - other`.
    pub fn distance(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "distance between matrices of different dimension");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm_sqr())
            .sum::<T>()
            .sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim == other.dim && self.distance(other) <= tol
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: rhs.dim });
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.try_mul(other)? - other.try_mul(self)?)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&z| f(z)).collect() }
    }

    /// Converts the scalar type, e.g. f64 to f32.
    pub fn cast<U: Real>(&self) -> ComplexMatrix<U> {
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|z| Complex::new(U::lit(z.re.as_f64()), U::lit(z.im.as_f64())))
                .collect(),
        }
    }
}

/// Kronecker product of two matrices.
pub fn kronecker_product<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.kron(b)
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all<T: Real>(factors: &[&ComplexMatrix<T>]) -> ComplexMatrix<T> {
    let mut iter = factors.iter();
    let first = (*iter.next().expect("at least one factor")).clone();
    iter.fold(first, |acc, f| acc.kron(f))
}

impl<T: Real> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (row, col): (usize, usize)) -> &Complex<T> {
        assert!(row < self.dim && col < self.dim, "index ({row}, {col}) out of bounds");
        &self.data[row * self.dim + col]
    }
}

impl<T: Real> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut Complex<T> {
        assert!(row < self.dim && col < self.dim, "index ({row}, {col}) out of bounds");
        &mut self.data[row * self.dim + col]
    }
}

macro_rules! elementwise_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<T: Real> $trait<&ComplexMatrix<T>> for &ComplexMatrix<T> {
            type Output = ComplexMatrix<T>;

            fn $method(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                ComplexMatrix {
                    dim: self.dim,
                    data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a $op *b).collect(),
                }
            }
        }

        impl<T: Real> $trait for ComplexMatrix<T> {
            type Output = ComplexMatrix<T>;

            fn $method(self, rhs: ComplexMatrix<T>) -> ComplexMatrix<T> {
                &self $op &rhs
            }
        }
    };
}

elementwise_op!(Add, add, +);
elementwise_op!(Sub, sub, -);

impl<T: Real> Mul<&ComplexMatrix<T>> for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.try_mul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl<T: Real> Mul for ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: ComplexMatrix<T>) -> ComplexMatrix<T> {
        &self * &rhs
    }
}

impl<T: Real> Neg for ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn neg(self) -> ComplexMatrix<T> {
        self.map(|z| -z)
    }
}

impl<T: Real> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self[(i, j)];
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    type M = ComplexMatrix<f64>;

    fn pauli_x() -> M {
        M::from_rows(&[&[re(0.0), re(1.0)], &[re(1.0), re(0.0)]]).unwrap()
    }

    fn pauli_y() -> M {
        M::from_rows(&[&[re(0.0), c(0.0, -1.0)], &[c(0.0, 1.0), re(0.0)]]).unwrap()
    }

    #[test]
    fn identity_kron_identity() {
        assert!(M::identity(2).kron(&M::identity(2)).approx_eq(&M::identity(4), 0.0));
    }

    #[test]
    fn diagonal_kron() {
        let a = M::from_real_diagonal(&[1.0, 0.0]);
        let b = M::from_real_diagonal(&[0.0, 1.0]);
        let expected = M::from_real_diagonal(&[0.0, 1.0, 0.0, 0.0]);
        assert!(a.kron(&b).approx_eq(&expected, 0.0));
    }

    #[test]
    fn pauli_x_kron_pauli_y_antidiagonal() {
        // Expanded by hand: a[i,j] * b[k,l] lands at (2i+k, 2j+l).
        let k = pauli_x().kron(&pauli_y());
        let anti = [c(0.0, -1.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 1.0)];
        for r in 0..4 {
            for col in 0..4 {
                let expected = if r + col == 3 { anti[r] } else { re(0.0) };
                assert_eq!(k[(r, col)], expected, "entry ({r},{col})");
            }
        }
    }

    #[test]
    fn out_of_range_access_is_an_error() {
        let m = M::identity(2);
        assert!(matches!(m.get(2, 0), Err(Error::IndexOutOfBounds { .. })));
        assert!(m.get(1, 1).is_ok());
    }

    #[test]
    fn product_dimension_mismatch() {
        let err = M::identity(2).try_mul(&M::identity(4)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 4 });
    }

    #[test]
    fn non_square_row_major_rejected() {
        assert!(M::from_row_major(vec![re(1.0); 3]).is_err());
    }

    #[test]
    fn pauli_commutator() {
        // [X, Y] = 2iZ
        let z = M::from_real_diagonal(&[1.0, -1.0]).scale(c(0.0, 2.0));
        assert!(pauli_x().commutator(&pauli_y()).unwrap().approx_eq(&z, 1e-15));
    }
}
