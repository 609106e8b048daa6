//! The matrix algebra `M_k(C)`.
//!
//! [`AlgebraElement`] is a dense row-major square complex matrix. It serves as
//! both the C*-algebra (with [`operator_norm`](AlgebraElement::operator_norm))
//! and the H*-algebra (with the Hilbert–Schmidt inner product, whose norm is
//! [`frobenius_norm`](AlgebraElement::frobenius_norm)).

mod eig;
mod norms;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use eig::EigenDecomposition;
pub use norms::SpectralRadius;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawElement")]
pub struct AlgebraElement {
    dim: usize,
    entries: Vec<Complex64>,
}

#[derive(Deserialize)]
struct RawElement {
    dim: usize,
    entries: Vec<Complex64>,
}

impl TryFrom<RawElement> for AlgebraElement {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        AlgebraElement::from_entries(raw.dim, raw.entries)
    }
}

impl AlgebraElement {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "algebra dimension must be positive");
        AlgebraElement {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, ONE)
    }

    /// `c * I`.
    pub fn scalar(dim: usize, c: Complex64) -> Self {
        let mut out = Self::zeros(dim);
        for i in 0..dim {
            out.entries[i * dim + i] = c;
        }
        out
    }

    pub fn diag_real(values: &[f64]) -> Self {
        let mut out = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            out.entries[i * values.len() + i] = Complex64::new(v, 0.0);
        }
        out
    }

    /// Builds an element from row-major entries, rejecting non-square or
    /// non-finite input.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite matrix entry".into()));
        }
        Ok(AlgebraElement { dim, entries })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::ShapeMismatch("matrix rows must form a square".into()));
        }
        Self::from_entries(dim, rows.iter().flatten().copied().collect())
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        AlgebraElement {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        AlgebraElement {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Hilbert–Schmidt norm `sqrt(sum |a_ij|^2)`.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `||a - a*||_F`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self.get(i, j) - self.get(j, i).conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect() <= crate::tolerance::TOL_HERM * (1.0 + self.frobenius_norm())
    }

    /// Bitwise equality with the adjoint.
    pub(crate) fn is_exactly_hermitian(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (i..n).all(|j| self.get(i, j) == self.get(j, i).conj()))
    }

    /// `(a + a*) / 2`.
    pub fn hermitian_part(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
            }
        }
        out
    }

    /// `a^* b` without forming the adjoint.
    pub fn adjoint_mul(&self, other: &AlgebraElement) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for l in 0..n {
            for i in 0..n {
                let a = self.entries[l * n + i].conj();
                if a == ZERO {
                    continue;
                }
                let row = &other.entries[l * n..(l + 1) * n];
                let dst = &mut out.entries[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &AlgebraElement) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `sum_i w_i a_i` for elements of equal dimension.
    pub fn linear_combination(weights: &[Complex64], items: &[&AlgebraElement]) -> Self {
        assert_eq!(weights.len(), items.len());
        let mut out = Self::zeros(items[0].dim);
        for (w, a) in weights.iter().zip(items) {
            for (d, s) in out.entries.iter_mut().zip(&a.entries) {
                *d += w * s;
            }
        }
        out
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AlgebraElement({}x{}) [", self.dim, self.dim)?;
        for row in self.entries.chunks(self.dim) {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>12.5e}{:+.5e}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&AlgebraElement> for AlgebraElement {
    fn add_assign(&mut self, rhs: &AlgebraElement) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

impl SubAssign<&AlgebraElement> for AlgebraElement {
    fn sub_assign(&mut self, rhs: &AlgebraElement) {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a -= b;
        }
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale_real(-1.0)
    }
}

impl Mul<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = AlgebraElement::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.entries[i * n + l];
                if a == ZERO {
                    continue;
                }
                let row = &rhs.entries[l * n..(l + 1) * n];
                let dst = &mut out.entries[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: &AlgebraElement) -> AlgebraElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn adjoint_examples() {
        let a = AlgebraElement::from_rows(&[vec![c(0.0, 1.0)]]).unwrap();
        assert_eq!(a.adjoint().get(0, 0), c(0.0, -1.0));

        let n = AlgebraElement::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let expected = AlgebraElement::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(n.adjoint(), expected);

        let h = AlgebraElement::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -3.0)],
            vec![c(1.0, 3.0), c(-1.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(h.adjoint(), h);
        assert_eq!(h.adjoint().adjoint(), h);
    }

    #[test]
    fn rejects_bad_shapes_and_nan() {
        assert!(AlgebraElement::from_real_rows(&[vec![1.0, 2.0]]).is_err());
        assert!(AlgebraElement::from_real_rows(&[]).is_err());
        assert!(AlgebraElement::from_real_rows(&[vec![f64::NAN]]).is_err());
        assert!(AlgebraElement::from_entries(2, vec![ZERO; 3]).is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(AlgebraElement::identity(3).trace(), c(3.0, 0.0));
        let n = AlgebraElement::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(n.trace(), ZERO);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(AlgebraElement::diag_real(&[3.0, 4.0]).frobenius_norm(), 5.0);
        assert_eq!(AlgebraElement::zeros(3).frobenius_norm(), 0.0);
    }

    #[test]
    fn adjoint_mul_matches_explicit_product() {
        let a = AlgebraElement::from_rows(&[
            vec![c(1.0, 2.0), c(0.5, -1.0)],
            vec![c(-0.3, 0.1), c(2.0, 0.0)],
        ])
        .unwrap();
        let b = AlgebraElement::from_rows(&[
            vec![c(0.0, 1.0), c(1.5, 0.5)],
            vec![c(2.0, -2.0), c(0.1, 0.0)],
        ])
        .unwrap();
        let direct = &a.adjoint() * &b;
        assert!(a.adjoint_mul(&b).max_abs_diff(&direct) < 1e-15);
    }
}
