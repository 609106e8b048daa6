//! Cyclic Jacobi eigensolver for complex Hermitian matrices.

use num_complex::Complex64;

use super::AlgebraElement;
use crate::error::{Error, Result};
use crate::tolerance::TOL_EIG;

const MAX_SWEEPS: usize = 64;

/// Largest dimension accepted by the eigensolver.
pub const MAX_DIM: usize = 64;

/// `a = V diag(values) V^*` with ascending `values` and unitary `V`
/// (eigenvectors are the columns).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: AlgebraElement,
}

impl EigenDecomposition {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().unwrap()
    }

    /// `V diag(f(values)) V^*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> AlgebraElement {
        let n = self.vectors.dim();
        let fv: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let mut out = AlgebraElement::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (l, &w) in fv.iter().enumerate() {
                    if w != 0.0 {
                        acc += self.vectors.get(i, l) * self.vectors.get(j, l).conj() * w;
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn reconstruct(&self) -> AlgebraElement {
        self.map(|l| l)
    }
}

impl AlgebraElement {
    /// Eigendecomposition of a Hermitian element.
    ///
    /// The input must satisfy `||a - a*||_F <= TOL_HERM (1 + ||a||_F)`; its
    /// Hermitian part is what gets diagonalized. Ties in the ascending order
    /// keep the order in which Jacobi left them on the diagonal.
    pub fn hermitian_eig(&self) -> Result<EigenDecomposition> {
        if !self.is_hermitian() {
            return Err(Error::NotHermitian {
                residual: self.hermitian_defect(),
            });
        }
        if self.dim > MAX_DIM {
            return Err(Error::InvalidInput(format!(
                "eigensolver dimension {} exceeds {MAX_DIM}",
                self.dim
            )));
        }
        Ok(jacobi(&self.hermitian_part()))
    }
}

fn off_diagonal_norm(m: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[i * n + j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi(a: &AlgebraElement) -> EigenDecomposition {
    let n = a.dim();
    let mut m = a.entries().to_vec();
    let mut v = AlgebraElement::identity(n).entries().to_vec();
    let tol = TOL_EIG * a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m, n) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, n, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i * n + i].re.total_cmp(&m[j * n + j].re));

    let values = order.iter().map(|&i| m[i * n + i].re).collect();
    let mut vectors = AlgebraElement::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, col, v[row * n + src]);
        }
    }
    EigenDecomposition { values, vectors }
}

/// One complex Jacobi rotation annihilating `m[p][q]`.
///
/// With `m_pq = |m_pq| e^{i phi}` the rotation is `J = D P`, where
/// `D = diag(1, e^{-i phi})` makes the pivot real and `P` is the real
/// symmetric Jacobi rotation. Applies `m <- J^* m J` and `v <- v J`.
fn rotate(m: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = m[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = m[p * n + p].re;
    let aqq = m[q * n + q].re;

    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_finite() && theta.abs() < 1e150 {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        0.5 / theta
    };
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    // columns: m <- m J
    for r in 0..n {
        let arp = m[r * n + p];
        let arq = m[r * n + q];
        m[r * n + p] = arp * c + arq * jqp;
        m[r * n + q] = arp * s + arq * jqq;
    }
    // rows: m <- J^* m
    for col in 0..n {
        let apj = m[p * n + col];
        let aqj = m[q * n + col];
        m[p * n + col] = apj * c + aqj * jqp.conj();
        m[q * n + col] = apj * s + aqj * jqq.conj();
    }
    m[p * n + q] = Complex64::new(0.0, 0.0);
    m[q * n + p] = Complex64::new(0.0, 0.0);
    m[p * n + p] = Complex64::new(m[p * n + p].re, 0.0);
    m[q * n + q] = Complex64::new(m[q * n + q].re, 0.0);

    for r in 0..n {
        let vrp = v[r * n + p];
        let vrq = v[r * n + q];
        v[r * n + p] = vrp * c + vrq * jqp;
        v[r * n + q] = vrp * s + vrq * jqq;
    }
}
